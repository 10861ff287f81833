// Acceptance suite: one line per criterion, exact values pinned, no
// tolerances anywhere (the arithmetic is rational). Exit status is the
// number of failed criteria.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liewhit/liewhit.hpp"
#include "oracles.hpp"

using namespace liewhit;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << label << note
            << "\n";
  if (!ok) ++failures;
}

Character chi(const LiePresentation& p, const std::string& tag, const Rational& v) {
  Character c;
  c.values[p.index_of(tag)] = v;
  return c;
}

}  // namespace

int main() {
  criterion(1, "self-extensions of M_lambda at nonzero lambda vanish above degree zero", [] {
    for (const auto& lam : {Rational(1), Rational(-2), rat(2, 3)}) {
      auto t = ext_solvable2d_nonzero(lam, 8);
      if (t.at(0) != 1) return false;
      for (const auto& [i, d] : t.dims)
        if (i >= 1 && d != 0) return false;
    }
    return true;
  });

  criterion(2, "extension grid between one-dimensional modules", [] {
    for (const auto& mu : {Rational(0), Rational(1), Rational(-1)}) {
      for (const auto& nu : {Rational(mu - 1), mu, Rational(mu + 1), Rational(mu + 2),
                             Rational(mu + rat(1, 2))}) {
        auto t = ext_solvable2d_zero(mu, nu);
        long e1_want = (nu == mu || nu == mu + 1) ? 1 : 0;
        long e2_want = nu == mu + 1 ? 1 : 0;
        if (t.at(1) != e1_want || t.at(2) != e2_want) return false;
        for (const auto& [i, d] : t.dims)
          if (i >= 3 && d != 0) return false;
      }
    }
    return true;
  });

  criterion(3, "V_k data, quiver relation, and the ladder quiver on a coset window", [] {
    for (int k = 1; k <= 6; ++k)
      for (const auto& mu : {Rational(0), Rational(1), Rational(-3)}) {
        auto r = vk_module(k, mu);
        if (r.dim != static_cast<long>(k) * k || r.end_dim != k) return false;
      }
    for (int k : {1, 2, 4})
      for (const auto& mu : {Rational(0), Rational(1), Rational(-3)})
        if (!quiver_relation_check(k, mu).pass()) return false;
    auto q = ext_quiver_assemble({Rational(0), Rational(1), Rational(2), Rational(3)},
                                 {rat(1, 2), rat(3, 2), rat(5, 2), rat(7, 2)});
    if (!q.cross_coset_clean) return false;
    int loops = 0, steps = 0;
    for (const auto& ar : q.arrows) {
      if (ar.from == ar.to)
        ++loops;
      else if (ar.to == ar.from + 1)
        ++steps;
      else
        return false;
    }
    return loops == 4 && steps == 3 && q.arrows.size() == 7;
  });

  criterion(4, "lower central series of the positive Witt span in the window", [] {
    auto v = catalog("v_1", {std::pair<long, long>{1, 12}, {}});
    std::vector<int> all(v.size());
    for (int i = 0; i < v.size(); ++i) all[i] = i;
    auto cs = lower_central_series(v, all, 12);
    for (int k = 1; k <= 8; ++k) {
      RowSpace expect(v.size());
      for (long i = k + 2; i <= 12; ++i) {
        std::vector<Rational> e(v.size(), Rational(0));
        e[v.index_of("e" + std::to_string(i))] = 1;
        expect.insert(e);
      }
      if (!(cs.chain.at(k) == expect)) return false;
    }
    auto qn = quasi_nilpotent_check(v, all, 16);
    return qn.to_string() == "yes-within-window";
  });

  criterion(5, "Whittaker pair verdicts across the catalog", [] {
    auto expect_pair = [](const LiePresentation& p, const std::vector<int>& n) {
      return whittaker_pair_check(p, n, 16).kind == PairVerdict::Kind::Pair;
    };
    auto s = catalog("solvable2d");
    if (!expect_pair(s, s.part("n"))) return false;
    auto h = catalog("heisenberg3d");
    if (!expect_pair(h, h.part("n"))) return false;
    auto sl = catalog("sl2");
    if (!expect_pair(sl, {sl.index_of("e")})) return false;
    auto ex22 = catalog("v_op_1", {std::pair<long, long>{-8, 1}, {}});
    if (!expect_pair(ex22, {ex22.index_of("e1")})) return false;
    auto ex23 = catalog("centerless_virasoro", {std::pair<long, long>{-1, 9}, {}});
    std::vector<int> vpart;
    for (long i = 1; i <= 9; ++i) vpart.push_back(ex23.index_of("e" + std::to_string(i)));
    if (!expect_pair(ex23, vpart)) return false;
    return whittaker_pair_check(sl, {sl.index_of("h")}, 16).kind == PairVerdict::Kind::NotPair;
  });

  criterion(6, "Whittaker functionals on truncated U(n) are one-dimensional", [] {
    auto run = [](const LiePresentation& p, const std::vector<int>& part,
                  const std::vector<Character>& grid) {
      for (const auto& lam : grid) {
        auto res = whittaker_vectors_in_dual(p, part, lam, 8);
        for (int d = 0; d <= 8; ++d)
          if (res.dims_by_depth.at(d) != 1) return false;
      }
      return true;
    };
    auto s = catalog("solvable2d");
    std::vector<Character> sgrid;
    for (const auto& v : {Rational(0), Rational(1), Rational(-2), rat(2, 3), Rational(5)})
      sgrid.push_back(chi(s, "b", v));
    if (!run(s, s.part("n"), sgrid)) return false;

    auto v1 = catalog("v_1", {std::pair<long, long>{1, 10}, {}});
    std::vector<int> all(v1.size());
    for (int i = 0; i < v1.size(); ++i) all[i] = i;
    std::vector<Character> vgrid;
    for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
             {Rational(0), Rational(0)},
             {Rational(1), Rational(0)},
             {Rational(0), Rational(1)},
             {Rational(1), Rational(1)},
             {rat(2, 3), rat(-1, 2)}}) {
      Character c = chi(v1, "e1", x);
      c.values[v1.index_of("e2")] = y;
      vgrid.push_back(c);
    }
    if (!run(v1, all, vgrid)) return false;

    auto w1 = catalog("w_1", {{}, 4});
    std::vector<Character> wgrid;
    for (const auto& v : {Rational(0), Rational(1), rat(-1, 2)})
      wgrid.push_back(chi(w1, "D1(0)", v));
    return run(w1, w1.part("n_plus"), wgrid);
  });

  criterion(7, "completion Whittaker solves are one-dimensional and nested", [] {
    auto sl = catalog("sl2");
    WeightLadder lad = make_ladder(sl, 1, chi(sl, "h", rat(1, 2)), 8, WeightLadder::Mode::Verma);
    auto res = completion_whittaker_solve(lad, chi(sl, "e", Rational(1)), 8);
    if (!res.nonsimple_layers.empty() || !res.nested) return false;
    for (int d = 0; d <= 8; ++d)
      if (res.dims_by_truncation.at(d) != 1) return false;

    auto vir = catalog("centerless_virasoro", {std::pair<long, long>{-9, 9}, {}});
    WeightLadder vlad = make_ladder(vir, 1, chi(vir, "e0", rat(7, 3)), 6, WeightLadder::Mode::Verma);
    Character lam = chi(vir, "e1", Rational(1));
    lam.values[vir.index_of("e2")] = 0;
    auto vres = completion_whittaker_solve(vlad, lam, 6);
    if (!vres.nonsimple_layers.empty() || !vres.nested) return false;
    for (int d = 0; d <= 6; ++d)
      if (vres.dims_by_truncation.at(d) != 1) return false;
    return true;
  });

  criterion(8, "Verma multiplicities match the independent partition count", [] {
    auto vir = catalog("centerless_virasoro", {std::pair<long, long>{-12, 12}, {}});
    auto dims = verma_weight_dims(vir, chi(vir, "e0", rat(7, 3)), 10);
    auto p = oracles::partition_numbers(10);
    for (int k = 0; k <= 10; ++k)
      if (dims.at(k) != p.at(k)) return false;
    return dims == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  });

  criterion(9, "highest and lowest simple ladders agree entrywise", [] {
    auto w1 = catalog("w_1", {{}, 7});
    for (const auto& q : {Rational(1), Rational(-1), rat(2, 3), Rational(5), rat(-7, 4)}) {
      auto rep = star_duality_check(w1, chi(w1, "D1(1)", q), 4);
      if (!rep.equal) return false;
    }
    return true;
  });

  criterion(10, "resolution route agrees with the quotient route and with Kuenneth", [] {
    auto b2 = catalog("borel_sl2");
    // nonzero lambda family through the resolution
    for (const auto& l : {Rational(1), Rational(-2), rat(2, 3)}) {
      auto r = ce_ext1_borel(b2, chi(b2, "e1_2", l), Character{}, chi(b2, "e1_2", l), Character{},
                             6);
      if (!r.saturated || r.total != ext_solvable2d_nonzero(l, 8).at(1)) return false;
    }
    // vanishing lambda family
    for (long dm : {-1L, 0L, 1L, 2L}) {
      auto r = ce_ext1_borel(b2, Character{}, chi(b2, "h1", Rational(0)), Character{},
                             chi(b2, "h1", Rational(dm)), 4);
      if (!r.saturated) return false;
      if (r.total != ext_solvable2d_zero(Rational(0), Rational(dm)).at(1)) return false;
    }
    // Kuenneth against the direct product-algebra homology
    auto self = ext_solvable2d_zero(Rational(0), Rational(0));
    auto direct = oracles::product_complex_homology(Rational(0), Rational(0), Rational(0),
                                                    Rational(0));
    if (kunneth_ext({self, self}, 1) != 2 || direct.at(1) != 2) return false;
    if (kunneth_ext({self, self}, 2) != 1 || direct.at(2) != 1) return false;
    return true;
  });

  criterion(11, "block relation: equality-only for Whittaker pairs, roots for the Cartan", [] {
    std::vector<Rational> grid{Rational(0), Rational(1), Rational(-1), Rational(2), rat(1, 2)};
    auto equality_only = [&](const LiePresentation& p, const std::vector<int>& part,
                             const std::vector<int>& gens) {
      for (const auto& x : grid)
        for (const auto& y : grid) {
          Character l, s;
          l.values[gens.at(0)] = x;
          s.values[gens.at(0)] = y;
          auto res = sim_relation_check(p, part, l, s, 16);
          if (res.related != (x == y)) return false;
        }
      return true;
    };
    auto s = catalog("solvable2d");
    if (!equality_only(s, s.part("n"), s.part("n"))) return false;
    auto h = catalog("heisenberg3d");
    if (!equality_only(h, h.part("n"), h.part("n"))) return false;
    auto sl = catalog("sl2");
    if (!equality_only(sl, {sl.index_of("e")}, {sl.index_of("e")})) return false;
    auto ex22 = catalog("v_op_1", {std::pair<long, long>{-8, 1}, {}});
    if (!equality_only(ex22, {ex22.index_of("e1")}, {ex22.index_of("e1")})) return false;
    auto ex23 = catalog("centerless_virasoro", {std::pair<long, long>{-1, 9}, {}});
    std::vector<int> vpart;
    for (long i = 1; i <= 9; ++i) vpart.push_back(ex23.index_of("e" + std::to_string(i)));
    if (!equality_only(ex23, vpart, {ex23.index_of("e1")})) return false;
    auto w1 = catalog("w_1", {{}, 5});
    if (!equality_only(w1, w1.part("n_plus"), w1.part("n_plus"))) return false;
    if (!equality_only(w1, w1.part("n_minus"), {w1.index_of("D1(2)")})) return false;
    auto vq = catalog("v_quotient(0,4)");
    std::vector<int> vqn{vq.index_of("e1"), vq.index_of("e2"), vq.index_of("e3")};
    if (!equality_only(vq, vqn, {vq.index_of("e1")})) return false;

    // (sl2, h): lambda relates to lambda and lambda +- the root value 2
    int hh = sl.index_of("h");
    for (const auto& x : grid)
      for (const auto& y : grid) {
        Character l, sgm;
        l.values[hh] = x;
        sgm.values[hh] = y;
        bool want = (x == y) || (y - x == 2) || (x - y == 2);
        if (sim_relation_check(sl, {hh}, l, sgm, 16).related != want) return false;
      }
    return true;
  });

  criterion(12, "property suites: Jacobi, PBW laws, decomposition conservation, socles", [] {
    // Jacobi on every catalog entry, in-window triples
    std::vector<LiePresentation> algebras;
    algebras.push_back(catalog("solvable2d"));
    algebras.push_back(catalog("heisenberg3d"));
    algebras.push_back(catalog("sl2"));
    algebras.push_back(catalog("v_1", {std::pair<long, long>{1, 12}, {}}));
    algebras.push_back(catalog("v_op_1", {std::pair<long, long>{-6, 1}, {}}));
    algebras.push_back(catalog("v_quotient(0,5)"));
    algebras.push_back(catalog("centerless_virasoro", {std::pair<long, long>{-6, 6}, {}}));
    algebras.push_back(catalog("w_1", {{}, 5}));
    algebras.push_back(catalog("w_2", {{}, 3}));
    algebras.push_back(catalog("borel_sl2"));
    algebras.push_back(catalog("borel_sl3"));
    for (const auto& p : algebras)
      if (!jacobi_check(p).pass()) return false;

    // 200 random words of length <= 6: idempotence and bracket compatibility
    std::mt19937 rng(240810);
    std::vector<const LiePresentation*> pool;
    for (const auto& p : algebras)
      if (!p.window()) pool.push_back(&p);
    for (int trial = 0; trial < 200; ++trial) {
      const LiePresentation& p = *pool[trial % pool.size()];
      PBWContext ctx(p);
      std::uniform_int_distribution<int> len(1, 6), sym(0, p.size() - 1);
      std::vector<int> w(len(rng));
      for (auto& x : w) x = sym(rng);
      UEA n1 = normalize_word(ctx, w).value;
      UEA n2;
      for (const auto& [m, c] : n1.t) {
        std::vector<int> syms;
        for (int r : m.word()) syms.push_back(ctx.sym(r));
        n2.add_scaled(normalize_word(ctx, syms).value, c);
      }
      if (!(n1 == n2)) return false;
      if (n1.degree() > static_cast<int>(w.size())) return false;
    }
    for (const auto* pp : pool) {
      PBWContext ctx(*pp);
      for (int x = 0; x < pp->size(); ++x)
        for (int y = 0; y < pp->size(); ++y) {
          UEA xy = multiply(ctx, uea_of_symbol(ctx, x), uea_of_symbol(ctx, y)).value;
          UEA yx = multiply(ctx, uea_of_symbol(ctx, y), uea_of_symbol(ctx, x)).value;
          xy.add_scaled(yx, Rational(-1));
          UEA lie;
          for (const auto& [z, c] : pp->bracket(x, y).inside.terms)
            lie.add_scaled(uea_of_symbol(ctx, z), c);
          if (!(xy == lie)) return false;
        }
    }

    // 100 random nilpotent modules: conservation and socle nonemptiness
    LiePresentation ab2("abelian2");
    ab2.add_symbol("t0");
    ab2.add_symbol("t1");
    ab2.finalize();
    std::mt19937 rng2(77001);
    for (int trial = 0; trial < 100; ++trial) {
      auto rm = oracles::random_nilpotent_module(ab2, rng2);
      auto blocks = generalized_weight_decomposition(rm.module);
      int total = 0;
      std::map<Rational, int> first;
      for (const auto& b : blocks) {
        total += static_cast<int>(b.basis.size());
        first[b.weight.at(0)] += static_cast<int>(b.basis.size());
        RowSpace span(rm.module.dim());
        for (const auto& v : b.basis) span.insert(v);
        for (int g : rm.module.generators())
          for (const auto& v : b.basis)
            if (!span.contains(rm.module.action(g).apply(v))) return false;
      }
      if (total != rm.module.dim() || first != rm.first_weight_dims) return false;
      auto socle = socle_vectors(rm.module);
      if (socle.size() != blocks.size()) return false;
      for (const auto& s : socle)
        if (s.basis.empty()) return false;
    }
    return true;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
