#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "character.hpp"
#include "linalg.hpp"
#include "pbw.hpp"

namespace liewhit {

/// Finite window onto a Verma-type weight module of a graded presentation
/// with triangular parts. Layer k is the weight space at distance k below
/// the generating weight, spanned by builder standard monomials of
/// weighted degree k. In SimpleQuotient mode each layer is quotiented by
/// the radical of the pairing against raising monomials, which is the
/// corresponding layer of the unique simple quotient; quotient vectors
/// are coordinates on the non-pivot columns of the radical's canonical
/// form.
///
/// Everything is exact; straightening that would leave the window raises
/// instead of silently truncating. The presentation must outlive the
/// ladder.
class WeightLadder {
 public:
  enum class Mode { Verma, SimpleQuotient };

  WeightLadder(const LiePresentation& p, std::vector<int> builder, std::vector<int> cartan,
               std::vector<int> killer, Character mu, int depth, Mode mode)
      : builder_(std::move(builder)),
        cartan_(std::move(cartan)),
        killer_(std::move(killer)),
        mu_(std::move(mu)),
        depth_(depth),
        mode_(mode) {
    if (!p.graded()) throw usage_error("weight ladders need a graded presentation");
    for (int s : cartan_)
      if (*p.symbol(s).degree != 0) throw usage_error("cartan symbols must have degree zero");
    if (builder_.empty()) throw usage_error("empty builder part");
    sign_ = *p.symbol(builder_.front()).degree > 0 ? 1 : -1;
    for (int s : builder_)
      if (*p.symbol(s).degree * sign_ <= 0)
        throw usage_error("builder part must sit strictly on one side of the grading");
    for (int s : killer_)
      if (*p.symbol(s).degree * sign_ >= 0)
        throw usage_error("killer part must sit on the side opposite the builders");
    // The window is too small when it hides a symbol on the builder side
    // within the requested depth: any overflow bracket whose degree sum
    // lands there witnesses a missing basis element.
    for (const auto& [key, bv] : p.bracket_table()) {
      if (!bv.overflow) continue;
      long missing = (*p.symbol(key.first).degree + *p.symbol(key.second).degree) * sign_;
      if (missing >= 1 && missing <= depth_)
        throw usage_error("window too small: the bracket [" + p.symbol(key.first).tag + ", " +
                          p.symbol(key.second).tag + "] hides a weight-" +
                          std::to_string(missing) + " element within depth " +
                          std::to_string(depth_));
    }

    std::vector<int> ideal = cartan_;
    ideal.insert(ideal.end(), killer_.begin(), killer_.end());
    ctx_ = PBWContext(p, ideal);
    for (int s : killer_) gens_[s] = IdealGen{Rational(0), 1};
    for (int s : cartan_) gens_[s] = IdealGen{mu_.value(s), 1};

    layers_.assign(depth_ + 1, {});
    enumerate_layers();
    radical_.assign(depth_ + 1, RowSpace(0));
    qbasis_.assign(depth_ + 1, {});
    for (int k = 0; k <= depth_; ++k) {
      radical_[k] = RowSpace(verma_dim(k));
      if (mode_ == Mode::SimpleQuotient)
        for (const auto& v : kernel_basis(pairing_matrix(k))) radical_[k].insert(v);
      std::vector<bool> pivot(verma_dim(k), false);
      for (int pc : radical_[k].pivots()) pivot[pc] = true;
      for (int j = 0; j < verma_dim(k); ++j)
        if (!pivot[j]) qbasis_[k].push_back(j);
    }
    if (mode_ == Mode::SimpleQuotient) verify_radical_invariance();
  }

  const PBWContext& ctx() const { return ctx_; }
  int depth() const { return depth_; }
  int sign() const { return sign_; }
  const Character& mu() const { return mu_; }
  const std::vector<int>& killers() const { return killer_; }
  const std::vector<int>& builders() const { return builder_; }
  const std::vector<int>& cartan() const { return cartan_; }
  Mode mode() const { return mode_; }

  /// Depth shift of a symbol: positive for builders, negative for killers.
  long depth_shift(int sym) const { return *ctx_.p->symbol(sym).degree * sign_; }

  int verma_dim(int k) const { return static_cast<int>(layers_.at(k).size()); }
  int radical_dim(int k) const { return radical_.at(k).dim(); }

  /// Dimension of layer k of the module this ladder realizes.
  int dim(int k) const { return verma_dim(k) - radical_dim(k); }

  const std::vector<Monomial>& layer_basis(int k) const { return layers_.at(k); }

  struct Applied {
    int layer = 0;                 // negative: the result raised past the top and vanished
    std::vector<Rational> coords;  // empty when layer < 0
  };

  /// y * (layer-k vector). Coordinates are layer coordinates of the
  /// realized module (quotient coordinates in SimpleQuotient mode).
  /// Throws truncation_error when the result would land below the
  /// computed depth.
  Applied apply_symbol(int y, int k, const std::vector<Rational>& v) const {
    Applied raw = apply_core(y, k, lift(k, v));
    if (raw.layer < 0) return raw;
    raw.coords = project(raw.layer, std::move(raw.coords));
    return raw;
  }

  /// u * (layer-k vector) for an element of this ladder's context,
  /// collected per target layer.
  std::map<int, std::vector<Rational>> apply_element(const UEA& u, int k,
                                                     const std::vector<Rational>& v) const {
    std::map<int, std::vector<Rational>> out;
    for (const auto& [mono, c] : u.t) {
      int layer = k;
      std::vector<Rational> cur = v;
      bool vanished = false;
      for (int fi = static_cast<int>(mono.f.size()) - 1; fi >= 0 && !vanished; --fi) {
        const auto& [r, e] = mono.f[fi];
        for (int rep = 0; rep < e && !vanished; ++rep) {
          Applied ap = apply_symbol(ctx_.sym(r), layer, cur);
          if (ap.layer < 0) {
            vanished = true;
            break;
          }
          layer = ap.layer;
          cur = std::move(ap.coords);
        }
      }
      if (vanished) continue;
      auto& acc = out[layer];
      if (acc.empty()) acc.assign(dim(layer), Rational(0));
      for (std::size_t j = 0; j < cur.size(); ++j) acc[j] += c * cur[j];
    }
    for (auto it = out.begin(); it != out.end();) {
      bool zero = std::all_of(it->second.begin(), it->second.end(),
                              [](const Rational& x) { return x == 0; });
      it = zero ? out.erase(it) : std::next(it);
    }
    return out;
  }

  /// Pairing of raising monomials of weight k against layer k: entry
  /// (i, j) is the coefficient on the generating line of
  /// (raiser_i) (builder_j) v.
  SparseMatrix pairing_matrix(int k) const {
    auto raisers = killer_monomials(k);
    SparseMatrix pm(static_cast<int>(raisers.size()), verma_dim(k));
    for (int j = 0; j < verma_dim(k); ++j) {
      std::vector<Rational> e(verma_dim(k), Rational(0));
      e[j] = 1;
      for (std::size_t i = 0; i < raisers.size(); ++i) {
        int layer = k;
        std::vector<Rational> cur = e;
        bool vanished = false;
        for (int fi = static_cast<int>(raisers[i].f.size()) - 1; fi >= 0 && !vanished; --fi) {
          const auto& [r, exp] = raisers[i].f[fi];
          for (int rep = 0; rep < exp && !vanished; ++rep) {
            Applied ap = apply_core(ctx_.sym(r), layer, cur);
            vanished = ap.layer < 0;
            layer = ap.layer;
            cur = std::move(ap.coords);
          }
        }
        if (vanished) throw internal_error("raising monomial overshot the top layer");
        if (layer != 0) throw internal_error("raising monomial missed the top layer");
        if (cur[0] != 0) pm.set(static_cast<int>(i), j, cur[0]);
      }
    }
    return pm;
  }

  /// Standard monomials over the killer symbols with total weight k.
  std::vector<Monomial> killer_monomials(int k) const {
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> stack;
    std::vector<int> ks = killer_;
    std::sort(ks.begin(), ks.end(), [&](int a, int b) { return ctx_.rank(a) < ctx_.rank(b); });
    auto rec = [&](auto&& self, std::size_t at, long left) -> void {
      if (left == 0) {
        Monomial m;
        m.f = stack;
        out.push_back(m);
        return;
      }
      if (at == ks.size()) return;
      long w = -depth_shift(ks[at]);
      self(self, at + 1, left);
      for (int e = 1; w * e <= left; ++e) {
        stack.emplace_back(ctx_.rank(ks[at]), e);
        self(self, at + 1, left - w * e);
        stack.pop_back();
      }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Rational> lift(int k, const std::vector<Rational>& v) const {
    if (mode_ == Mode::Verma) return v;
    std::vector<Rational> full(verma_dim(k), Rational(0));
    for (std::size_t j = 0; j < qbasis_[k].size(); ++j) full[qbasis_[k][j]] = v[j];
    return full;
  }

  std::vector<Rational> project(int k, std::vector<Rational> full) const {
    if (mode_ == Mode::Verma) return full;
    full = radical_[k].reduce_vector(std::move(full));
    std::vector<Rational> out(qbasis_[k].size(), Rational(0));
    for (std::size_t j = 0; j < qbasis_[k].size(); ++j) out[j] = full[qbasis_[k][j]];
    return out;
  }

  /// y * (layer-k vector) in plain Verma coordinates.
  Applied apply_core(int y, int k, const std::vector<Rational>& v) const {
    long t = k + depth_shift(y);
    if (t > depth_)
      throw truncation_error("action of " + ctx_.p->symbol(y).tag + " leaves the depth window");
    UEA total;
    for (std::size_t j = 0; j < layers_[k].size(); ++j) {
      if (v[j] == 0) continue;
      UEA m;
      m.t[layers_[k][j]] = v[j];
      PBWResult prod = multiply(ctx_, uea_of_symbol(ctx_, y), m);
      total.add_scaled(reduce_mod_left_ideal(ctx_, prod.value, gens_), Rational(1));
    }
    Applied out;
    if (t < 0) {
      if (!total.is_zero()) throw internal_error("nonzero component above the top layer");
      out.layer = static_cast<int>(t);
      return out;
    }
    out.layer = static_cast<int>(t);
    out.coords.assign(layers_[t].size(), Rational(0));
    for (const auto& [m, c] : total.t) {
      auto it = index_.find(m);
      if (it == index_.end() || it->second.first != t)
        throw internal_error("reduced action left its weight layer");
      out.coords[it->second.second] = c;
    }
    return out;
  }

  void enumerate_layers() {
    std::vector<int> bs = builder_;
    std::sort(bs.begin(), bs.end(), [&](int a, int b) { return ctx_.rank(a) < ctx_.rank(b); });
    std::vector<std::pair<int, int>> stack;
    auto rec = [&](auto&& self, std::size_t at, long used) -> void {
      if (at == bs.size()) {
        Monomial m;
        m.f = stack;
        layers_[used].push_back(m);
        return;
      }
      long w = depth_shift(bs[at]);
      self(self, at + 1, used);
      for (int e = 1; used + w * e <= depth_; ++e) {
        stack.emplace_back(ctx_.rank(bs[at]), e);
        self(self, at + 1, used + w * e);
        stack.pop_back();
      }
    };
    rec(rec, 0, 0);
    for (int k = 0; k <= depth_; ++k) {
      std::sort(layers_[k].begin(), layers_[k].end());
      for (int j = 0; j < static_cast<int>(layers_[k].size()); ++j)
        index_[layers_[k][j]] = {k, j};
    }
  }

  /// The radical must be a submodule; checked for every generator whose
  /// image layer exists in the window.
  void verify_radical_invariance() const {
    for (int k = 0; k <= depth_; ++k) {
      for (const auto& r : radical_[k].basis()) {
        std::vector<int> check = killer_;
        check.insert(check.end(), cartan_.begin(), cartan_.end());
        for (int s : builder_)
          if (k + depth_shift(s) <= depth_) check.push_back(s);
        for (int y : check) {
          Applied ap = apply_core(y, k, r);
          if (ap.layer < 0) continue;
          bool zero = std::all_of(ap.coords.begin(), ap.coords.end(),
                                  [](const Rational& q) { return q == 0; });
          if (!zero && !radical_[ap.layer].contains(ap.coords))
            throw internal_error("pairing radical is not invariant");
        }
      }
    }
  }

  PBWContext ctx_;
  std::vector<int> builder_, cartan_, killer_;
  Character mu_;
  int depth_;
  Mode mode_;
  int sign_ = 1;
  IdealGens gens_;
  std::vector<std::vector<Monomial>> layers_;
  std::map<Monomial, std::pair<int, int>> index_;  // monomial -> (layer, position)
  std::vector<RowSpace> radical_;
  std::vector<std::vector<int>> qbasis_;  // non-pivot columns per layer
};

/// Builds a ladder from the triangular parts of a presentation.
/// orientation +1: highest-weight side (n_minus builds, n_plus raises);
/// orientation -1: lowest-weight side with the roles swapped.
inline WeightLadder make_ladder(const LiePresentation& p, int orientation, const Character& mu,
                                int depth, WeightLadder::Mode mode) {
  const auto& minus = p.part("n_minus");
  const auto& h = p.part("h");
  const auto& plus = p.part("n_plus");
  if (orientation == 1) return WeightLadder(p, minus, h, plus, mu, depth, mode);
  return WeightLadder(p, plus, h, minus, mu, depth, mode);
}

/// Weight-space dimensions of the Verma module by depth 0..d.
inline std::vector<long> verma_weight_dims(const LiePresentation& p, const Character& mu, int d) {
  WeightLadder lad = make_ladder(p, 1, mu, d, WeightLadder::Mode::Verma);
  std::vector<long> out;
  for (int k = 0; k <= d; ++k) out.push_back(lad.verma_dim(k));
  return out;
}

/// Weight-space dimensions of the unique simple quotient of the Verma
/// module, by depth: the rank of the pairing at each layer.
inline std::vector<long> simple_hw_quotient_dims(const LiePresentation& p, const Character& mu,
                                                 int d, int orientation = 1) {
  WeightLadder lad = make_ladder(p, orientation, mu, d, WeightLadder::Mode::SimpleQuotient);
  std::vector<long> out;
  for (int k = 0; k <= d; ++k) out.push_back(lad.dim(k));
  return out;
}

struct StarDualityReport {
  std::vector<long> highest;  // dims of the simple highest-weight module of mu
  std::vector<long> lowest;   // dims of the simple lowest-weight module of -mu
  bool equal = false;
};

/// Compares the simple highest-weight ladder of mu against the simple
/// lowest-weight ladder of -mu, entrywise by depth.
inline StarDualityReport star_duality_check(const LiePresentation& p, const Character& mu,
                                            int depth) {
  StarDualityReport rep;
  rep.highest = simple_hw_quotient_dims(p, mu, depth, 1);
  Character neg;
  for (const auto& [s, v] : mu.values) neg.values[s] = -v;
  rep.lowest = simple_hw_quotient_dims(p, neg, depth, -1);
  rep.equal = rep.highest == rep.lowest;
  return rep;
}

/// Result of the truncated Whittaker solve in a completed weight module.
struct CompletionSolveResult {
  std::vector<int> dims_by_truncation;  // solution dimension at D = 0..d
  bool nested = true;                   // deeper solutions restrict to shallower ones
  std::vector<int> nonsimple_layers;    // layers with a nonzero pairing radical (Verma mode)
  /// representative at the full truncation: per layer, coordinates
  std::vector<std::vector<Rational>> representative;
};

/// Solves (x - lambda(x)) v = 0 for all killer generators on formal sums
/// over layers 0..d. Equations that would touch layers beyond d are
/// dropped (the truncation boundary), so uniqueness claims are per
/// truncation. In Verma mode the report also lists the layers where the
/// pairing degenerates, since the one-dimensionality statements assume a
/// simple module; the caller decides with that evidence in hand.
inline CompletionSolveResult completion_whittaker_solve(const WeightLadder& lad,
                                                        const Character& lambda, int d) {
  if (d > lad.depth()) throw usage_error("solve depth exceeds the ladder depth");
  CompletionSolveResult out;
  for (int k = 0; k <= d; ++k) {
    int rad = lad.mode() == WeightLadder::Mode::Verma
                  ? static_cast<int>(kernel_basis(lad.pairing_matrix(k)).size())
                  : lad.radical_dim(k);
    if (rad != 0) out.nonsimple_layers.push_back(k);
  }

  struct Block {
    int y, from, to;
    SparseMatrix a;
  };
  std::vector<Block> blocks;
  for (int y : lad.killers()) {
    long w = -lad.depth_shift(y);
    for (int from = static_cast<int>(w); from <= d; ++from) {
      int to = from - static_cast<int>(w);
      SparseMatrix a(lad.dim(to), lad.dim(from));
      for (int j = 0; j < lad.dim(from); ++j) {
        std::vector<Rational> e(lad.dim(from), Rational(0));
        e[j] = 1;
        auto ap = lad.apply_symbol(y, from, e);
        for (int i = 0; i < lad.dim(to); ++i)
          if (ap.coords[i] != 0) a.set(i, j, ap.coords[i]);
      }
      blocks.push_back({y, from, to, std::move(a)});
    }
  }

  std::vector<std::vector<Rational>> prev_kernel;
  for (int D = 0; D <= d; ++D) {
    std::vector<int> offset(D + 2, 0);
    for (int k = 0; k <= D; ++k) offset[k + 1] = offset[k] + lad.dim(k);
    const int nunk = offset[D + 1];
    int nrows = 0;
    std::vector<std::pair<const Block*, int>> rows;
    for (const auto& b : blocks)
      if (b.from <= D) {
        rows.push_back({&b, nrows});
        nrows += lad.dim(b.to);
      }
    SparseMatrix sys(nrows, nunk);
    for (const auto& [bp, r0] : rows) {
      for (const auto& [rc, val] : bp->a.entries())
        sys.add(r0 + rc.first, offset[bp->from] + rc.second, val);
      Rational lv = lambda.value(bp->y);
      if (lv != 0)
        for (int i = 0; i < lad.dim(bp->to); ++i) sys.add(r0 + i, offset[bp->to] + i, -lv);
    }
    auto ker = kernel_basis(sys);
    out.dims_by_truncation.push_back(static_cast<int>(ker.size()));
    if (D > 0) {
      RowSpace span(offset[D]);
      for (const auto& v : prev_kernel) span.insert(std::vector<Rational>(v.begin(), v.begin() + offset[D]));
      for (const auto& v : ker) {
        std::vector<Rational> restr(v.begin(), v.begin() + offset[D]);
        if (!span.contains(restr)) out.nested = false;
      }
    }
    prev_kernel = ker;
    if (D == d && !ker.empty()) {
      std::vector<Rational> v = ker[0];
      if (lad.dim(0) == 1 && v[0] != 0) {
        Rational inv = Rational(1) / v[0];
        for (auto& c : v) c *= inv;
      }
      for (int k = 0; k <= D; ++k)
        out.representative.emplace_back(v.begin() + offset[k], v.begin() + offset[k + 1]);
    }
  }
  return out;
}

struct AnnihilatorItemReport {
  bool annihilates_verma_window = true;
  bool annihilates_whittaker_window = true;
  bool window_limited = false;  // some application was cut off by the depth window
};

struct AnnihilatorReport {
  std::vector<AnnihilatorItemReport> items;
  /// Pointwise annihilation on a finite window is desk evidence and never
  /// a two-sided ideal statement; every rendering of this report carries
  /// the disclaimer.
  std::string disclaimer =
      "window-bounded pointwise check; one-sided annihilation of single vectors is not "
      "module annihilation";
};

/// Tests each element against every Verma layer vector and against the
/// completion Whittaker representative, inside the depth window.
inline AnnihilatorReport annihilator_spot_check(const WeightLadder& verma,
                                                const std::vector<UEA>& elements,
                                                const Character& lambda, int depth) {
  AnnihilatorReport rep;
  auto solve = completion_whittaker_solve(verma, lambda, depth);
  for (const auto& u : elements) {
    AnnihilatorItemReport item;
    for (int k = 0; k <= depth; ++k) {
      for (int j = 0; j < verma.dim(k); ++j) {
        std::vector<Rational> e(verma.dim(k), Rational(0));
        e[j] = 1;
        try {
          if (!verma.apply_element(u, k, e).empty()) item.annihilates_verma_window = false;
        } catch (const truncation_error&) {
          item.window_limited = true;
        }
      }
    }
    if (!solve.representative.empty()) {
      // A monomial with total raising shift -s reads layers up to t + s
      // when it writes layer t, so layers above depth + min_shift see
      // truncated data and are excluded from the verdict.
      long min_shift = 0;
      for (const auto& [m, c] : u.t) {
        long shift = 0;
        for (const auto& [r, e] : m.f) shift += verma.depth_shift(verma.ctx().sym(r)) * e;
        min_shift = std::min(min_shift, shift);
      }
      long reliable = depth + min_shift;
      std::map<int, std::vector<Rational>> acc;
      for (int k = 0; k <= depth; ++k) {
        if (verma.dim(k) == 0) continue;
        try {
          for (const auto& [layer, coords] : verma.apply_element(u, k, solve.representative[k])) {
            if (layer > reliable) continue;  // boundary-affected components
            auto& a = acc[layer];
            if (a.empty()) a.assign(coords.size(), Rational(0));
            for (std::size_t i = 0; i < coords.size(); ++i) a[i] += coords[i];
          }
        } catch (const truncation_error&) {
          item.window_limited = true;
        }
      }
      for (const auto& [layer, coords] : acc)
        for (const auto& c : coords)
          if (c != 0) item.annihilates_whittaker_window = false;
    }
    rep.items.push_back(item);
  }
  return rep;
}

}  // namespace liewhit
