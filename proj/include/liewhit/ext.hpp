#pragma once

#include <map>
#include <string>
#include <vector>

#include "borel.hpp"
#include "catalog.hpp"
#include "character.hpp"
#include "linalg.hpp"
#include "whittaker.hpp"

namespace liewhit {

/// Graded sequence of Ext dimensions; only nonzero entries are stored.
struct ExtTable {
  std::map<int, long> dims;

  long at(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }

  void set(int i, long d) {
    if (d != 0) dims[i] = d;
  }

  friend bool operator==(const ExtTable& a, const ExtTable& b) { return a.dims == b.dims; }
};

/// Self-extensions of the standard module of the two-dimensional solvable
/// algebra at a nonzero character, from the length-one free resolution:
/// Ext^0 is the kernel of left multiplication by (b - lambda) on the
/// realization and Ext^1 its cokernel, checked degreewise on the
/// truncation (the operator drops the polynomial degree by one, so
/// surjectivity onto the slice one degree down is the honest statement).
inline ExtTable ext_solvable2d_nonzero(const Rational& lambda, int truncation) {
  if (lambda == 0) throw usage_error("the nonzero-character family needs lambda != 0");
  auto p = catalog("solvable2d");
  Character chi;
  chi.values[p.index_of("b")] = lambda;
  StandardModule m(p, p.part("n"), chi);

  auto domain = m.slice(truncation);
  auto target = m.slice(truncation - 1);
  std::map<Monomial, int> trow;
  for (std::size_t i = 0; i < target.size(); ++i) trow[target[i]] = static_cast<int>(i);

  UEA op = parse_word_expression(m.ctx(), "b").value;
  SparseMatrix full(static_cast<int>(domain.size()), static_cast<int>(domain.size()));
  SparseMatrix onto(static_cast<int>(target.size()), static_cast<int>(domain.size()));
  std::map<Monomial, int> drow;
  for (std::size_t i = 0; i < domain.size(); ++i) drow[domain[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < domain.size(); ++j) {
    UEA v;
    v.t[domain[j]] = 1;
    UEA w = m.act(op, v);
    w.add_scaled(v, -lambda);
    for (const auto& [mono, c] : w.t) {
      full.add(drow.at(mono), static_cast<int>(j), c);
      auto it = trow.find(mono);
      if (it == trow.end()) throw internal_error("(b - lambda) did not drop the degree");
      onto.add(it->second, static_cast<int>(j), c);
    }
  }
  ExtTable out;
  out.set(0, static_cast<long>(kernel_basis(full).size()));
  out.set(1, static_cast<long>(target.size()) - rank(onto));
  return out;
}

/// Extensions between the one-dimensional modules of the two-dimensional
/// solvable algebra, from the explicit three-term complex
///   0 -> L(nu) -> L(nu) (+) L(nu) -> L(nu) -> 0
/// with maps (-b., (a-mu).) and ((a-mu-1)., b.). The realization is
/// one-dimensional, so the answer does not depend on the truncation; the
/// parameter is kept for interface uniformity.
inline ExtTable ext_solvable2d_zero(const Rational& mu, const Rational& nu, int truncation = 0) {
  (void)truncation;
  auto p = catalog("solvable2d");
  PBWContext ctx(p, p.part("n"));
  IdealGens gens{{p.index_of("a"), {nu, 1}}, {p.index_of("b"), {Rational(0), 1}}};
  auto scalar_of = [&](const std::string& expr) {
    UEA red = reduce_mod_left_ideal(ctx, parse_word_expression(ctx, expr).value, gens);
    auto it = red.t.find(Monomial{});
    return it == red.t.end() ? Rational(0) : it->second;
  };
  Rational sb = scalar_of("b");
  Rational sa = scalar_of("a");

  SparseMatrix d0(2, 1), d1(1, 2);
  d0.set(0, 0, -sb);
  d0.set(1, 0, sa - mu);
  d1.set(0, 0, sa - mu - 1);
  d1.set(0, 1, sb);
  if (rank(d1 * d0) != 0) throw internal_error("three-term complex does not compose to zero");

  ExtTable out;
  out.set(0, 1 - rank(d0));
  out.set(1, 2 - rank(d0) - rank(d1));
  out.set(2, 1 - rank(d1));
  return out;
}

/// Kuenneth dimension in degree k: sum over all splittings of k of the
/// products of the per-factor entries.
inline long kunneth_ext(const std::vector<ExtTable>& tables, int k) {
  std::vector<long> acc{1};  // acc[d] = convolved dimension in degree d
  for (const auto& t : tables) {
    std::vector<long> next(k + 1, 0);
    for (int d = 0; d < static_cast<int>(acc.size()) && d <= k; ++d) {
      if (acc[d] == 0) continue;
      for (const auto& [i, dim] : t.dims)
        if (i >= 0 && d + i <= k) next[d + i] += acc[d] * dim;
    }
    acc = std::move(next);
  }
  return k < static_cast<int>(acc.size()) ? acc[k] : 0;
}

struct CEExt1Result {
  long total = 0;       // dim Ext^1 at the saturated truncation
  long y_part = 0;      // the part matching the direct-summand computation
  long x_part = 0;      // the finite remainder supported on [n,n] components
  bool saturated = false;
  int used_depth = 0;
};

namespace detail {

/// Left multiplication matrices of a degree <= 1 element on the slices of
/// a Borel simple module: domain degree <= dd, coordinates on degree
/// <= dd + 1 (the action can raise the polynomial degree by at most one).
inline SparseMatrix left_mult_matrix(const BorelSimpleModule& l, const UEA& u,
                                     const std::vector<Monomial>& domain,
                                     const std::map<Monomial, int>& out_index, int out_dim) {
  SparseMatrix a(out_dim, static_cast<int>(domain.size()));
  for (std::size_t j = 0; j < domain.size(); ++j) {
    UEA v;
    v.t[domain[j]] = 1;
    UEA w = l.act(u, v);
    for (const auto& [mono, c] : w.t) a.add(out_index.at(mono), static_cast<int>(j), c);
  }
  return a;
}

}  // namespace detail

/// First extension space between Borel simple modules through the
/// Chevalley-Eilenberg-style free resolution of the inducing subalgebra
/// c = n (+) h_lambda: dim (ker gamma / im beta) on depth-truncated
/// realizations, split into the part supported away from [n,n] (which
/// matches the direct computation over the quotient a = b/[n,n]) and the
/// finite remainder. The remainder must stabilize over two consecutive
/// depths before the total is considered saturated.
inline CEExt1Result ce_ext1_borel(const LiePresentation& p, const Character& lambda,
                                  const Character& mu, const Character& lambda2,
                                  const Character& mu2, int depth) {
  BorelSimpleModule target(p, lambda2, mu2);

  // basis of c: all positive-root vectors in part order, then the Cartan
  // generators dual to roots where lambda vanishes
  std::vector<int> cbasis = p.part("n");
  {
    const auto& simples = p.part("simple_roots");
    std::set<int> nonzero;
    for (int e : simples)
      if (lambda.value(e) != 0) nonzero.insert(e);
    auto root_index = [&](int sym) { return std::stoi(p.symbol(sym).tag.substr(1)); };
    std::map<int, int> h_by_index;
    for (int hs : p.part("h")) h_by_index[root_index(hs)] = hs;
    for (int e : simples)
      if (!nonzero.count(e)) cbasis.push_back(h_by_index.at(root_index(e)));
  }
  const int k = static_cast<int>(cbasis.size());
  auto nu = [&](int sym) {
    // the character of c defined by (lambda, mu)
    if (lambda.values.count(sym)) return lambda.value(sym);
    if (mu.values.count(sym)) return mu.value(sym);
    return Rational(0);
  };
  std::set<int> commutator;  // [n,n]: positive roots that are not simple
  {
    std::set<int> simple_set(p.part("simple_roots").begin(), p.part("simple_roots").end());
    for (int e : p.part("n"))
      if (!simple_set.count(e)) commutator.insert(e);
  }

  const PBWContext& ctx = target.ctx();
  auto elem = [&](int sym, const Rational& shift) {
    UEA u = uea_of_symbol(ctx, sym);
    u.add_term(Monomial{}, -shift);
    return u;
  };
  // entries of the resolution differential, by the bracket case analysis
  auto entry = [&](int i, int j, int s) -> UEA {
    BracketValue bv = p.bracket(cbasis[i], cbasis[j]);
    if (bv.overflow) throw internal_error("borel bracket cannot overflow");
    int bsym = -1;
    Rational bc;
    if (!bv.inside.is_zero()) {
      if (bv.inside.terms.size() != 1)
        throw usage_error("resolution entries need single-term brackets");
      bsym = bv.inside.terms.begin()->first;
      bc = bv.inside.terms.begin()->second;
    }
    if (s == i) {
      UEA u = elem(cbasis[j], nu(cbasis[j]));
      if (bsym == cbasis[i]) u.add_term(Monomial{}, bc);
      return u;
    }
    if (s == j) {
      UEA u = elem(cbasis[i], nu(cbasis[i]));
      UEA neg;
      neg.add_scaled(u, Rational(-1));
      if (bsym == cbasis[j]) neg.add_term(Monomial{}, -bc);
      return neg;
    }
    UEA u;
    if (bsym == cbasis[s]) u.add_term(Monomial{}, bc);
    return u;
  };

  auto compute = [&](int D) -> std::array<long, 2> {
    auto dom = target.slice(D);        // middle-term cutoff
    auto domp = target.slice(D + 1);   // beta domain, one degree higher
    auto out = target.slice(D + 2);    // gamma output coordinates
    std::map<Monomial, int> oidx;
    for (std::size_t i = 0; i < out.size(); ++i) oidx[out[i]] = static_cast<int>(i);
    const int od = static_cast<int>(out.size());
    const int nd = static_cast<int>(dom.size());
    const int npd = static_cast<int>(domp.size());

    // gamma on the middle cutoff: rows indexed by (pair, out coordinate)
    const int npairs = k * (k - 1) / 2;
    SparseMatrix gamma(npairs * od, k * nd);
    int pr = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j, ++pr)
        for (int s = 0; s < k; ++s) {
          UEA e = entry(i, j, s);
          if (e.is_zero()) continue;
          SparseMatrix a = detail::left_mult_matrix(target, e, dom, oidx, od);
          for (const auto& [rc, val] : a.entries())
            gamma.add(pr * od + rc.first, s * nd + rc.second, val);
        }
    auto ker = kernel_basis(gamma);

    // beta from one degree higher; its image lies in degree <= D + 2
    SparseMatrix beta(k * od, npd);
    for (int s = 0; s < k; ++s) {
      SparseMatrix a = detail::left_mult_matrix(target, elem(cbasis[s], nu(cbasis[s])), domp,
                                                oidx, od);
      for (const auto& [rc, val] : a.entries()) beta.add(s * od + rc.first, rc.second, val);
    }
    // express the image inside the middle cutoff coordinates k * nd;
    // components outside the cutoff force exclusion
    std::map<Monomial, int> didx2;
    for (std::size_t i = 0; i < dom.size(); ++i) didx2[dom[i]] = static_cast<int>(i);
    std::vector<std::vector<Rational>> image_rows(npd, std::vector<Rational>(k * od, Rational(0)));
    for (const auto& [rc, val] : beta.entries()) image_rows[rc.second][rc.first] = val;
    // basis of im beta, then intersect with the cutoff coordinate subspace
    RowSpace im(k * od);
    for (auto& r : image_rows) im.insert(std::move(r));
    auto im_basis = im.basis();
    // coordinates outside the cutoff: out-monomials of degree > D
    std::vector<int> outside;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].degree() > D) outside.push_back(static_cast<int>(i));
    SparseMatrix restr(static_cast<int>(outside.size()) * k,
                       static_cast<int>(im_basis.size()));
    for (std::size_t b = 0; b < im_basis.size(); ++b)
      for (int s = 0; s < k; ++s)
        for (std::size_t oi = 0; oi < outside.size(); ++oi) {
          const Rational& v = im_basis[b][s * od + outside[oi]];
          if (v != 0) restr.add(static_cast<int>(s * outside.size() + oi), static_cast<int>(b), v);
        }
    auto inside_combos = kernel_basis(restr);
    // im cap cutoff, as vectors in the k * nd cutoff coordinates
    RowSpace im_cut(k * nd);
    for (const auto& t : inside_combos) {
      std::vector<Rational> w(k * od, Rational(0));
      for (std::size_t b = 0; b < im_basis.size(); ++b)
        if (t[b] != 0)
          for (int c = 0; c < k * od; ++c) w[c] += t[b] * im_basis[b][c];
      std::vector<Rational> cut(k * nd, Rational(0));
      for (int s = 0; s < k; ++s)
        for (const auto& [mono, di] : didx2) cut[s * nd + di] = w[s * od + oidx.at(mono)];
      im_cut.insert(std::move(cut));
    }

    // d compose d = 0: the image must lie in the kernel
    RowSpace kspan(k * nd);
    for (const auto& v : ker) kspan.insert(v);
    for (const auto& v : im_cut.basis())
      if (!kspan.contains(v)) throw internal_error("resolution does not compose to zero");

    long h1 = static_cast<long>(ker.size()) - im_cut.dim();
    // Y-part: kernel vectors supported away from the [n,n] components
    std::vector<int> xcols;
    for (int s = 0; s < k; ++s)
      if (commutator.count(cbasis[s]))
        for (int c = 0; c < nd; ++c) xcols.push_back(s * nd + c);
    SparseMatrix xrestr(static_cast<int>(xcols.size()), static_cast<int>(ker.size()));
    for (std::size_t b = 0; b < ker.size(); ++b)
      for (std::size_t xi = 0; xi < xcols.size(); ++xi)
        if (ker[b][xcols[xi]] != 0) xrestr.add(static_cast<int>(xi), static_cast<int>(b), ker[b][xcols[xi]]);
    auto ycombos = kernel_basis(xrestr);
    RowSpace yspan(k * nd);
    for (const auto& t : ycombos) {
      std::vector<Rational> w(k * nd, Rational(0));
      for (std::size_t b = 0; b < ker.size(); ++b)
        if (t[b] != 0)
          for (int c = 0; c < k * nd; ++c) w[c] += t[b] * ker[b][c];
      yspan.insert(std::move(w));
    }
    // dim of (K_Y + im)/im = dim K_Y - dim(K_Y cap im) = dim K_Y - dim im
    // (the image always lies in the Y part and in the kernel)
    for (const auto& v : im_cut.basis())
      if (!yspan.contains(v)) throw internal_error("image escapes the Y part");
    long y = yspan.dim() - im_cut.dim();
    return {h1, y};
  };

  CEExt1Result res;
  auto lo = compute(depth);
  res.total = lo[0];
  res.y_part = lo[1];
  res.x_part = lo[0] - lo[1];
  res.used_depth = depth;
  auto hi = compute(depth + 1);
  res.saturated = (hi[0] - hi[1]) == res.x_part && hi[1] == res.y_part;
  if (res.saturated) {
    res.total = hi[0];
    res.y_part = hi[1];
    res.x_part = res.total - res.y_part;
  }
  return res;
}

}  // namespace liewhit
