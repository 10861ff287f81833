#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "character.hpp"
#include "findim.hpp"
#include "pbw.hpp"
#include "presentation.hpp"

namespace liewhit {

/// Lower central series n_0 = n, n_{i+1} = [n_i, n], as canonical spans in
/// full basis coordinates. Each step records whether some generating
/// bracket escaped the window.
struct CentralSeries {
  std::vector<RowSpace> chain;
  std::vector<bool> step_overflowed;  // one flag per computed step i >= 1
};

namespace detail {

inline void require_subalgebra(const LiePresentation& p, const std::vector<int>& part) {
  std::set<int> members(part.begin(), part.end());
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      BracketValue bv = p.bracket(part[i], part[j]);
      for (const auto& [s, c] : bv.inside.terms)
        if (!members.count(s))
          throw usage_error("part is not a subalgebra: [" + p.symbol(part[i]).tag + ", " +
                            p.symbol(part[j]).tag + "] leaves its span");
    }
}

inline std::vector<Rational> lie_to_vec(const LiePresentation& p, const LieElement& e) {
  std::vector<Rational> v(p.size(), Rational(0));
  for (const auto& [s, c] : e.terms) v[s] = c;
  return v;
}

}  // namespace detail

inline CentralSeries lower_central_series(const LiePresentation& p, const std::vector<int>& part,
                                          int depth) {
  detail::require_subalgebra(p, part);
  CentralSeries cs;
  RowSpace n0(p.size());
  for (int s : part) n0.insert(detail::lie_to_vec(p, p.element_of(s)));
  cs.chain.push_back(n0);
  for (int i = 1; i <= depth; ++i) {
    const RowSpace& prev = cs.chain.back();
    RowSpace next(p.size());
    bool overflow = false;
    for (const auto& vec : prev.basis()) {
      LieElement v;
      for (int s = 0; s < p.size(); ++s)
        if (vec[s] != 0) v.add(s, vec[s]);
      for (int y : part) {
        BracketValue bv = p.bracket(v, p.element_of(y));
        overflow = overflow || bv.overflow;
        if (!bv.inside.is_zero()) next.insert(detail::lie_to_vec(p, bv.inside));
      }
    }
    cs.step_overflowed.push_back(overflow);
    cs.chain.push_back(std::move(next));
    if (cs.chain.back().dim() == 0) break;
  }
  return cs;
}

struct QuasiNilpotentVerdict {
  enum class Kind { Yes, No, Inconclusive } kind = Kind::Inconclusive;
  bool window_bounded = false;  // some step crossed the window boundary
  int steps = 0;                // steps actually computed

  std::string to_string() const {
    switch (kind) {
      case Kind::Yes:
        return window_bounded ? "yes-within-window" : "yes";
      case Kind::No:
        return "no";
      default:
        return "inconclusive";
    }
  }
};

/// "yes" when the series hits zero inside the window ("-within-window"
/// when mass escaped through the boundary on the way); a certified "no"
/// when it stabilizes at a nonzero span without any boundary effect.
inline QuasiNilpotentVerdict quasi_nilpotent_check(const LiePresentation& p,
                                                   const std::vector<int>& part, int depth) {
  auto cs = lower_central_series(p, part, depth);
  QuasiNilpotentVerdict v;
  v.steps = static_cast<int>(cs.chain.size()) - 1;
  v.window_bounded = std::any_of(cs.step_overflowed.begin(), cs.step_overflowed.end(),
                                 [](bool b) { return b; });
  if (cs.chain.back().dim() == 0) {
    v.kind = QuasiNilpotentVerdict::Kind::Yes;
    return v;
  }
  for (std::size_t i = 1; i < cs.chain.size(); ++i)
    if (cs.chain[i] == cs.chain[i - 1]) {
      bool clean = true;
      for (std::size_t j = i - 1; j < cs.step_overflowed.size(); ++j)
        clean = clean && !cs.step_overflowed[j];
      v.kind = clean ? QuasiNilpotentVerdict::Kind::No : QuasiNilpotentVerdict::Kind::Inconclusive;
      return v;
    }
  v.kind = QuasiNilpotentVerdict::Kind::Inconclusive;
  return v;
}

/// True when the part sits strictly on one side of the grading hyperplane
/// (all degrees positive or all negative). For such parts an iterated
/// bracket that leaves the window can never come back, so boundary escape
/// counts as vanishing in local-nilpotency checks.
inline bool one_sided_graded(const LiePresentation& p, const std::vector<int>& part) {
  if (!p.graded() || part.empty()) return false;
  bool all_pos = true, all_neg = true;
  for (int s : part) {
    long d = *p.symbol(s).degree;
    all_pos = all_pos && d > 0;
    all_neg = all_neg && d < 0;
  }
  return all_pos || all_neg;
}

struct PairVerdict {
  enum class Kind { Pair, NotPair, Inconclusive } kind = Kind::Inconclusive;
  bool window_bounded = false;
  QuasiNilpotentVerdict quasi_nilpotent;
  std::vector<std::string> failing_generators;  // witnesses for NotPair / Inconclusive

  std::string to_string() const {
    switch (kind) {
      case Kind::Pair:
        return window_bounded ? "pair (within window)" : "pair";
      case Kind::NotPair:
        return "not a pair";
      default:
        return "inconclusive";
    }
  }
};

namespace detail {

/// Projected adjoint action of `x` on the complement coordinates of g/n.
/// Components landing in the part span are dropped (that is the quotient);
/// window escape is either treated as vanishing (one-sided parts) or
/// reported through `clean = false`.
inline SparseMatrix projected_ad(const LiePresentation& p, const std::vector<int>& complement,
                                 const std::set<int>& part_set, int x, bool drop_overflow,
                                 bool& saw_overflow, bool& clean) {
  std::map<int, int> col_of;
  for (std::size_t i = 0; i < complement.size(); ++i) col_of[complement[i]] = static_cast<int>(i);
  SparseMatrix a(static_cast<int>(complement.size()), static_cast<int>(complement.size()));
  for (std::size_t j = 0; j < complement.size(); ++j) {
    BracketValue bv = p.bracket(x, complement[j]);
    if (bv.overflow) {
      saw_overflow = true;
      if (!drop_overflow) clean = false;
    }
    for (const auto& [s, c] : bv.inside.terms) {
      if (part_set.count(s)) continue;
      a.add(col_of.at(s), static_cast<int>(j), c);
    }
  }
  return a;
}

inline bool matrix_nilpotent(const SparseMatrix& a) {
  const int n = a.cols();
  RowSpace image(n);
  std::vector<std::vector<Rational>> vecs;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    vecs.push_back(std::move(e));
  }
  for (int step = 0; step <= n; ++step) {
    RowSpace next(n);
    std::vector<std::vector<Rational>> imgs;
    for (const auto& v : vecs) {
      auto w = a.apply(v);
      if (next.insert(w)) imgs.push_back(std::move(w));
    }
    if (next.dim() == 0) return true;
    vecs = std::move(imgs);
  }
  return false;
}

}  // namespace detail

/// Whittaker-pair test: the part must be quasi-nilpotent and act locally
/// nilpotently on g/n. Certified answers only; anything the window hides
/// comes back as "inconclusive" rather than a guess.
inline PairVerdict whittaker_pair_check(const LiePresentation& p, const std::vector<int>& part,
                                        int depth) {
  PairVerdict out;
  out.quasi_nilpotent = quasi_nilpotent_check(p, part, depth);
  out.window_bounded = out.quasi_nilpotent.window_bounded;
  if (out.quasi_nilpotent.kind == QuasiNilpotentVerdict::Kind::No) {
    out.kind = PairVerdict::Kind::NotPair;
    out.failing_generators.push_back("(lower central series stabilizes nonzero)");
    return out;
  }

  std::set<int> part_set(part.begin(), part.end());
  std::vector<int> complement;
  for (int s = 0; s < p.size(); ++s)
    if (!part_set.count(s)) complement.push_back(s);

  const bool drop = one_sided_graded(p, part);
  bool all_nilpotent = true, all_clean = true;
  for (int x : part) {
    bool saw_overflow = false, clean = true;
    SparseMatrix a =
        detail::projected_ad(p, complement, part_set, x, drop, saw_overflow, clean);
    out.window_bounded = out.window_bounded || saw_overflow;
    bool nil = detail::matrix_nilpotent(a);
    if (!nil) {
      all_nilpotent = false;
      out.failing_generators.push_back(p.symbol(x).tag);
    }
    all_clean = all_clean && clean;
  }
  if (!all_nilpotent) {
    // A non-nilpotent truncated action is a certificate only when nothing
    // was dropped at the boundary.
    out.kind = all_clean ? PairVerdict::Kind::NotPair : PairVerdict::Kind::Inconclusive;
    return out;
  }
  if (!all_clean || out.quasi_nilpotent.kind == QuasiNilpotentVerdict::Kind::Inconclusive) {
    out.kind = PairVerdict::Kind::Inconclusive;
    return out;
  }
  out.kind = PairVerdict::Kind::Pair;
  return out;
}

/// The adjoint n-module g/n on complement coordinates, as a FinDimModule.
/// Out-of-window components are droppable only for one-sided parts.
inline FinDimModule quotient_module(const LiePresentation& p, const std::vector<int>& part) {
  std::set<int> part_set(part.begin(), part.end());
  std::vector<int> complement;
  for (int s = 0; s < p.size(); ++s)
    if (!part_set.count(s)) complement.push_back(s);
  const bool drop = one_sided_graded(p, part);
  std::map<int, SparseMatrix> act;
  for (int x : part) {
    bool saw = false, clean = true;
    act.emplace(x, detail::projected_ad(p, complement, part_set, x, drop, saw, clean));
    if (!clean)
      throw truncation_error("adjoint action of " + p.symbol(x).tag +
                             " leaves the window on g/n");
  }
  return FinDimModule(p, part, std::move(act), static_cast<int>(complement.size()));
}

struct SimRelationResult {
  bool related = false;
  bool by_equality = false;                      // condition (I)
  std::vector<std::map<int, Rational>> weights;  // weights of g/n as an n-module
};

/// One generating step of the block relation: two characters are related
/// iff they are equal (condition (I), which is all condition (I) gives for
/// quasi-nilpotent parts) or their difference is a generalized weight of
/// the adjoint module g/n (condition (II)).
inline SimRelationResult sim_relation_check(const LiePresentation& p, const std::vector<int>& part,
                                            const Character& lambda, const Character& sigma,
                                            int depth) {
  auto qn = quasi_nilpotent_check(p, part, depth);
  if (qn.kind == QuasiNilpotentVerdict::Kind::No)
    throw usage_error("block relation supported for quasi-nilpotent parts only");
  SimRelationResult res;
  bool equal = true;
  for (int s : part) equal = equal && lambda.value(s) == sigma.value(s);
  if (equal) {
    res.related = true;
    res.by_equality = true;
  }
  auto blocks = generalized_weight_decomposition(quotient_module(p, part));
  for (const auto& blk : blocks) res.weights.push_back(blk.weight);
  for (const auto& w : res.weights) {
    bool match = true;
    for (int s : part) match = match && w.at(s) == sigma.value(s) - lambda.value(s);
    if (match) res.related = true;
  }
  return res;
}

struct OrbitReport {
  int dim = 0;
  bool saturated = false;
  bool overflowed = false;
  int words_used = 0;
};

namespace detail {

/// Row space over dynamically discovered monomial coordinates, rows kept
/// reduced against each other by leading (largest) monomial.
class MonomialSpan {
 public:
  /// Reduces v against the stored rows; if nonzero remains, stores it and
  /// returns true.
  bool insert(UEA v) {
    reduce(v);
    if (v.is_zero()) return false;
    Rational lead = v.t.rbegin()->second;
    for (auto& [m, c] : v.t) c /= lead;
    Monomial key = v.t.rbegin()->first;
    for (auto& [k, row] : rows_) {
      auto it = row.t.find(key);
      if (it == row.t.end()) continue;
      Rational f = it->second;
      row.add_scaled(v, -f);
    }
    rows_[key] = std::move(v);
    return true;
  }

  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(UEA& v) const {
    while (!v.is_zero()) {
      auto it = rows_.find(v.t.rbegin()->first);
      if (it == rows_.end()) return;
      v.add_scaled(it->second, -v.t.rbegin()->second);
    }
  }

  std::map<Monomial, UEA> rows_;
};

/// Projection onto the span of pure complement monomials, which is the
/// split-basis picture of U(g)/U(n): every monomial with a subalgebra
/// factor is dropped, the empty monomial stays. Orbit growth measured in
/// these coordinates is exactly the growth of "new complement monomials"
/// the adjoint action can produce.
inline UEA mod_un(const PBWContext& ctx, const UEA& u) {
  UEA out;
  for (const auto& [m, c] : u.t) {
    bool pure_complement = true;
    for (const auto& [r, e] : m.f) pure_complement = pure_complement && r < ctx.ord.split;
    if (pure_complement) out.add_term(m, c);
  }
  return out;
}

}  // namespace detail

/// Dimension of the span of ad-words of n-generators applied to u, taken
/// modulo U(n) in the split complement basis. Reports saturation (the
/// orbit stopped growing) or budget exhaustion.
inline OrbitReport adjoint_orbit_mod_un(const PBWContext& ctx, const std::vector<int>& part,
                                        const UEA& u, int budget) {
  OrbitReport rep;
  detail::MonomialSpan span;
  std::vector<UEA> frontier;
  UEA u0 = detail::mod_un(ctx, u);
  if (span.insert(u0)) frontier.push_back(u0);
  rep.dim = span.dim();
  for (int len = 1; len <= budget; ++len) {
    std::vector<UEA> next;
    for (const auto& v : frontier)
      for (int x : part) {
        PBWResult r = adjoint_action(ctx, x, v);
        rep.overflowed = rep.overflowed || r.overflowed;
        UEA w = detail::mod_un(ctx, r.value);
        if (span.insert(w)) next.push_back(std::move(w));
      }
    rep.words_used = len;
    if (next.empty()) {
      rep.saturated = true;
      break;
    }
    frontier = std::move(next);
  }
  rep.dim = span.dim();
  return rep;
}

/// Truncated induced module: basis (complement standard monomials of
/// degree <= depth) tensor (basis of N), with the action of part symbols
/// computed by straightening through the split form.
class InducedTruncation {
 public:
  InducedTruncation(const PBWContext& ctx, std::vector<int> part, const FinDimModule& n_module,
                    int depth)
      : ctx_(&ctx), part_(std::move(part)), nmod_(&n_module), depth_(depth) {
    for (int s : part_)
      if (ctx.rank(s) < ctx.ord.split)
        throw usage_error("context order does not put the inducing subalgebra last");
    for (const auto& m : residue_basis(ctx, ideal_of_part(), depth)) monomials_.push_back(m);
  }

  int dim() const { return static_cast<int>(monomials_.size()) * nmod_->dim(); }
  int depth() const { return depth_; }
  const std::vector<Monomial>& complement_monomials() const { return monomials_; }

  /// Index of (monomial, vector slot) pairs in the induced basis.
  int index_of(const Monomial& m, int slot) const {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
    if (it == monomials_.end() || !(*it == m)) throw internal_error("monomial outside truncation");
    return static_cast<int>(it - monomials_.begin()) * nmod_->dim() + slot;
  }

  /// Action of a part symbol; components pushed past the truncation depth
  /// cannot occur for part symbols (straightening never raises the
  /// complement degree), so the matrix is exact.
  SparseMatrix action(int x) const {
    SparseMatrix a(dim(), dim());
    for (std::size_t j = 0; j < monomials_.size(); ++j) {
      UEA m;
      m.t[monomials_[j]] = 1;
      PBWResult xr = multiply(*ctx_, uea_of_symbol(*ctx_, x), m);
      for (const auto& st : split_form(*ctx_, xr.value)) {
        // apply the subalgebra part of the term to each module slot
        for (int slot = 0; slot < nmod_->dim(); ++slot) {
          std::vector<Rational> v(nmod_->dim(), Rational(0));
          v[slot] = st.coeff;
          for (int t = static_cast<int>(st.subalgebra.f.size()) - 1; t >= 0; --t) {
            const auto& [r, e] = st.subalgebra.f[t];
            for (int rep = 0; rep < e; ++rep) v = nmod_->action(ctx_->sym(r)).apply(v);
          }
          for (int i = 0; i < nmod_->dim(); ++i)
            if (v[i] != 0) a.add(index_of(st.complement, i), static_cast<int>(j) * nmod_->dim() + slot, v[i]);
        }
      }
    }
    return a;
  }

  /// U(n)-orbit dimensions of the induced basis vectors, as evidence of
  /// local finiteness of the induced action.
  std::vector<OrbitReport> orbit_samples(int budget) const {
    std::vector<OrbitReport> out;
    std::map<int, SparseMatrix> acts;
    for (int x : part_) acts.emplace(x, action(x));
    for (int j = 0; j < dim(); ++j) {
      OrbitReport rep;
      RowSpace span(dim());
      std::vector<std::vector<Rational>> frontier;
      std::vector<Rational> e(dim(), Rational(0));
      e[j] = 1;
      span.insert(e);
      frontier.push_back(std::move(e));
      for (int len = 1; len <= budget; ++len) {
        std::vector<std::vector<Rational>> next;
        for (const auto& v : frontier)
          for (const auto& [x, a] : acts) {
            auto w = a.apply(v);
            if (span.insert(w)) next.push_back(std::move(w));
          }
        rep.words_used = len;
        if (next.empty()) {
          rep.saturated = true;
          break;
        }
        frontier = std::move(next);
      }
      rep.dim = span.dim();
      out.push_back(rep);
    }
    return out;
  }

 private:
  IdealGens ideal_of_part() const {
    IdealGens gens;
    for (int s : part_) gens[s] = IdealGen{Rational(0), 1};
    return gens;
  }

  const PBWContext* ctx_;
  std::vector<int> part_;
  const FinDimModule* nmod_;
  int depth_;
  std::vector<Monomial> monomials_;
};

}  // namespace liewhit
