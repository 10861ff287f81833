#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "presentation.hpp"

namespace liewhit {

/// Finite-dimensional module over a subalgebra of a presented Lie algebra,
/// given by one action matrix per acting basis symbol. Construction checks
/// the representation identity rho([x,y]) = [rho(x), rho(y)] on every pair
/// whose bracket stays inside the window.
class FinDimModule {
 public:
  FinDimModule(const LiePresentation& p, std::vector<int> generators,
               std::map<int, SparseMatrix> actions, int dim)
      : pres_(&p), gens_(std::move(generators)), act_(std::move(actions)), dim_(dim) {
    for (int g : gens_) {
      auto it = act_.find(g);
      if (it == act_.end()) throw usage_error("missing action matrix for " + p.symbol(g).tag);
      if (it->second.rows() != dim_ || it->second.cols() != dim_)
        throw usage_error("action matrix for " + p.symbol(g).tag + " has wrong shape");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        BracketValue bv = p.bracket(gens_[i], gens_[j]);
        if (bv.overflow) continue;  // cannot be checked inside the window
        SparseMatrix lhs = act_.at(gens_[i]) * act_.at(gens_[j]) -
                           act_.at(gens_[j]) * act_.at(gens_[i]);
        SparseMatrix rhs(dim_, dim_);
        for (const auto& [z, c] : bv.inside.terms) {
          auto zt = act_.find(z);
          if (zt == act_.end())
            throw usage_error("bracket [" + p.symbol(gens_[i]).tag + "," + p.symbol(gens_[j]).tag +
                              "] leaves the acting generator span");
          for (const auto& [rc, v] : zt->second.entries()) rhs.add(rc.first, rc.second, c * v);
        }
        if (!(lhs == rhs))
          throw usage_error("matrices do not represent the bracket of " + p.symbol(gens_[i]).tag +
                            " and " + p.symbol(gens_[j]).tag);
      }
  }

  int dim() const { return dim_; }
  const std::vector<int>& generators() const { return gens_; }
  const SparseMatrix& action(int sym) const { return act_.at(sym); }
  const LiePresentation& presentation() const { return *pres_; }

 private:
  const LiePresentation* pres_;
  std::vector<int> gens_;
  std::map<int, SparseMatrix> act_;
  int dim_;
};

namespace detail {

using Dense = std::vector<std::vector<Rational>>;

inline Dense dense_of(const SparseMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
  for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

/// Monic characteristic polynomial by the Faddeev-LeVerrier recursion;
/// returns coefficients by ascending power of t.
inline std::vector<Rational> charpoly(const Dense& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Dense m = a;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // m <- a (m + c_{n-k+1} I)
      Dense t = m;
      for (int i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
      m = dense_mul(a, t);
    }
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += m[i][i];
    c[n - k] = -tr / Rational(k);
  }
  return c;
}

inline Rational horner(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc(0);
  for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) acc = acc * x + poly[i];
  return acc;
}

/// All positive divisors of |n|, from trial-division factorization. When
/// a cofactor above the trial bound survives it is treated as one extra
/// prime; `complete` reports whether that shortcut was taken.
inline std::vector<BigInt> divisors(BigInt n, bool& complete) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, int>> fact;
  for (BigInt d = 2; d * d <= n && d < (1 << 20); ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    fact.emplace_back(d, e);
  }
  if (n > 1) {
    fact.emplace_back(n, 1);
    if (n >= (BigInt(1) << 40)) complete = false;  // cofactor may be composite
  }
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : fact) {
    std::size_t sz = divs.size();
    BigInt pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  return divs;
}

/// Verified rational roots of a polynomial with rational coefficients.
/// `complete` is false only when candidate enumeration may have missed a
/// divisor of an unfactorable constant term.
inline std::vector<Rational> rational_roots(std::vector<Rational> poly, bool& complete) {
  complete = true;
  std::vector<Rational> roots;
  while (poly.size() > 1 && poly.front() == 0) {
    if (roots.empty()) roots.push_back(Rational(0));  // roots, not multiplicities
    poly.erase(poly.begin());
  }
  if (poly.size() <= 1) return roots;
  // clear denominators
  BigInt lcm = 1;
  for (const auto& c : poly) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<BigInt> ip;
  for (const auto& c : poly) ip.push_back(numerator(c * Rational(lcm)));
  std::vector<BigInt> ps = divisors(ip.front(), complete);
  std::vector<BigInt> qs = divisors(ip.back(), complete);
  std::set<Rational> seen(roots.begin(), roots.end());
  for (const auto& pd : ps)
    for (const auto& qd : qs)
      for (int sign : {1, -1}) {
        Rational cand = rat(sign * pd, qd);
        if (seen.count(cand)) continue;
        if (horner(poly, cand) == 0) {
          roots.push_back(cand);
          seen.insert(cand);
        }
      }
  return roots;
}

}  // namespace detail

/// One generalized weight block: the weight as values on the acting
/// generators, and a basis of the invariant subspace.
struct WeightBlock {
  std::map<int, Rational> weight;
  std::vector<std::vector<Rational>> basis;
};

/// Checks that the Lie algebra generated by the action matrices is
/// nilpotent (the lower central series of the matrix span reaches zero).
inline bool action_image_nilpotent(const FinDimModule& m) {
  const int n2 = m.dim() * m.dim();
  auto flatten = [&](const SparseMatrix& a) {
    std::vector<Rational> v(n2, Rational(0));
    for (const auto& [rc, val] : a.entries()) v[rc.first * m.dim() + rc.second] = val;
    return v;
  };
  std::vector<SparseMatrix> level, base;
  for (int g : m.generators()) base.push_back(m.action(g));
  level = base;
  RowSpace prev(n2);
  for (const auto& a : level) prev.insert(flatten(a));
  for (int step = 0; step <= n2 + 1; ++step) {
    std::vector<SparseMatrix> next;
    RowSpace span(n2);
    for (const auto& a : level)
      for (const auto& b : base) {
        SparseMatrix c = a * b - b * a;
        if (span.insert(flatten(c))) next.push_back(c);
      }
    if (span.dim() == 0) return true;
    if (span == prev) return false;  // stabilized at a nonzero span
    prev = span;
    level = std::move(next);
  }
  return false;
}

/// Decomposition into joint generalized weight spaces. Requires a
/// nilpotent action image; the blocks returned are invariant under every
/// generator, pairwise independent, and sum to the whole module.
inline std::vector<WeightBlock> generalized_weight_decomposition(const FinDimModule& m) {
  if (!action_image_nilpotent(m))
    throw usage_error("action image is not nilpotent; generalized weights are undefined here");

  std::vector<WeightBlock> blocks;
  {
    WeightBlock whole;
    for (int i = 0; i < m.dim(); ++i) {
      std::vector<Rational> e(m.dim(), Rational(0));
      e[i] = 1;
      whole.basis.push_back(std::move(e));
    }
    blocks.push_back(std::move(whole));
  }

  for (int g : m.generators()) {
    std::vector<WeightBlock> refined;
    for (auto& blk : blocks) {
      const int k = static_cast<int>(blk.basis.size());
      // restriction of the action to the block
      SparseMatrix cols(m.dim(), k);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < m.dim(); ++i)
          if (blk.basis[j][i] != 0) cols.set(i, j, blk.basis[j][i]);
      detail::Dense restr(k, std::vector<Rational>(k, Rational(0)));
      for (int j = 0; j < k; ++j) {
        auto w = m.action(g).apply(blk.basis[j]);
        auto coord = solve(cols, w);
        if (!coord) throw internal_error("weight block is not invariant");
        for (int i = 0; i < k; ++i) restr[i][j] = (*coord)[i];
      }
      bool complete = true;
      auto roots = detail::rational_roots(detail::charpoly(restr), complete);
      int found = 0;
      for (const auto& c : roots) {
        // kernel of (restr - c)^k
        detail::Dense shifted = restr;
        for (int i = 0; i < k; ++i) shifted[i][i] -= c;
        detail::Dense power = shifted;
        for (int e = 1; e < k; ++e) power = detail::dense_mul(power, shifted);
        SparseMatrix pm(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (power[i][j] != 0) pm.set(i, j, power[i][j]);
        auto ker = kernel_basis(pm);
        if (ker.empty()) continue;
        WeightBlock sub;
        sub.weight = blk.weight;
        sub.weight[g] = c;
        for (const auto& v : ker) {
          std::vector<Rational> lifted(m.dim(), Rational(0));
          for (int j = 0; j < k; ++j)
            for (int i = 0; i < m.dim(); ++i) lifted[i] += v[j] * blk.basis[j][i];
          sub.basis.push_back(std::move(lifted));
        }
        found += static_cast<int>(sub.basis.size());
        refined.push_back(std::move(sub));
      }
      if (found != k)
        throw usage_error(complete
                              ? "module has non-rational generalized weights"
                              : "could not certify rational weights (constant term unfactorable)");
    }
    blocks = std::move(refined);
  }

  // Invariance and exact recombination.
  int total = 0;
  RowSpace all(m.dim());
  for (const auto& blk : blocks) {
    total += static_cast<int>(blk.basis.size());
    RowSpace span(m.dim());
    for (const auto& v : blk.basis) {
      span.insert(v);
      all.insert(v);
    }
    for (int g : m.generators())
      for (const auto& v : blk.basis)
        if (!span.contains(m.action(g).apply(v))) throw internal_error("weight block not invariant");
  }
  if (total != m.dim() || all.dim() != m.dim())
    throw internal_error("weight blocks do not recombine to the module");
  return blocks;
}

/// Socle data: for each weight, a basis of the joint eigenspace
/// intersect_x ker(rho(x) - lambda(x)). Nonempty for every nonzero module
/// over a nilpotent action image.
inline std::vector<WeightBlock> socle_vectors(const FinDimModule& m) {
  auto blocks = generalized_weight_decomposition(m);
  std::vector<WeightBlock> out;
  for (const auto& blk : blocks) {
    const int ng = static_cast<int>(m.generators().size());
    SparseMatrix stacked(ng * m.dim(), m.dim());
    int row0 = 0;
    for (int g : m.generators()) {
      for (const auto& [rc, v] : m.action(g).entries()) stacked.add(row0 + rc.first, rc.second, v);
      for (int i = 0; i < m.dim(); ++i) stacked.add(row0 + i, i, -blk.weight.at(g));
      row0 += m.dim();
    }
    // restrict to the block: joint kernel intersected with the block span
    RowSpace span(m.dim());
    for (const auto& v : blk.basis) span.insert(v);
    WeightBlock soc;
    soc.weight = blk.weight;
    for (const auto& v : kernel_basis(stacked)) {
      // a joint eigenvector of weight lambda always lies in the lambda block
      if (!span.contains(v)) throw internal_error("eigenvector escapes its weight block");
      soc.basis.push_back(v);
    }
    if (soc.basis.empty()) throw internal_error("nonzero weight block with empty socle");
    out.push_back(std::move(soc));
  }
  return out;
}

}  // namespace liewhit
