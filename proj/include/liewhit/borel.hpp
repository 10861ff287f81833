#pragma once

#include <map>
#include <string>
#include <vector>

#include "character.hpp"
#include "pbw.hpp"
#include "presentation.hpp"

namespace liewhit {

/// Simple module L over a Borel presentation, cut out by the left ideal
/// generated by e_alpha - lambda_alpha (positive roots) and h - mu(h) for
/// the Cartan generators dual to roots where lambda vanishes. Realized on
/// polynomial monomials in the remaining Cartan generators.
class BorelSimpleModule {
 public:
  BorelSimpleModule(const LiePresentation& p, Character lambda, Character mu)
      : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    const auto& n = p.part("n");
    const auto& simples = p.part("simple_roots");
    const auto& h = p.part("h");
    auto val = character_validate(p, n, lambda_);
    if (!val.ok)
      throw usage_error("character must vanish off the simple roots: " + val.violation);
    std::set<int> simple_set(simples.begin(), simples.end());
    for (const auto& [s, v] : lambda_.values)
      if (v != 0 && !simple_set.count(s))
        throw usage_error("character value on a non-simple root vector " + p.symbol(s).tag);

    // h_k pairs with the k-th simple root: both carry index k in their tags.
    auto root_index = [&](int sym) {
      const std::string& t = p.symbol(sym).tag;  // "e<k>_<k+1>" or "h<k>"
      return std::stoi(t.substr(1));
    };
    std::map<int, int> h_by_index;
    for (int hs : h) h_by_index[root_index(hs)] = hs;
    for (int e : simples) {
      int hs = h_by_index.at(root_index(e));
      if (lambda_.value(e) != 0)
        h_free_.push_back(hs);
      else
        h_fixed_.push_back(hs);
      paired_e_[hs] = e;
    }
    for (const auto& [s, v] : mu_.values)
      if (v != 0 && std::find(h_fixed_.begin(), h_fixed_.end(), s) == h_fixed_.end())
        throw usage_error("mu must live on the Cartan generators with vanishing lambda");

    std::vector<int> ideal_syms = n;
    ideal_syms.insert(ideal_syms.end(), h_fixed_.begin(), h_fixed_.end());
    ctx_ = PBWContext(p, ideal_syms);
    for (int e : n) gens_[e] = IdealGen{lambda_.value(e), 1};
    for (int hs : h_fixed_) gens_[hs] = IdealGen{mu_.value(hs), 1};
    npart_ = n;
  }

  const PBWContext& ctx() const { return ctx_; }
  const Character& lambda() const { return lambda_; }
  const std::vector<int>& free_cartan() const { return h_free_; }
  const std::vector<int>& npart() const { return npart_; }

  std::vector<Monomial> slice(int d) const { return residue_basis(ctx_, gens_, d); }

  UEA act(const UEA& u, const UEA& v) const {
    PBWResult prod = multiply(ctx_, u, v);
    return reduce_mod_left_ideal(ctx_, prod.value, gens_);
  }

  UEA act_symbol(int x, const UEA& v) const { return act(uea_of_symbol(ctx_, x), v); }

  /// Dimension of the exact-degree-d layer of the realization: monomials
  /// of degree d in the free Cartan variables.
  long layer_dim(int d) const {
    // compositions of d into |h_free_| nonnegative parts
    long n = static_cast<long>(h_free_.size());
    if (n == 0) return d == 0 ? 1 : 0;
    // C(d + n - 1, n - 1)
    long num = 1, den = 1;
    for (long i = 1; i <= n - 1; ++i) {
      num *= d + i;
      den *= i;
    }
    return num / den;
  }

  /// Verifies the per-root tensor factorization on the degree <= d slice:
  /// each simple-root pair (h_k, e_k) acts only in its own variable, with
  /// the shift action lambda_k f(h_k - 1) on the nonvanishing roots, and
  /// the layer dimensions match the convolution of the factor ladders.
  bool factorization_check(int d) const {
    for (const auto& m : slice(d)) {
      UEA v;
      v.t[m] = 1;
      for (int hs : h_free_) {
        int e = paired_e_.at(hs);
        UEA got = act_symbol(e, v);
        // expected: lambda(e) * shift of the hs variable by -1
        UEA want;
        Rational le = lambda_.value(e);
        // expand (h-1)^k in the hs slot
        std::vector<std::pair<int, int>> others;
        int k = 0;
        for (const auto& [r, exp] : m.f) {
          if (ctx_.sym(r) == hs)
            k = exp;
          else
            others.emplace_back(r, exp);
        }
        // (hs - 1)^k = sum_j C(k,j) (-1)^(k-j) hs^j
        Rational binom(1);
        for (int j = k; j >= 0; --j) {
          Monomial mm;
          mm.f = others;
          if (j > 0) {
            mm.f.emplace_back(ctx_.rank(hs), j);
            std::sort(mm.f.begin(), mm.f.end());
          }
          Rational c = binom * le;
          if ((k - j) % 2 != 0) c = -c;
          want.add_term(mm, c);
          binom = binom * Rational(j) / Rational(k - j + 1);
        }
        if (!(got == want)) return false;
      }
      // vanishing-lambda roots act by zero on the realization
      for (int e : npart_) {
        if (lambda_.value(e) != 0) continue;
        if (!act_symbol(e, v).is_zero()) return false;
      }
    }
    // layer dims equal the product ladder: every factor with nonzero
    // lambda contributes one polynomial variable, the rest contribute
    // scalars, so the convolution is the composition count.
    for (int k = 0; k <= d; ++k) {
      long direct = 0;
      for (const auto& m : slice(d))
        if (m.degree() == k) ++direct;
      if (direct != layer_dim(k)) return false;
    }
    return true;
  }

 private:
  PBWContext ctx_;
  Character lambda_, mu_;
  std::vector<int> npart_, h_free_, h_fixed_;
  std::map<int, int> paired_e_;  // free cartan -> its simple root vector
  IdealGens gens_;
};

}  // namespace liewhit
