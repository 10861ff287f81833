#pragma once

#include <map>
#include <string>
#include <vector>

#include "character.hpp"
#include "linalg.hpp"
#include "pbw.hpp"
#include "structure.hpp"

namespace liewhit {

/// Standard Whittaker module: the enveloping algebra induced from the
/// one-dimensional character module of the part, realized on complement
/// standard monomials through the split PBW basis. Acting by any symbol
/// straightens and then evaluates the subalgebra tail at the character.
class StandardModule {
 public:
  StandardModule(const LiePresentation& p, std::vector<int> part, Character lambda,
                 int pair_check_depth = 16)
      : ctx_(p, part), part_(std::move(part)), lambda_(std::move(lambda)) {
    auto verdict = whittaker_pair_check(p, part_, pair_check_depth);
    if (verdict.kind != PairVerdict::Kind::Pair)
      throw usage_error("(" + p.name() + ", part) is " + verdict.to_string() +
                        "; standard modules need a certified Whittaker pair");
    auto val = character_validate(p, part_, lambda_);
    if (!val.ok) throw usage_error("character does not vanish on [n,n]: " + val.violation);
    for (int s : part_) gens_[s] = IdealGen{lambda_.value(s), 1};
  }

  const PBWContext& ctx() const { return ctx_; }
  const std::vector<int>& part() const { return part_; }
  const Character& lambda() const { return lambda_; }

  /// Basis of the degree <= d slice of the realization.
  std::vector<Monomial> slice(int d) const { return residue_basis(ctx_, gens_, d); }

  /// Action of u on an element written in complement monomials.
  UEA act(const UEA& u, const UEA& v) const {
    PBWResult prod = multiply(ctx_, u, v);
    return reduce_mod_left_ideal(ctx_, prod.value, gens_);
  }

  UEA act_symbol(int x, const UEA& v) const { return act(uea_of_symbol(ctx_, x), v); }

 private:
  PBWContext ctx_;
  std::vector<int> part_;
  Character lambda_;
  IdealGens gens_;
};

/// Solution of a Whittaker-vector problem on a finite slice.
struct WhittakerSolveResult {
  int depth = 0;
  int dim = 0;
  /// Representative, when the solution space is nonzero: monomial-level
  /// components of the first canonical kernel vector.
  std::vector<std::pair<Monomial, Rational>> representative;
};

/// Exact basis of the joint kernel of (x - lambda(x)) on the degree <= d
/// slice of a realized quotient module. Works for any realization that
/// offers slice(d) and act_symbol(x, v); part symbols never raise the
/// slice degree, so there are no boundary corrections.
template <class Realization>
WhittakerSolveResult whittaker_vectors_on(const Realization& rm, const std::vector<int>& part,
                                          const Character& lambda, int d) {
  auto basis = rm.slice(d);
  std::map<Monomial, int> col;
  for (std::size_t j = 0; j < basis.size(); ++j) col[basis[j]] = static_cast<int>(j);
  const int n = static_cast<int>(basis.size());
  const int ng = static_cast<int>(part.size());
  SparseMatrix sys(ng * n, n);
  int row0 = 0;
  for (int x : part) {
    for (int j = 0; j < n; ++j) {
      UEA v;
      v.t[basis[j]] = 1;
      UEA w = rm.act_symbol(x, v);
      w.add_term(basis[j], -lambda.value(x));
      for (const auto& [m, c] : w.t) {
        auto it = col.find(m);
        if (it == col.end()) throw internal_error("action left the degree slice");
        sys.add(row0 + it->second, j, c);
      }
    }
    row0 += n;
  }
  WhittakerSolveResult out;
  out.depth = d;
  auto ker = kernel_basis(sys);
  out.dim = static_cast<int>(ker.size());
  if (!ker.empty())
    for (int j = 0; j < n; ++j)
      if (ker[0][j] != 0) out.representative.emplace_back(basis[j], ker[0][j]);
  return out;
}

inline WhittakerSolveResult whittaker_vectors(const StandardModule& sm, int d) {
  return whittaker_vectors_on(sm, sm.part(), sm.lambda(), d);
}

struct SimplicityCertificate {
  bool unique_whittaker = false;
  bool degree_reduction = false;
  int whittaker_dim = 0;
  std::string witness;  // first basis monomial violating the reduction, if any

  bool pass() const { return unique_whittaker && degree_reduction; }
};

/// Desk certificate for simplicity of a standard module along the proof
/// pattern for the two-dimensional solvable algebra: a unique Whittaker
/// vector up to depth, plus the check that id - lambda(x)^{-1} x strictly
/// lowers the degree of every basis monomial, which lets any nonzero
/// element be pushed down to the generator.
inline SimplicityCertificate simplicity_certificate(const StandardModule& sm, int designated_x,
                                                    int depth) {
  SimplicityCertificate cert;
  auto solve = whittaker_vectors(sm, depth);
  cert.whittaker_dim = solve.dim;
  cert.unique_whittaker = solve.dim == 1;
  if (sm.lambda().value(designated_x) == 0) {
    // no degree-reduction operator exists at a vanishing character value
    cert.degree_reduction = false;
    cert.witness = "lambda vanishes on the designated generator";
    return cert;
  }
  cert.degree_reduction = true;
  Rational inv = Rational(1) / sm.lambda().value(designated_x);
  for (const auto& m : sm.slice(depth)) {
    if (m.degree() == 0) continue;
    UEA v;
    v.t[m] = 1;
    UEA image = sm.act_symbol(designated_x, v);
    UEA diff = v;
    diff.add_scaled(image, -inv);
    if (diff.degree() >= m.degree()) {
      cert.degree_reduction = false;
      cert.witness = format_monomial(sm.ctx(), m);
      break;
    }
  }
  return cert;
}

struct DualWhittakerResult {
  std::vector<int> dims_by_depth;  // solution dimension at each truncation 0..d
  int skipped_equations = 0;       // equations unusable because of the window
  bool consistent = true;
};

/// Dimension of Whittaker functionals on the degree-truncated enveloping
/// algebra of the part: functionals f on U(n)_{<=d} with (x - lambda(x)) f
/// vanishing on U(n)_{<=d-1}. The recursion f(x u) = lambda(x) f(u) -
/// f(corrections) determines f from f(1), so the dimension is one exactly
/// when all the overdetermined assignments agree.
inline DualWhittakerResult whittaker_vectors_in_dual(const LiePresentation& p,
                                                     const std::vector<int>& part,
                                                     const Character& lambda, int d) {
  detail::require_subalgebra(p, part);
  {
    auto val = character_validate(p, part, lambda);
    if (!val.ok) throw usage_error("character does not vanish on [n,n]: " + val.violation);
  }
  PBWContext ctx(p, part, OverflowPolicy::Mark);
  DualWhittakerResult out;
  std::map<Monomial, Rational> f;
  f[Monomial{}] = 1;
  out.dims_by_depth.push_back(1);

  // monomials over part symbols only, by exact degree
  std::vector<std::vector<Monomial>> by_degree(d + 1);
  by_degree[0].push_back(Monomial{});
  std::vector<int> part_ranks;
  for (int s : part) part_ranks.push_back(ctx.rank(s));
  std::sort(part_ranks.begin(), part_ranks.end());
  for (int k = 1; k <= d; ++k)
    for (const auto& u : by_degree[k - 1])
      for (int r : part_ranks) {
        if (!u.f.empty() && u.f.front().first < r) continue;  // extend on the left only
        std::vector<int> w{r};
        auto uw = u.word();
        w.insert(w.end(), uw.begin(), uw.end());
        by_degree[k].push_back(Monomial::from_sorted_word(w));
      }

  bool consistent = true;
  for (int k = 1; k <= d; ++k) {
    for (const auto& u : by_degree[k - 1]) {
      for (int x : part) {
        std::vector<int> w{x};
        for (int r : u.word()) w.push_back(ctx.sym(r));
        PBWResult nf = normalize_word(ctx, w);
        if (nf.overflowed) {
          ++out.skipped_equations;
          continue;
        }
        // the unique degree-k monomial in x*u carries coefficient 1
        Rational rhs = lambda.value(x) * f.at(u);
        Monomial top;
        for (const auto& [m, c] : nf.value.t) {
          if (m.degree() == k) {
            top = m;
            if (c != 1) throw internal_error("leading coefficient of x*u is not one");
          } else {
            rhs -= c * f.at(m);
          }
        }
        auto it = f.find(top);
        if (it == f.end())
          f[top] = rhs;
        else if (it->second != rhs)
          consistent = false;
      }
    }
    out.dims_by_depth.push_back(consistent ? 1 : 0);
  }
  out.consistent = consistent;
  return out;
}

}  // namespace liewhit
