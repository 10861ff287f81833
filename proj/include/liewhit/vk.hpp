#pragma once

#include <map>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "ext.hpp"
#include "findim.hpp"
#include "pbw.hpp"

namespace liewhit {

/// The finite-dimensional quotient of the enveloping algebra of the
/// two-dimensional solvable algebra by the left ideal ((a-mu)^k, b^k),
/// realized on its monomial residue basis.
class VkModule {
 public:
  VkModule(int k, const Rational& mu)
      : pres_(catalog("solvable2d")), k_(k), mu_(mu) {
    if (k < 1) throw usage_error("V_k needs k >= 1");
    ctx_ = PBWContext(pres_, pres_.part("n"));
    gens_[pres_.index_of("a")] = IdealGen{mu, k};
    gens_[pres_.index_of("b")] = IdealGen{Rational(0), k};
    basis_ = residue_basis(ctx_, gens_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
    a_act_ = left_mult(uea_of_symbol(ctx_, pres_.index_of("a")));
    b_act_ = left_mult(uea_of_symbol(ctx_, pres_.index_of("b")));
  }

  int dim() const { return static_cast<int>(basis_.size()); }
  int k() const { return k_; }
  const Rational& mu() const { return mu_; }
  const SparseMatrix& a_action() const { return a_act_; }
  const SparseMatrix& b_action() const { return b_act_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const LiePresentation& presentation() const { return pres_; }
  const PBWContext& ctx() const { return ctx_; }

  SparseMatrix left_mult(const UEA& u) const {
    SparseMatrix m(dim(), dim());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      UEA v;
      v.t[basis_[j]] = 1;
      UEA w = reduce_mod_left_ideal(ctx_, multiply(ctx_, u, v).value, gens_);
      for (const auto& [mono, c] : w.t) m.add(index_.at(mono), static_cast<int>(j), c);
    }
    return m;
  }

  /// Dimension of the endomorphism algebra, solved as an exact linear
  /// system: an endomorphism of the cyclic module is determined by the
  /// image v of the generator, and commuting with both actions is the
  /// condition that v is killed by left multiplication with the two ideal
  /// generators. Nothing about the expected ring structure is assumed.
  long end_dim() const {
    UEA ashift = uea_of_symbol(ctx_, pres_.index_of("a"));
    ashift.add_term(Monomial{}, -mu_);
    UEA apow = UEA::unit(), bpow = UEA::unit();
    UEA b = uea_of_symbol(ctx_, pres_.index_of("b"));
    for (int i = 0; i < k_; ++i) {
      apow = multiply(ctx_, apow, ashift).value;
      bpow = multiply(ctx_, bpow, b).value;
    }
    SparseMatrix ma = left_mult(apow);
    SparseMatrix mb = left_mult(bpow);
    SparseMatrix stacked(2 * dim(), dim());
    for (const auto& [rc, v] : ma.entries()) stacked.add(rc.first, rc.second, v);
    for (const auto& [rc, v] : mb.entries()) stacked.add(dim() + rc.first, rc.second, v);
    return static_cast<long>(kernel_basis(stacked).size());
  }

  // the context points into the owned presentation
  VkModule(const VkModule&) = delete;
  VkModule& operator=(const VkModule&) = delete;

 private:
  LiePresentation pres_;
  int k_;
  Rational mu_;
  PBWContext ctx_;
  IdealGens gens_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
  SparseMatrix a_act_, b_act_;
};

struct VkResult {
  long dim = 0;
  long end_dim = 0;
};

inline VkResult vk_module(int k, const Rational& mu) {
  VkModule m(k, mu);
  return {m.dim(), m.end_dim()};
}

struct QuiverRelationReport {
  bool decomposed = false;       // generalized a-eigenspaces found as expected
  bool b_shifts_weight = false;  // b maps the mu+i block into the mu+i+1 block
  bool relation_holds = false;   // b_i a_i = a_{i+1} b_i on every block
  int vertices = 0;

  bool pass() const { return decomposed && b_shifts_weight && relation_holds; }
};

/// Verifies the quiver relation on the V_k realization: with a_i the
/// nilpotent part of the a-action on the generalized weight-(mu+i) block
/// and b_i the b-action out of that block, the composite b then a equals
/// a then b, layer by layer.
inline QuiverRelationReport quiver_relation_check(int k, const Rational& mu) {
  VkModule m(k, mu);
  QuiverRelationReport rep;

  // generalized eigenspaces of the a-action
  LiePresentation line("line");
  int t = line.add_symbol("t");
  line.finalize();
  std::map<int, SparseMatrix> act;
  act.emplace(t, m.a_action());
  FinDimModule fm(line, {t}, act, m.dim());
  auto blocks = generalized_weight_decomposition(fm);
  rep.vertices = static_cast<int>(blocks.size());
  std::map<Rational, const WeightBlock*> by_weight;
  for (const auto& b : blocks) by_weight[b.weight.at(t)] = &b;
  rep.decomposed = true;
  for (int i = 0; i < k; ++i)
    if (!by_weight.count(mu + Rational(i))) rep.decomposed = false;
  if (!rep.decomposed) return rep;

  rep.b_shifts_weight = true;
  rep.relation_holds = true;
  for (int i = 0; i < k; ++i) {
    const WeightBlock& blk = *by_weight.at(mu + Rational(i));
    RowSpace target(m.dim());
    bool have_target = by_weight.count(mu + Rational(i + 1)) != 0;
    if (have_target)
      for (const auto& v : by_weight.at(mu + Rational(i + 1))->basis) target.insert(v);
    for (const auto& v : blk.basis) {
      auto bv = m.b_action().apply(v);
      bool zero = std::all_of(bv.begin(), bv.end(), [](const Rational& q) { return q == 0; });
      if (!zero && (!have_target || !target.contains(bv))) rep.b_shifts_weight = false;
      // relation: B (A - (mu+i)) v == (A - (mu+i+1)) B v, exactly
      auto av = m.a_action().apply(v);
      for (std::size_t x = 0; x < av.size(); ++x) av[x] -= (mu + Rational(i)) * v[x];
      auto lhs = m.b_action().apply(av);
      auto rhs = m.a_action().apply(bv);
      for (std::size_t x = 0; x < rhs.size(); ++x) rhs[x] -= (mu + Rational(i + 1)) * bv[x];
      if (lhs != rhs) rep.relation_holds = false;
    }
  }
  return rep;
}

/// Quiver presentation assembled from computed first extensions: vertices
/// along an integer coset window, loops and unit steps where Ext^1 is
/// one-dimensional, plus the exchange relations.
struct QuiverPresentation {
  std::vector<Rational> vertices;
  struct Arrow {
    int from, to;  // vertex indices; from == to is the loop
    std::string name;
  };
  std::vector<Arrow> arrows;
  std::vector<std::string> relations;
  bool cross_coset_clean = true;  // no arrows to off-coset samples
};

inline QuiverPresentation ext_quiver_assemble(const std::vector<Rational>& vertices,
                                              const std::vector<Rational>& off_coset_samples,
                                              int truncation = 0) {
  QuiverPresentation q;
  q.vertices = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      long e1 = ext_solvable2d_zero(vertices[i], vertices[j], truncation).at(1);
      if (e1 == 0) continue;
      std::string name = (i == j ? "a" : "b") + std::to_string(i);
      q.arrows.push_back({static_cast<int>(i), static_cast<int>(j), name});
    }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (const auto& nu : off_coset_samples)
      if (ext_solvable2d_zero(vertices[i], nu, truncation).at(1) != 0 ||
          ext_solvable2d_zero(nu, vertices[i], truncation).at(1) != 0)
        q.cross_coset_clean = false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i + 1] == vertices[i] + 1)
      q.relations.push_back("b" + std::to_string(i) + " a" + std::to_string(i) + " = a" +
                            std::to_string(i + 1) + " b" + std::to_string(i));
  return q;
}

}  // namespace liewhit
