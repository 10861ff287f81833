// Independent oracles used by the test and acceptance suites. Everything
// here is deliberately computed along a different route than the library:
// partition counting by the coin recurrence, homology of the product
// algebra by an explicit tensor-product complex, and random commuting
// module generation with the block data remembered.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "liewhit/findim.hpp"
#include "liewhit/linalg.hpp"

namespace oracles {

using namespace liewhit;

inline std::vector<long> partition_numbers(int upto) {
  std::vector<long> dp(upto + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= upto; ++part)
    for (int n = part; n <= upto; ++n) dp[n] += dp[n - part];
  return dp;
}

/// Homology of the total complex of two copies of the three-term scalar
/// complex that resolves a one-dimensional module over the two-dimensional
/// solvable algebra; this is the direct computation over the product
/// algebra, with no Kuenneth shortcut.
inline std::map<int, long> product_complex_homology(const Rational& mu1, const Rational& nu1,
                                                    const Rational& mu2, const Rational& nu2) {
  auto factor = [](const Rational& mu, const Rational& nu) {
    std::vector<SparseMatrix> d(2);
    d[0] = SparseMatrix(2, 1);
    d[0].set(0, 0, Rational(0));  // -b acts by zero on the 1-dim module
    d[0].set(1, 0, nu - mu);
    d[1] = SparseMatrix(1, 2);
    d[1].set(0, 0, nu - mu - 1);
    d[1].set(0, 1, Rational(0));
    return d;
  };
  auto d1 = factor(mu1, nu1);
  auto d2 = factor(mu2, nu2);
  std::vector<int> crank{1, 2, 1};
  auto tdim = [&](int n) {
    int s = 0;
    for (int p = 0; p <= 2; ++p)
      if (n - p >= 0 && n - p <= 2) s += crank[p] * crank[n - p];
    return s;
  };
  auto offset = [&](int n, int p) {
    int s = 0;
    for (int q = 0; q < p; ++q)
      if (n - q >= 0 && n - q <= 2) s += crank[q] * crank[n - q];
    return s;
  };
  std::vector<SparseMatrix> D;
  for (int n = 0; n < 4; ++n) {
    SparseMatrix m(tdim(n + 1), tdim(n));
    for (int p = 0; p <= 2; ++p) {
      int q = n - p;
      if (q < 0 || q > 2) continue;
      if (p < 2)
        for (const auto& [rc, v] : d1[p].entries())
          for (int j = 0; j < crank[q]; ++j)
            m.add(offset(n + 1, p + 1) + rc.first * crank[q] + j,
                  offset(n, p) + rc.second * crank[q] + j, v);
      if (q < 2) {
        Rational sign = p % 2 == 0 ? 1 : -1;
        for (const auto& [rc, v] : d2[q].entries())
          for (int i = 0; i < crank[p]; ++i)
            m.add(offset(n + 1, p) + i * crank[q + 1] + rc.first,
                  offset(n, p) + i * crank[q] + rc.second, sign * v);
      }
    }
    D.push_back(std::move(m));
  }
  std::map<int, long> h;
  for (int n = 0; n <= 4; ++n) {
    long ker = n < 4 ? tdim(n) - rank(D[n]) : tdim(4);
    long im = n > 0 ? rank(D[n - 1]) : 0;
    if (ker - im != 0) h[n] = ker - im;
  }
  return h;
}

struct RandomModule {
  FinDimModule module;
  std::map<Rational, int> first_weight_dims;  // weight of generator 0 -> dimension
};

/// Random two-generator commuting module with known block data: each block
/// is (alpha I + c N, beta I + d N + e N^2) for a single shift N,
/// conjugated by a random unimodular matrix.
inline RandomModule random_nilpotent_module(const LiePresentation& abelian2, std::mt19937& rng) {
  std::uniform_int_distribution<int> dimd(1, 8), blocksd(1, 3), vald(-3, 3);
  int dim = dimd(rng);
  std::vector<int> sizes;
  int left = dim;
  while (left > 0) {
    int s = std::min(left, blocksd(rng));
    sizes.push_back(s);
    left -= s;
  }
  std::vector<std::vector<Rational>> A(dim, std::vector<Rational>(dim, Rational(0)));
  std::vector<std::vector<Rational>> B = A;
  std::map<std::pair<Rational, Rational>, int> joint;
  int at = 0;
  for (int s : sizes) {
    Rational alpha(vald(rng)), beta(vald(rng));
    joint[{alpha, beta}] += s;
    Rational c(vald(rng)), d(vald(rng)), e(vald(rng));
    for (int i = 0; i < s; ++i) {
      A[at + i][at + i] = alpha;
      B[at + i][at + i] = beta;
      if (i + 1 < s) {
        A[at + i][at + i + 1] = c;
        B[at + i][at + i + 1] = d;
      }
      if (i + 2 < s) B[at + i][at + i + 2] = e;
    }
    at += s;
  }
  std::vector<std::vector<Rational>> S(dim, std::vector<Rational>(dim, Rational(0)));
  std::vector<std::vector<Rational>> Sinv = S;
  for (int i = 0; i < dim; ++i) S[i][i] = Sinv[i][i] = 1;
  for (int rep = 0; rep < 2 * dim; ++rep) {
    int i = std::uniform_int_distribution<int>(0, dim - 1)(rng);
    int j = std::uniform_int_distribution<int>(0, dim - 1)(rng);
    if (i == j) continue;
    Rational c(vald(rng));
    for (int k = 0; k < dim; ++k) S[i][k] += c * S[j][k];
    for (int k = 0; k < dim; ++k) Sinv[k][j] -= c * Sinv[k][i];
  }
  auto conj = [&](const std::vector<std::vector<Rational>>& M) {
    SparseMatrix out(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        Rational acc(0);
        for (int k = 0; k < dim; ++k)
          for (int l = 0; l < dim; ++l) acc += S[i][k] * M[k][l] * Sinv[l][j];
        if (acc != 0) out.set(i, j, acc);
      }
    return out;
  };
  std::map<int, SparseMatrix> act;
  act.emplace(0, conj(A));
  act.emplace(1, conj(B));
  std::map<Rational, int> adims;
  for (const auto& [ab, d] : joint) adims[ab.first] += d;
  return {FinDimModule(abelian2, {0, 1}, std::move(act), dim), adims};
}

}  // namespace oracles
