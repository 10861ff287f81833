#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace liewhit {

/// Basis derivation x_1^{m_1} ... x_n^{m_n} d/dx_i of the Lie algebra of
/// derivations of a polynomial ring in n variables.
struct Derivation {
  int var = 1;                  // i, 1-based
  std::vector<long> exponents;  // m, one entry per variable

  int nvars() const { return static_cast<int>(exponents.size()); }
  long total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0L); }

  /// ad-weight under the span of the x_j d/dx_j: the exponent vector with
  /// one subtracted in position i.
  std::vector<long> weight() const {
    std::vector<long> w = exponents;
    w[var - 1] -= 1;
    return w;
  }

  /// Scalar grading separating the triangular parts: a positive linear
  /// functional of the weight, strictly negative on the raising part, zero
  /// on the diagonal span, strictly positive on the rest. The coefficients
  /// n+1..2n satisfy both c_i < c_j for i < j and 2 c_1 > c_n, which is
  /// what the two conditions need; for one variable the functional is just
  /// the weight itself.
  long scalar_degree() const {
    auto w = weight();
    if (nvars() == 1) return w[0];
    long d = 0;
    for (int k = 0; k < nvars(); ++k) d += static_cast<long>(nvars() + k + 1) * w[k];
    return d;
  }

  std::string tag() const {
    std::string s = "D" + std::to_string(var) + "(";
    for (int k = 0; k < nvars(); ++k) {
      if (k) s += ",";
      s += std::to_string(exponents[k]);
    }
    return s + ")";
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.var == b.var && a.exponents == b.exponents;
  }
  friend auto operator<=>(const Derivation& a, const Derivation& b) = default;
};

/// Lie bracket of two basis derivations by Leibniz composition:
///   [x^m d_i, x^m' d_j] = m'_i x^{m+m'-e_i} d_j  -  m_j x^{m+m'-e_j} d_i.
/// Terms whose coefficient vanishes are omitted.
inline std::vector<std::pair<Rational, Derivation>> witt_bracket(const Derivation& a,
                                                                 const Derivation& b) {
  if (a.nvars() != b.nvars()) throw usage_error("witt bracket of derivations in different rings");
  std::vector<std::pair<Rational, Derivation>> out;
  const long ca = b.exponents[a.var - 1];
  if (ca != 0) {
    Derivation d;
    d.var = b.var;
    d.exponents = a.exponents;
    for (int k = 0; k < a.nvars(); ++k) d.exponents[k] += b.exponents[k];
    d.exponents[a.var - 1] -= 1;
    out.emplace_back(Rational(ca), d);
  }
  const long cb = a.exponents[b.var - 1];
  if (cb != 0) {
    Derivation d;
    d.var = a.var;
    d.exponents = a.exponents;
    for (int k = 0; k < a.nvars(); ++k) d.exponents[k] += b.exponents[k];
    d.exponents[b.var - 1] -= 1;
    out.emplace_back(Rational(-cb), d);
  }
  // Same target derivation can occur twice (i = j); merge.
  if (out.size() == 2 && out[0].second == out[1].second) {
    out[0].first += out[1].first;
    out.pop_back();
    if (out[0].first == 0) out.clear();
  }
  return out;
}

}  // namespace liewhit
