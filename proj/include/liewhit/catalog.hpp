#pragma once

#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "witt.hpp"

namespace liewhit {

struct CatalogParams {
  std::optional<std::pair<long, long>> window;  // degree window for infinite families
  std::optional<long> cap;                      // total-degree cap on witt exponent vectors
};

namespace detail {

inline LiePresentation make_solvable2d() {
  LiePresentation p("solvable2d");
  int a = p.add_symbol("a");
  int b = p.add_symbol("b");
  LieElement v;
  v.add(b, 1);
  p.set_bracket(a, b, v);
  p.add_part("n", {b});
  p.finalize();
  return p;
}

inline LiePresentation make_heisenberg3d() {
  LiePresentation p("heisenberg3d");
  int a = p.add_symbol("a");
  int b = p.add_symbol("b");
  int c = p.add_symbol("c");
  LieElement v;
  v.add(c, 1);
  p.set_bracket(a, b, v);
  p.add_part("n", {c});
  p.finalize();
  return p;
}

inline LiePresentation make_sl2() {
  // Coroot normalization: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  LiePresentation p("sl2");
  int f = p.add_symbol("f", -1);
  int h = p.add_symbol("h", 0);
  int e = p.add_symbol("e", 1);
  auto single = [&](int s, long c) {
    LieElement v;
    v.add(s, Rational(c));
    return v;
  };
  p.set_bracket(h, e, single(e, 2));
  p.set_bracket(h, f, single(f, -2));
  p.set_bracket(e, f, single(h, 1));
  p.add_part("n_minus", {f});
  p.add_part("h", {h});
  p.add_part("n_plus", {e});
  p.finalize();
  return p;
}

inline std::string e_tag(long i) {
  return i < 0 ? "e_" + std::to_string(-i) : "e" + std::to_string(i);
}

/// Basis {e_i : lo <= i <= hi} with [e_i, e_j] = (j-i) e_{i+j}; brackets
/// leaving the window are marked overflow by finalize().
inline LiePresentation make_witt_span(const std::string& name, long lo, long hi) {
  if (lo > hi) throw usage_error("empty index window");
  LiePresentation p(name);
  std::vector<int> ids(hi - lo + 1);
  for (long i = lo; i <= hi; ++i) ids[i - lo] = p.add_symbol(e_tag(i), i);
  for (long i = lo; i <= hi; ++i)
    for (long j = i + 1; j <= hi; ++j) {
      long t = i + j;
      if (t < lo || t > hi) continue;  // finalize() marks these overflow
      LieElement v;
      v.add(ids[t - lo], Rational(j - i));
      p.set_bracket(ids[i - lo], ids[j - lo], v);
    }
  p.set_window(lo, hi);
  std::vector<int> minus, zero, plus;
  for (long i = lo; i <= hi; ++i)
    (i < 0 ? minus : i == 0 ? zero : plus).push_back(ids[i - lo]);
  if (!minus.empty()) p.add_part("n_minus", minus);
  if (!zero.empty()) p.add_part("h", zero);
  if (!plus.empty()) p.add_part("n_plus", plus);
  p.finalize();
  return p;
}

inline LiePresentation make_v(long n, std::pair<long, long> window) {
  if (n < 0) throw usage_error("v_n requires n >= 0");
  long lo = std::max(n, window.first);
  return make_witt_span("v_" + std::to_string(n), lo, window.second);
}

/// The subalgebra {e_i : i <= n} of the full Witt span. Only n <= 1 gives
/// a subalgebra (two distinct indices i < j <= n bracket to index
/// i + j <= 2n - 1), hence the restriction.
inline LiePresentation make_v_op(long n, std::pair<long, long> window) {
  if (n > 1) throw usage_error("v_op_n is a subalgebra only for n <= 1");
  return make_witt_span("v_op_" + std::to_string(n), window.first, std::min(n, window.second));
}

/// The true quotient v_n / v_k: brackets reaching index >= k are honestly
/// zero, so the algebra is complete and carries no window.
inline LiePresentation make_v_quotient(long n, long k) {
  if (!(k > n && n >= 0)) throw usage_error("v_quotient(n,k) requires k > n >= 0");
  LiePresentation p("v_quotient(" + std::to_string(n) + "," + std::to_string(k) + ")");
  std::vector<int> ids(k - n);
  for (long i = n; i < k; ++i) ids[i - n] = p.add_symbol(e_tag(i), i);
  for (long i = n; i < k; ++i)
    for (long j = i + 1; j < k; ++j) {
      if (i + j >= k) continue;
      LieElement v;
      v.add(ids[i + j - n], Rational(j - i));
      p.set_bracket(ids[i - n], ids[j - n], v);
    }
  p.finalize();
  return p;
}

inline LiePresentation make_virasoro(std::pair<long, long> window) {
  return make_witt_span("centerless_virasoro", window.first, window.second);
}

inline LiePresentation make_witt_w(int n, long cap) {
  if (n < 1) throw usage_error("witt_w(n) requires n >= 1");
  if (cap < 1) throw usage_error("witt_w(n) requires a total-degree cap >= 1");
  std::vector<Derivation> basis;
  // All D_i(m) with |m| <= cap, enumerated deterministically.
  std::vector<long> m(n, 0);
  auto emit = [&](auto&& self, int pos, long left) -> void {
    if (pos == n) {
      for (int i = 1; i <= n; ++i) basis.push_back({i, m});
      return;
    }
    for (long v = 0; v <= left; ++v) {
      m[pos] = v;
      self(self, pos + 1, left - v);
    }
    m[pos] = 0;
  };
  emit(emit, 0, cap);

  LiePresentation p("w_" + std::to_string(n));
  long min_deg = 0, max_deg = 0;
  std::map<std::string, int> id_of;
  std::vector<std::pair<long, std::string>> ordered;
  for (const auto& d : basis) ordered.emplace_back(d.scalar_degree(), d.tag());
  std::sort(ordered.begin(), ordered.end());
  for (const auto& [deg, tag] : ordered) {
    id_of[tag] = p.add_symbol(tag, deg);
    min_deg = std::min(min_deg, deg);
    max_deg = std::max(max_deg, deg);
  }
  // Loose window; every pair is stored explicitly below, so the
  // finalize() fallback never fires for this family.
  p.set_window(2 * min_deg - 1, 2 * max_deg + 1);

  std::map<std::string, Derivation> by_tag;
  for (const auto& d : basis) by_tag[d.tag()] = d;
  for (auto it = by_tag.begin(); it != by_tag.end(); ++it)
    for (auto jt = std::next(it); jt != by_tag.end(); ++jt) {
      auto terms = witt_bracket(it->second, jt->second);
      LieElement v;
      bool overflow = false;
      for (const auto& [c, d] : terms) {
        if (d.total_degree() <= cap)
          v.add(id_of.at(d.tag()), c);
        else
          overflow = true;
      }
      p.set_bracket(id_of.at(it->first), id_of.at(jt->first), v, overflow);
    }

  std::vector<int> minus, diag, plus, gl;
  for (const auto& d : basis) {
    int id = id_of.at(d.tag());
    long td = d.total_degree();
    if (td == 1) gl.push_back(id);
    if (td == 0) {
      plus.push_back(id);  // the d/dx_i
    } else if (td == 1) {
      // D_var(e_j) = x_j d/dx_var has weight e_j - e_var: raising for
      // j < var (upper-triangular side of gl_n), lowering for j > var.
      int j = 0;
      for (int k = 0; k < n; ++k)
        if (d.exponents[k] == 1) j = k + 1;
      if (j == d.var)
        diag.push_back(id);
      else if (j > d.var)
        minus.push_back(id);
      else
        plus.push_back(id);
    } else {
      minus.push_back(id);
    }
  }
  p.add_part("n_minus", minus);
  p.add_part("h", diag);
  p.add_part("n_plus", plus);
  p.add_part("gl", gl);
  p.finalize();
  return p;
}

inline LiePresentation make_borel_sl(int n) {
  if (n < 2) throw usage_error("borel_sl(n) requires n >= 2");
  LiePresentation p("borel_sl" + std::to_string(n));
  std::map<std::pair<int, int>, int> e_id;
  std::vector<int> h_id(n - 1);
  for (int k = 1; k < n; ++k) h_id[k - 1] = p.add_symbol("h" + std::to_string(k), 0);
  for (int span = 1; span < n; ++span)
    for (int i = 1; i + span <= n; ++i) {
      int j = i + span;
      e_id[{i, j}] = p.add_symbol("e" + std::to_string(i) + "_" + std::to_string(j), span);
    }
  auto single = [&](int s, long c) {
    LieElement v;
    v.add(s, Rational(c));
    return v;
  };
  // h_k is dual to the simple roots: [h_k, e_(i,j)] = e_(i,j) iff i <= k < j.
  for (int k = 1; k < n; ++k)
    for (const auto& [ij, id] : e_id)
      if (ij.first <= k && k < ij.second) p.set_bracket(h_id[k - 1], id, single(id, 1));
  // Matrix unit brackets among positive root vectors.
  for (const auto& [ij, id1] : e_id)
    for (const auto& [kl, id2] : e_id) {
      if (id1 >= id2) continue;
      LieElement v;
      if (ij.second == kl.first) v.add(e_id.at({ij.first, kl.second}), 1);
      if (kl.second == ij.first) v.add(e_id.at({kl.first, ij.second}), -1);
      if (!v.is_zero()) p.set_bracket(id1, id2, v);
    }
  std::vector<int> hs(h_id.begin(), h_id.end());
  std::vector<int> es, simples;
  for (const auto& [ij, id] : e_id) {
    es.push_back(id);
    if (ij.second - ij.first == 1) simples.push_back(id);
  }
  p.add_part("h", hs);
  p.add_part("n", es);
  p.add_part("simple_roots", simples);
  p.finalize();
  return p;
}

}  // namespace detail

/// Instantiates a named example algebra. Infinite families take a window
/// (index range) or a total-degree cap through `params`.
///
/// Recognized names: solvable2d, heisenberg3d, sl2, v_<n>, v_op_<n>,
/// v_quotient(n,k), centerless_virasoro (alias virasoro), w_<n> (alias
/// witt_w(n)), borel_sl<n> (alias borel_sl(n)).
inline LiePresentation catalog(const std::string& name, const CatalogParams& params = {}) {
  auto need_window = [&]() -> std::pair<long, long> {
    if (!params.window) throw usage_error("algebra '" + name + "' needs --window lo:hi");
    return *params.window;
  };
  auto parse_suffix_int = [&](std::size_t pos) -> long {
    if (pos >= name.size()) throw usage_error("bad catalog name '" + name + "'");
    for (std::size_t i = pos; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i]))) throw usage_error("bad catalog name '" + name + "'");
    return std::stol(name.substr(pos));
  };

  if (name == "solvable2d") return detail::make_solvable2d();
  if (name == "heisenberg3d") return detail::make_heisenberg3d();
  if (name == "sl2") return detail::make_sl2();
  if (name == "centerless_virasoro" || name == "virasoro") return detail::make_virasoro(need_window());
  if (name.rfind("v_quotient(", 0) == 0 && name.back() == ')') {
    auto inner = name.substr(11, name.size() - 12);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw usage_error("expected v_quotient(n,k)");
    return detail::make_v_quotient(std::stol(inner.substr(0, comma)), std::stol(inner.substr(comma + 1)));
  }
  if (name.rfind("v_op_", 0) == 0) return detail::make_v_op(parse_suffix_int(5), need_window());
  if (name.rfind("v_", 0) == 0) return detail::make_v(parse_suffix_int(2), need_window());
  if (name.rfind("witt_w(", 0) == 0 && name.back() == ')') {
    long n = std::stol(name.substr(7, name.size() - 8));
    if (!params.cap) throw usage_error("witt_w(n) needs --cap");
    return detail::make_witt_w(static_cast<int>(n), *params.cap);
  }
  if (name.rfind("w_", 0) == 0) {
    long n = parse_suffix_int(2);
    if (!params.cap) throw usage_error("w_n needs --cap");
    return detail::make_witt_w(static_cast<int>(n), *params.cap);
  }
  if (name.rfind("borel_sl(", 0) == 0 && name.back() == ')')
    return detail::make_borel_sl(static_cast<int>(std::stol(name.substr(9, name.size() - 10))));
  if (name.rfind("borel_sl", 0) == 0)
    return detail::make_borel_sl(static_cast<int>(parse_suffix_int(8)));
  throw usage_error("unknown catalog algebra '" + name + "'");
}

}  // namespace liewhit
