#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "presentation.hpp"

namespace liewhit {

/// Total order on basis symbols with a split point in the sense of a split
/// PBW basis: symbols of the designated subalgebra form a suffix of the
/// order, so every standard monomial factors as
/// (complement monomial) * (subalgebra monomial).
struct MonomialOrder {
  std::vector<int> rank_of;  // symbol id -> position in the order
  std::vector<int> sym_of;   // position -> symbol id
  int split = 0;             // positions >= split belong to the subalgebra
};

/// Default order: complement symbols first, subalgebra symbols last, each
/// group sorted by (degree, tag). With an empty part this is just the
/// (degree, tag) order on the whole basis.
inline MonomialOrder make_order(const LiePresentation& p, const std::vector<int>& part = {}) {
  std::vector<bool> in_part(p.size(), false);
  for (int s : part) in_part[s] = true;
  auto key = [&](int s) {
    const auto& b = p.symbol(s);
    return std::make_pair(b.degree.value_or(0), b.tag);
  };
  std::vector<int> complement, suffix;
  for (int s = 0; s < p.size(); ++s) (in_part[s] ? suffix : complement).push_back(s);
  auto by_key = [&](int a, int b) { return key(a) < key(b); };
  std::sort(complement.begin(), complement.end(), by_key);
  std::sort(suffix.begin(), suffix.end(), by_key);
  MonomialOrder ord;
  ord.split = static_cast<int>(complement.size());
  ord.sym_of = complement;
  ord.sym_of.insert(ord.sym_of.end(), suffix.begin(), suffix.end());
  ord.rank_of.assign(p.size(), -1);
  for (int r = 0; r < p.size(); ++r) ord.rank_of[ord.sym_of[r]] = r;
  return ord;
}

/// Standard monomial: factors (rank, exponent) with strictly increasing
/// rank and positive exponents. The empty list is the unit.
struct Monomial {
  std::vector<std::pair<int, int>> f;

  int degree() const {
    int d = 0;
    for (const auto& [r, e] : f) d += e;
    return d;
  }

  bool is_unit() const { return f.empty(); }

  std::vector<int> word() const {
    std::vector<int> w;
    for (const auto& [r, e] : f) w.insert(w.end(), e, r);
    return w;
  }

  static Monomial from_sorted_word(const std::vector<int>& w) {
    Monomial m;
    for (int r : w) {
      if (!m.f.empty() && m.f.back().first == r)
        ++m.f.back().second;
      else
        m.f.emplace_back(r, 1);
    }
    return m;
  }

  // Graded, then lexicographic on the factor list.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.f < b.f;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f == b.f; }
};

/// Element of the universal enveloping algebra in PBW normal form:
/// finitely many standard monomials with nonzero rational coefficients.
struct UEA {
  std::map<Monomial, Rational> t;

  bool is_zero() const { return t.empty(); }

  int degree() const {  // filtration degree; -1 for the zero element
    int d = -1;
    for (const auto& [m, c] : t) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  void add_scaled(const UEA& other, const Rational& c) {
    for (const auto& [m, v] : other.t) add_term(m, c * v);
  }

  static UEA unit() {
    UEA u;
    u.t[Monomial{}] = 1;
    return u;
  }

  friend bool operator==(const UEA& a, const UEA& b) { return a.t == b.t; }
};

/// Everything PBW arithmetic needs: the presentation, the order and the
/// policy for brackets that leave the window.
struct PBWContext {
  const LiePresentation* p = nullptr;
  MonomialOrder ord;
  OverflowPolicy policy = OverflowPolicy::Reject;

  PBWContext() = default;
  PBWContext(const LiePresentation& pres, std::vector<int> part = {},
             OverflowPolicy pol = OverflowPolicy::Reject)
      : p(&pres), ord(make_order(pres, part)), policy(pol) {}

  int rank(int sym) const { return ord.rank_of[sym]; }
  int sym(int rank) const { return ord.sym_of[rank]; }
};

/// Result of an operation that may have crossed the window boundary under
/// the mark-overflow policy. Under reject-overflow the flag is always
/// false (the operation throws instead).
struct PBWResult {
  UEA value;
  bool overflowed = false;
};

namespace detail {

/// Straightens coeff * word into the accumulator. Worklist rewriting:
/// take the leftmost adjacent inversion x y (rank x > rank y) and apply
/// x y = y x + [x, y]. Swaps keep the degree and lower the inversion
/// count, bracket terms lower the degree, so this terminates.
inline void straighten(const PBWContext& ctx, std::vector<int> word, Rational coeff, UEA& out,
                       bool& overflowed) {
  std::vector<std::pair<Rational, std::vector<int>>> work;
  work.emplace_back(std::move(coeff), std::move(word));
  while (!work.empty()) {
    auto [c, w] = std::move(work.back());
    work.pop_back();
    int inv = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
      if (w[i] > w[i + 1]) {
        inv = i;
        break;
      }
    if (inv < 0) {
      out.add_term(Monomial::from_sorted_word(w), c);
      continue;
    }
    BracketValue bv = ctx.p->bracket(ctx.sym(w[inv]), ctx.sym(w[inv + 1]));
    if (bv.overflow) {
      if (ctx.policy == OverflowPolicy::Reject)
        throw truncation_error("straightening left the window at [" +
                               ctx.p->symbol(ctx.sym(w[inv])).tag + ", " +
                               ctx.p->symbol(ctx.sym(w[inv + 1])).tag + "]");
      overflowed = true;
    }
    for (const auto& [z, cz] : bv.inside.terms) {
      std::vector<int> wz;
      wz.reserve(w.size() - 1);
      wz.insert(wz.end(), w.begin(), w.begin() + inv);
      wz.push_back(ctx.rank(z));
      wz.insert(wz.end(), w.begin() + inv + 2, w.end());
      work.emplace_back(c * cz, std::move(wz));
    }
    std::swap(w[inv], w[inv + 1]);
    work.emplace_back(std::move(c), std::move(w));
  }
}

}  // namespace detail

/// PBW normal form of a raw word of symbol ids.
inline PBWResult normalize_word(const PBWContext& ctx, const std::vector<int>& symbols,
                                const Rational& coeff = Rational(1)) {
  PBWResult res;
  std::vector<int> ranks;
  ranks.reserve(symbols.size());
  for (int s : symbols) ranks.push_back(ctx.rank(s));
  detail::straighten(ctx, std::move(ranks), coeff, res.value, res.overflowed);
  return res;
}

inline UEA uea_of_symbol(const PBWContext& ctx, int sym) {
  UEA u;
  Monomial m;
  m.f.emplace_back(ctx.rank(sym), 1);
  u.t[m] = 1;
  return u;
}

/// Normalized product x * y.
inline PBWResult multiply(const PBWContext& ctx, const UEA& x, const UEA& y) {
  PBWResult res;
  for (const auto& [mx, cx] : x.t)
    for (const auto& [my, cy] : y.t) {
      if (mx.is_unit() || my.is_unit() ||
          mx.f.back().first <= my.f.front().first) {
        // Concatenation is already sorted; merge without straightening.
        std::vector<int> w = mx.word();
        auto wy = my.word();
        w.insert(w.end(), wy.begin(), wy.end());
        res.value.add_term(Monomial::from_sorted_word(w), cx * cy);
      } else {
        std::vector<int> w = mx.word();
        auto wy = my.word();
        w.insert(w.end(), wy.begin(), wy.end());
        detail::straighten(ctx, std::move(w), cx * cy, res.value, res.overflowed);
      }
    }
  return res;
}

/// ad_x(u) = x u - u x for a basis symbol x.
inline PBWResult adjoint_action(const PBWContext& ctx, int x, const UEA& u) {
  UEA xe = uea_of_symbol(ctx, x);
  PBWResult left = multiply(ctx, xe, u);
  PBWResult right = multiply(ctx, u, xe);
  left.value.add_scaled(right.value, Rational(-1));
  left.overflowed = left.overflowed || right.overflowed;
  return left;
}

/// One generator (x - shift)^power of a left ideal of triangular shape.
struct IdealGen {
  Rational shift;
  int power = 1;
};

using IdealGens = std::map<int, IdealGen>;  // keyed by symbol id

namespace detail {

/// Coefficients of X^e mod (X - c)^k as a polynomial of degree < k.
/// From X^e = sum_t C(e,t) c^(e-t) (X-c)^t, truncated at t < k.
inline std::vector<Rational> power_remainder(int e, const Rational& c, int k) {
  std::vector<Rational> out(k, Rational(0));
  // binomials C(e, t) for t < k
  Rational binom_et(1);
  for (int t = 0; t < k && t <= e; ++t) {
    if (t > 0) binom_et = binom_et * Rational(e - t + 1) / Rational(t);
    Rational lead = binom_et;
    for (int i = 0; i < e - t; ++i) lead *= c;
    // expand (X - c)^t
    Rational binom_ts(1);
    for (int s = t; s >= 0; --s) {
      Rational term = lead * binom_ts;
      if ((t - s) % 2 != 0) term = -term;
      for (int i = 0; i < t - s; ++i) term *= c;
      out[s] += term;
      binom_ts = binom_ts * Rational(s) / Rational(t - s + 1);
    }
  }
  return out;
}

inline void reduce_factors(const PBWContext& ctx, const IdealGens& gens,
                           std::vector<std::pair<int, int>> f, const Rational& c, UEA& out) {
  for (int r = static_cast<int>(f.size()) - 1; r >= 0; --r) {
    int sym = ctx.sym(f[r].first);
    auto g = gens.find(sym);
    if (g == gens.end()) continue;
    if (f[r].second < g->second.power) continue;
    // Move the generator past the kept suffix: every suffix symbol y must
    // satisfy [x, y] = kappa y, which turns (x - c)^k into (x - c - K)^k
    // with K the sum of kappa * exponent over the suffix.
    Rational ceff = g->second.shift;
    for (std::size_t s = r + 1; s < f.size(); ++s) {
      int ysym = ctx.sym(f[s].first);
      BracketValue bv = ctx.p->bracket(sym, ysym);
      if (bv.overflow)
        throw usage_error("left-ideal reduction hit a window boundary at [" +
                          ctx.p->symbol(sym).tag + ", " + ctx.p->symbol(ysym).tag + "]");
      if (bv.inside.is_zero()) continue;
      if (bv.inside.terms.size() == 1 && bv.inside.terms.begin()->first == ysym)
        ceff += bv.inside.terms.begin()->second * Rational(f[s].second);
      else
        throw usage_error("generator set not of the supported triangular shape: [" +
                          ctx.p->symbol(sym).tag + ", " + ctx.p->symbol(ysym).tag +
                          "] is not proportional to " + ctx.p->symbol(ysym).tag);
    }
    auto rem = power_remainder(f[r].second, ceff, g->second.power);
    for (int s = static_cast<int>(rem.size()) - 1; s >= 0; --s) {
      if (rem[s] == 0) continue;
      auto f2 = f;
      if (s == 0)
        f2.erase(f2.begin() + r);
      else
        f2[r].second = s;
      reduce_factors(ctx, gens, std::move(f2), c * rem[s], out);
    }
    return;
  }
  Monomial m;
  m.f = std::move(f);
  out.add_term(m, c);
}

}  // namespace detail

/// Class of u in the quotient by the left ideal generated by
/// (x - shift)^power over the given symbols. The result is supported on
/// monomials whose ideal-symbol exponents stay below the powers; for
/// power-one generators the symbols are eliminated entirely.
inline UEA reduce_mod_left_ideal(const PBWContext& ctx, const UEA& u, const IdealGens& gens) {
  for (const auto& [sym, g] : gens)
    if (g.power < 1) throw usage_error("ideal generator powers must be >= 1");
  UEA out;
  for (const auto& [m, c] : u.t) detail::reduce_factors(ctx, gens, m.f, c, out);
  return out;
}

/// All residue monomials: free symbols bounded by total degree, ideal
/// symbols bounded by their powers. Enumerated in monomial order.
inline std::vector<Monomial> residue_basis(const PBWContext& ctx, const IdealGens& gens,
                                           int free_degree_cap) {
  std::vector<Monomial> out;
  std::vector<std::pair<int, int>> stack;  // (rank, exp) prefix
  int nranks = static_cast<int>(ctx.ord.sym_of.size());
  auto rec = [&](auto&& self, int rank, int free_left) -> void {
    if (rank == nranks) {
      Monomial m;
      m.f = stack;
      out.push_back(m);
      return;
    }
    int sym = ctx.sym(rank);
    auto g = gens.find(sym);
    int max_exp = g != gens.end() ? g->second.power - 1 : free_left;
    bool counts_free = g == gens.end();
    self(self, rank + 1, free_left);
    for (int e = 1; e <= max_exp; ++e) {
      stack.emplace_back(rank, e);
      self(self, rank + 1, counts_free ? free_left - e : free_left);
      stack.pop_back();
    }
  };
  rec(rec, 0, free_degree_cap);
  std::sort(out.begin(), out.end());
  return out;
}

/// A term of the split PBW form: complement part, subalgebra part, scalar.
struct SplitTerm {
  Monomial complement;
  Monomial subalgebra;
  Rational coeff;
};

/// Rewrites u in the basis (complement monomial) * (subalgebra monomial).
/// Standard monomials under a split order already factor this way, so the
/// split is a bookkeeping step; it round-trips through multiplication.
inline std::vector<SplitTerm> split_form(const PBWContext& ctx, const UEA& u) {
  std::vector<SplitTerm> out;
  for (const auto& [m, c] : u.t) {
    SplitTerm st;
    st.coeff = c;
    for (const auto& fac : m.f)
      (fac.first < ctx.ord.split ? st.complement : st.subalgebra).f.push_back(fac);
    out.push_back(std::move(st));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word expression syntax (the CLI contract): whitespace-separated factors
// with ^ powers and rational prefix coefficients, terms joined by
// standalone + or - tokens. Example: "2/3 b a^2 + a - 1/2 b".
// ---------------------------------------------------------------------------

inline PBWResult parse_word_expression(const PBWContext& ctx, const std::string& text) {
  std::vector<std::string> tokens;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw usage_error("empty word expression");

  PBWResult res;
  std::size_t i = 0;
  Rational sign(1);
  if (tokens[0] == "-" || tokens[0] == "+") {  // leading sign
    sign = tokens[0] == "-" ? -1 : 1;
    ++i;
  }
  while (i < tokens.size()) {
    Rational coeff = sign;
    bool saw_factor = false;
    std::vector<int> word;
    // optional rational prefix
    if (i < tokens.size() && (isdigit(static_cast<unsigned char>(tokens[i][0])))) {
      coeff = coeff * parse_rational(tokens[i]);
      ++i;
      saw_factor = true;
    }
    while (i < tokens.size() && tokens[i] != "+" && tokens[i] != "-") {
      std::string base = tokens[i];
      int exp = 1;
      auto caret = base.find('^');
      if (caret != std::string::npos) {
        exp = std::stoi(base.substr(caret + 1));
        base = base.substr(0, caret);
        if (exp < 1) throw usage_error("exponents must be positive");
      }
      int s = ctx.p->index_of(base);
      word.insert(word.end(), exp, s);
      ++i;
      saw_factor = true;
    }
    if (!saw_factor) throw usage_error("empty term in word expression");
    PBWResult term = normalize_word(ctx, word, coeff);
    res.value.add_scaled(term.value, Rational(1));
    res.overflowed = res.overflowed || term.overflowed;
    if (i < tokens.size()) {
      sign = tokens[i] == "-" ? Rational(-1) : Rational(1);
      ++i;
      if (i == tokens.size()) throw usage_error("trailing sign in word expression");
    }
  }
  return res;
}

inline std::string format_monomial(const PBWContext& ctx, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (const auto& [r, e] : m.f) {
    if (!s.empty()) s += " ";
    s += ctx.p->symbol(ctx.sym(r)).tag;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

/// Deterministic rendering, highest monomial first; parses back through
/// parse_word_expression.
inline std::string format_uea(const PBWContext& ctx, const UEA& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (auto it = u.t.rbegin(); it != u.t.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "- " : "";
    else
      s += neg ? " - " : " + ";
    if (a != 1 || m.is_unit()) {
      s += format_rational(a);
      if (!m.is_unit()) s += " ";
    }
    if (!m.is_unit()) s += format_monomial(ctx, m);
  }
  return s;
}

}  // namespace liewhit
