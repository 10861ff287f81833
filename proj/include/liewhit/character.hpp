#pragma once

#include <map>
#include <string>
#include <vector>

#include "pbw.hpp"
#include "presentation.hpp"

namespace liewhit {

/// A Lie algebra homomorphism from a subalgebra to the scalars, stored on
/// the in-window generators. Extends multiplicatively to standard
/// monomials of the subalgebra.
struct Character {
  std::map<int, Rational> values;  // symbol -> value; absent means zero

  Rational value(int sym) const {
    auto it = values.find(sym);
    return it == values.end() ? Rational(0) : it->second;
  }

  /// Value on a standard monomial over subalgebra symbols.
  Rational of_monomial(const PBWContext& ctx, const Monomial& m) const {
    Rational out(1);
    for (const auto& [r, e] : m.f) {
      Rational v = value(ctx.sym(r));
      for (int i = 0; i < e; ++i) out *= v;
    }
    return out;
  }

  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

struct CharacterValidation {
  bool ok = true;
  std::string violation;      // first violated commutator, for the report
  int unchecked_pairs = 0;    // bracket pairs hidden by the window
};

/// Checks that the assignment vanishes on [n, n]: for every in-window pair
/// of part symbols, the value on the bracket must be zero. Pairs whose
/// bracket escapes the window cannot be checked and are counted.
inline CharacterValidation character_validate(const LiePresentation& p,
                                              const std::vector<int>& part,
                                              const Character& chi) {
  CharacterValidation out;
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      BracketValue bv = p.bracket(part[i], part[j]);
      if (bv.overflow) ++out.unchecked_pairs;
      Rational v(0);
      for (const auto& [s, c] : bv.inside.terms) v += c * chi.value(s);
      if (v != 0 && out.ok) {
        out.ok = false;
        out.violation = "[" + p.symbol(part[i]).tag + ", " + p.symbol(part[j]).tag +
                        "] carries the nonzero value " + format_rational(v);
      }
    }
  return out;
}

/// Splits on commas at parenthesis depth zero, so tags like D1(0,1)
/// survive inside lists.
inline std::vector<std::string> split_outside_parens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

/// Parses "tag=q,tag=q,..." against a presentation.
inline Character parse_character(const LiePresentation& p, const std::string& text) {
  Character chi;
  if (text.empty()) return chi;
  for (const auto& item : split_outside_parens(text)) {
    std::size_t eq = item.rfind('=');
    if (eq == std::string::npos) throw usage_error("character entries look like tag=rational");
    chi.values[p.index_of(item.substr(0, eq))] = parse_rational(item.substr(eq + 1));
  }
  return chi;
}

}  // namespace liewhit
