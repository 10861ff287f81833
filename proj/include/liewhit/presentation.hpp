#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace liewhit {

/// A named basis element, with a degree when the algebra is graded.
struct BasisSymbol {
  std::string tag;
  std::optional<long> degree;
};

/// Sparse element of the Lie algebra itself (not of the enveloping algebra):
/// a rational combination of basis symbols, keyed by symbol index.
struct LieElement {
  std::map<int, Rational> terms;

  bool is_zero() const { return terms.empty(); }

  void add(int sym, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(sym);
    if (it == terms.end()) {
      terms[sym] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  void add_scaled(const LieElement& other, const Rational& c) {
    for (const auto& [s, v] : other.terms) add(s, c * v);
  }

  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms == b.terms; }
};

/// A bracket value together with a flag recording whether the genuine
/// bracket has components falling outside the declared finite window.
/// Out-of-window mass is never silently dropped: the flag travels with
/// every result that touched it.
struct BracketValue {
  LieElement inside;
  bool overflow = false;

  friend bool operator==(const BracketValue& a, const BracketValue& b) {
    return a.overflow == b.overflow && a.inside == b.inside;
  }
};

enum class OverflowPolicy { Reject, Mark };

/// Lie algebra presented by structure constants on an indexed basis, with
/// an optional grading, an optional degree window (for finite views of
/// infinite algebras) and named subalgebra parts.
///
/// Antisymmetry is built in: only one orientation of each pair is stored.
class LiePresentation {
 public:
  explicit LiePresentation(std::string name = "") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  int add_symbol(const std::string& tag, std::optional<long> degree = std::nullopt) {
    if (sealed_) throw internal_error("presentation is sealed");
    if (index_.count(tag)) throw usage_error("duplicate basis tag '" + tag + "'");
    basis_.push_back({tag, degree});
    index_[tag] = static_cast<int>(basis_.size()) - 1;
    return index_[tag];
  }

  /// Stores [x, y] for x != y. Overwrites any previous entry for the pair.
  void set_bracket(int x, int y, LieElement value, bool overflow = false) {
    if (sealed_) throw internal_error("presentation is sealed");
    check_sym(x);
    check_sym(y);
    if (x == y) throw usage_error("bracket of a symbol with itself is zero and cannot be set");
    for (const auto& [s, c] : value.terms) check_sym(s);
    bool flip = x > y;
    if (flip) std::swap(x, y);
    BracketValue bv{std::move(value), overflow};
    if (flip)
      for (auto& [s, c] : bv.inside.terms) c = -c;
    // Explicit zeros stay stored: "stored" means "known", which keeps the
    // window fallback in finalize() from guessing about them.
    table_[{x, y}] = std::move(bv);
  }

  void set_window(long lo, long hi) {
    if (sealed_) throw internal_error("presentation is sealed");
    if (lo > hi) throw usage_error("window lower bound exceeds upper bound");
    window_ = {lo, hi};
  }

  void add_part(const std::string& name, std::vector<int> syms) {
    if (sealed_) throw internal_error("presentation is sealed");
    for (int s : syms) check_sym(s);
    parts_[name] = std::move(syms);
  }

  /// Seals the presentation. For graded windowed presentations, every
  /// unstored pair whose degree sum leaves the window is marked as
  /// overflow here; true zero brackets inside the window stay zero.
  void finalize() {
    if (sealed_) return;
    if (window_ && !graded()) throw usage_error("a degree window requires a graded presentation");
    if (graded() && window_) {
      const auto [lo, hi] = *window_;
      for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) {
          if (table_.count({i, j})) continue;
          long d = *basis_[i].degree + *basis_[j].degree;
          if (d < lo || d > hi) table_[{i, j}] = BracketValue{{}, true};
        }
    }
    sealed_ = true;
  }

  bool sealed() const { return sealed_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisSymbol>& basis() const { return basis_; }
  const BasisSymbol& symbol(int i) const { check_sym(i); return basis_[i]; }
  std::optional<std::pair<long, long>> window() const { return window_; }
  const std::map<std::string, std::vector<int>>& parts() const { return parts_; }
  const std::map<std::pair<int, int>, BracketValue>& bracket_table() const { return table_; }

  bool graded() const {
    for (const auto& b : basis_)
      if (!b.degree) return false;
    return !basis_.empty();
  }

  int index_of(const std::string& tag) const {
    auto it = index_.find(tag);
    if (it == index_.end()) throw usage_error("unknown basis tag '" + tag + "'");
    return it->second;
  }

  bool has_tag(const std::string& tag) const { return index_.count(tag) != 0; }

  const std::vector<int>& part(const std::string& name) const {
    auto it = parts_.find(name);
    if (it == parts_.end()) throw usage_error("unknown part '" + name + "'");
    return it->second;
  }

  /// [x, y] of two basis symbols, antisymmetry applied.
  BracketValue bracket(int x, int y) const {
    check_sym(x);
    check_sym(y);
    if (x == y) return {};
    bool flip = x > y;
    if (flip) std::swap(x, y);
    auto it = table_.find({x, y});
    if (it == table_.end()) return {};
    BracketValue out = it->second;
    if (flip)
      for (auto& [s, c] : out.inside.terms) c = -c;
    return out;
  }

  BracketValue bracket(const LieElement& a, const LieElement& b) const {
    BracketValue out;
    for (const auto& [x, cx] : a.terms)
      for (const auto& [y, cy] : b.terms) {
        BracketValue bv = bracket(x, y);
        out.inside.add_scaled(bv.inside, cx * cy);
        out.overflow = out.overflow || bv.overflow;
      }
    return out;
  }

  LieElement element_of(int sym) const {
    check_sym(sym);
    LieElement e;
    e.add(sym, 1);
    return e;
  }

 private:
  void check_sym(int i) const {
    if (i < 0 || i >= size()) throw internal_error("symbol index out of range");
  }

  std::string name_;
  std::vector<BasisSymbol> basis_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, BracketValue> table_;  // key has first < second
  std::map<std::string, std::vector<int>> parts_;
  std::optional<std::pair<long, long>> window_;
  bool sealed_ = false;
};

/// One failed or overflowed Jacobi triple, for reporting.
struct JacobiTriple {
  int x, y, z;
};

struct JacobiReport {
  int checked = 0;
  std::vector<std::pair<JacobiTriple, LieElement>> failures;  // triple and nonzero residual
  std::vector<JacobiTriple> overflowed;

  bool pass() const { return failures.empty(); }
};

/// Verifies [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 for every basis triple
/// whose brackets stay inside the window. Triples touching overflow are
/// listed separately and are not counted as failures.
inline JacobiReport jacobi_check(const LiePresentation& p) {
  JacobiReport rep;
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        bool overflow = false;
        LieElement sum;
        auto accumulate = [&](int a, int b, int c) {
          BracketValue inner = p.bracket(a, b);
          overflow = overflow || inner.overflow;
          BracketValue outer = p.bracket(inner.inside, p.element_of(c));
          overflow = overflow || outer.overflow;
          sum.add_scaled(outer.inside, 1);
        };
        accumulate(x, y, z);
        accumulate(y, z, x);
        accumulate(z, x, y);
        if (overflow) {
          rep.overflowed.push_back({x, y, z});
        } else {
          ++rep.checked;
          if (!sum.is_zero()) rep.failures.push_back({{x, y, z}, sum});
        }
      }
  return rep;
}

struct DecompositionReport {
  bool covers_basis = false;
  bool disjoint = false;
  std::vector<std::string> not_closed;  // parts with a bracket escaping their span
  int overflowed_pairs = 0;

  bool pass() const { return covers_basis && disjoint && not_closed.empty(); }
};

/// Checks that the named parts partition the basis and that each part is
/// closed under the bracket within the window. Parts are spans of disjoint
/// basis subsets, so linear independence of the spans is immediate once
/// disjointness holds.
inline DecompositionReport decomposition_check(const LiePresentation& p,
                                               const std::vector<std::string>& part_names) {
  DecompositionReport rep;
  std::set<int> seen;
  bool disjoint = true;
  for (const auto& name : part_names)
    for (int s : p.part(name))
      if (!seen.insert(s).second) disjoint = false;
  rep.disjoint = disjoint;
  rep.covers_basis = static_cast<int>(seen.size()) == p.size();

  for (const auto& name : part_names) {
    const auto& syms = p.part(name);
    std::set<int> members(syms.begin(), syms.end());
    bool closed = true;
    for (std::size_t i = 0; i < syms.size() && closed; ++i)
      for (std::size_t j = i + 1; j < syms.size() && closed; ++j) {
        BracketValue bv = p.bracket(syms[i], syms[j]);
        if (bv.overflow) ++rep.overflowed_pairs;
        for (const auto& [s, c] : bv.inside.terms)
          if (!members.count(s)) closed = false;
      }
    if (!closed) rep.not_closed.push_back(name);
  }
  return rep;
}

}  // namespace liewhit
