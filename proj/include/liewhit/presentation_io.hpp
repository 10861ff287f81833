#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace liewhit {

/// Parses the line-oriented presentation format:
///
///   basis <tag> [degree=<int>]
///   bracket <tag> <tag> = <coeff> <tag> [+ <coeff> <tag> ...]
///   part <name> = <tag>,<tag>,...
///   window <lo> <hi>
///
/// Blank lines and lines starting with '#' are skipped. Unknown keys are
/// errors.
inline LiePresentation parse_presentation(std::istream& in, const std::string& name = "file") {
  LiePresentation p(name);
  std::string line;
  int lineno = 0;
  std::optional<std::pair<long, long>> window;
  std::vector<std::string> deferred;  // bracket/part lines, applied after all basis lines
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return usage_error("line " + std::to_string(lineno) + ": " + why);
    };
    if (key == "basis") {
      std::string tag, attr;
      if (!(ls >> tag)) throw fail("basis needs a tag");
      std::optional<long> degree;
      if (ls >> attr) {
        if (attr.rfind("degree=", 0) != 0) throw fail("unknown basis attribute '" + attr + "'");
        degree = std::stol(attr.substr(7));
      }
      p.add_symbol(tag, degree);
    } else if (key == "bracket" || key == "part") {
      deferred.push_back(line);
    } else if (key == "window") {
      long lo, hi;
      if (!(ls >> lo >> hi)) throw fail("window needs two integers");
      window = {lo, hi};
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  for (const auto& dline : deferred) {
    std::istringstream ls(dline);
    std::string key;
    ls >> key;
    if (key == "bracket") {
      std::string t1, t2, eq;
      if (!(ls >> t1 >> t2 >> eq) || eq != "=")
        throw usage_error("bracket line needs '<tag> <tag> ='");
      LieElement value;
      std::string coeff, tag, plus;
      bool first = true;
      while (true) {
        if (!first && !(ls >> plus)) break;
        if (!first && plus != "+") throw usage_error("bracket terms must be joined by '+'");
        if (!(ls >> coeff >> tag)) {
          if (first) break;  // empty right-hand side means zero
          throw usage_error("bracket term needs '<coeff> <tag>'");
        }
        value.add(p.index_of(tag), parse_rational(coeff));
        first = false;
      }
      p.set_bracket(p.index_of(t1), p.index_of(t2), value);
    } else {  // part
      std::string pname, eq, tags;
      if (!(ls >> pname >> eq >> tags) || eq != "=") throw usage_error("part line needs '<name> = tags'");
      std::vector<int> syms;
      std::istringstream ts(tags);
      std::string tag;
      while (std::getline(ts, tag, ',')) syms.push_back(p.index_of(tag));
      p.add_part(pname, syms);
    }
  }
  if (window) p.set_window(window->first, window->second);
  p.finalize();
  return p;
}

inline LiePresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open presentation file '" + path + "'");
  return parse_presentation(in, path);
}

/// Writes the same format back; catalog entries round-trip through this
/// (overflow entries are reconstructed by the window rule on reload, so
/// only genuinely stored in-window brackets are emitted).
inline void write_presentation(std::ostream& out, const LiePresentation& p) {
  for (const auto& b : p.basis()) {
    out << "basis " << b.tag;
    if (b.degree) out << " degree=" << *b.degree;
    out << "\n";
  }
  if (p.window()) out << "window " << p.window()->first << " " << p.window()->second << "\n";
  for (const auto& [key, bv] : p.bracket_table()) {
    if (bv.inside.is_zero()) continue;  // pure-overflow entries are implied by the window
    out << "bracket " << p.symbol(key.first).tag << " " << p.symbol(key.second).tag << " =";
    bool first = true;
    for (const auto& [s, c] : bv.inside.terms) {
      out << (first ? " " : " + ") << format_rational(c) << " " << p.symbol(s).tag;
      first = false;
    }
    out << "\n";
  }
  for (const auto& [name, syms] : p.parts()) {
    out << "part " << name << " =";
    bool first = true;
    for (int s : syms) {
      out << (first ? " " : ",") << p.symbol(s).tag;
      first = false;
    }
    out << "\n";
  }
}

inline std::string presentation_to_string(const LiePresentation& p) {
  std::ostringstream os;
  write_presentation(os, p);
  return os.str();
}

}  // namespace liewhit
