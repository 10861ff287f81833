// liewhit: exact computations with Lie algebras given by structure
// constants. Every subcommand wraps one library operation over a
// presentation file or a named catalog algebra; output is deterministic
// text or a machine-readable JSON tree.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "liewhit/borel.hpp"
#include "liewhit/catalog.hpp"
#include "liewhit/ext.hpp"
#include "liewhit/findim.hpp"
#include "liewhit/ladder.hpp"
#include "liewhit/presentation_io.hpp"
#include "liewhit/structure.hpp"
#include "liewhit/vk.hpp"
#include "liewhit/whittaker.hpp"

using namespace liewhit;
using Json = nlohmann::ordered_json;

namespace {

struct CommonArgs {
  std::string alg;
  std::string window;
  long cap = 0;
  int depth = 16;
  std::string n_spec;
  std::string lambda_spec, lambda2_spec;
  std::string mu_spec, mu2_spec;
  std::string format = "text";
  std::string overflow = "reject";
};

std::pair<long, long> parse_window(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw usage_error("--window expects lo:hi");
  return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
}

LiePresentation load_algebra(const CommonArgs& a) {
  if (a.alg.empty()) throw usage_error("this subcommand needs --alg");
  if (a.alg.find('/') != std::string::npos || a.alg.find(".lie") != std::string::npos ||
      a.alg.find(".txt") != std::string::npos) {
    auto loaded = load_presentation(a.alg);
    auto rep = jacobi_check(loaded);
    if (!rep.pass())
      throw usage_error("presentation file fails the Jacobi identity on " +
                        std::to_string(rep.failures.size()) + " triple(s)");
    return loaded;
  }
  CatalogParams params;
  if (!a.window.empty()) params.window = parse_window(a.window);
  if (a.cap > 0) params.cap = a.cap;
  return catalog(a.alg, params);
}

std::vector<int> parse_part(const LiePresentation& p, const std::string& spec) {
  if (spec.empty()) throw usage_error("this subcommand needs --n");
  if (spec == "all") {
    std::vector<int> out(p.size());
    for (int i = 0; i < p.size(); ++i) out[i] = i;
    return out;
  }
  if (p.parts().count(spec)) return p.part(spec);
  std::vector<int> out;
  for (const auto& tag : split_outside_parens(spec)) out.push_back(p.index_of(tag));
  return out;
}

OverflowPolicy parse_policy(const std::string& s) {
  if (s == "reject") return OverflowPolicy::Reject;
  if (s == "mark") return OverflowPolicy::Mark;
  throw usage_error("--overflow expects reject or mark");
}

void emit(const CommonArgs& a, const std::string& text, const Json& tree) {
  if (a.format == "text")
    std::cout << text << "\n";
  else if (a.format == "tree")
    std::cout << tree.dump(2) << "\n";
  else
    throw usage_error("--format expects text or tree");
}

std::string ext_text(const ExtTable& t) {
  if (t.dims.empty()) return "Ext = 0";
  std::string s;
  for (const auto& [i, d] : t.dims) {
    if (!s.empty()) s += "\n";
    s += "Ext^" + std::to_string(i) + " = " + std::to_string(d);
  }
  return s;
}

Json ext_json(const ExtTable& t) {
  Json j = Json::object();
  for (const auto& [i, d] : t.dims) j[std::to_string(i)] = d;
  return j;
}

FinDimModule load_module(const LiePresentation& p, const std::vector<int>& part,
                         const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open module file '" + path + "'");
  int dim = -1;
  std::map<int, SparseMatrix> act;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "dim") {
      if (!(ls >> dim) || dim < 0) throw usage_error("bad dim line in module file");
      for (int s : part) act.emplace(s, SparseMatrix(dim, dim));
    } else if (key == "act") {
      std::string tag, eq, q;
      int r, c;
      if (dim < 0) throw usage_error("module file must declare dim before act lines");
      if (!(ls >> tag >> r >> c >> eq >> q) || eq != "=")
        throw usage_error("act lines look like: act <tag> <row> <col> = <rational>");
      act.at(p.index_of(tag)).set(r, c, parse_rational(q));
    } else {
      throw usage_error("unknown key '" + key + "' in module file, line " +
                        std::to_string(lineno));
    }
  }
  if (dim < 0) throw usage_error("module file has no dim line");
  return FinDimModule(p, part, std::move(act), dim);
}

std::vector<std::string> split_commas(const std::string& spec) {
  if (spec.empty()) return {};
  return split_outside_parens(spec);
}

int run(int argc, char** argv) {
  CLI::App app{"exact symbolic computations with Lie algebras given by structure constants"};
  app.require_subcommand(1);
  CommonArgs a;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alg", a.alg, "catalog name or presentation file path");
    cmd->add_option("--window", a.window, "degree window lo:hi for infinite families");
    cmd->add_option("--cap", a.cap, "total-degree cap for w_n exponent vectors");
    cmd->add_option("--depth", a.depth, "depth / truncation parameter");
    cmd->add_option("--format", a.format, "text or tree");
    cmd->add_option("--overflow", a.overflow, "reject or mark");
    return cmd;
  };

  std::vector<std::string> exprs;
  std::string module_path, designated, family, ladder_kind = "verma", parts_spec, nu_spec;
  std::string d1_spec, d2_spec, vertices_spec, off_spec;
  std::vector<std::string> table_specs;
  int k_param = 1, degree_param = 1, orientation = 1;
  bool use_adjoint = false;

  auto* c_catalog = app.add_subcommand("catalog", "list analysis subcommands");

  auto* c_print =
      add_common(app.add_subcommand("print-alg", "write the presentation file format"));
  auto* c_jacobi = add_common(app.add_subcommand("jacobi", "verify the Jacobi identity"));
  auto* c_decomp =
      add_common(app.add_subcommand("decomp-check", "verify a direct-sum decomposition"));
  c_decomp->add_option("--parts", parts_spec, "comma-separated part names")->required();

  auto* c_witt = app.add_subcommand("witt-bracket", "bracket of two monomial derivations");
  c_witt->add_option("--d1", d1_spec, "first derivation, e.g. D1(2) or D2(0,1)")->required();
  c_witt->add_option("--d2", d2_spec, "second derivation")->required();
  c_witt->add_option("--format", a.format, "text or tree");

  auto* c_pair = add_common(app.add_subcommand("check-pair", "Whittaker pair verdict"));
  c_pair->add_option("--n", a.n_spec, "subalgebra: part name, tag list, or all");
  auto* c_lcs = add_common(app.add_subcommand("lcs", "lower central series"));
  c_lcs->add_option("--n", a.n_spec, "subalgebra");
  auto* c_norm = add_common(app.add_subcommand("pbw-normalize", "PBW normal form"));
  c_norm->add_option("--n", a.n_spec, "split subalgebra (optional)");
  c_norm->add_option("--expr", exprs, "word expression")->required();

  auto* c_blocks =
      add_common(app.add_subcommand("blocks", "generalized weight block decomposition"));
  c_blocks->add_option("--n", a.n_spec, "acting subalgebra");
  c_blocks->add_option("--module", module_path, "finite-dimensional module file");
  c_blocks->add_flag("--adjoint", use_adjoint, "use the adjoint module g/n");
  auto* c_socle = add_common(app.add_subcommand("socle", "joint eigenvectors per weight"));
  c_socle->add_option("--n", a.n_spec, "acting subalgebra");
  c_socle->add_option("--module", module_path, "finite-dimensional module file");
  c_socle->add_flag("--adjoint", use_adjoint, "use the adjoint module g/n");

  auto* c_sim = add_common(app.add_subcommand("sim-check", "one step of the block relation"));
  c_sim->add_option("--n", a.n_spec, "subalgebra");
  c_sim->add_option("--lambda", a.lambda_spec, "first character tag=q,...");
  c_sim->add_option("--sigma", a.lambda2_spec, "second character tag=q,...");

  auto* c_orbit = add_common(app.add_subcommand("ad-orbit", "adjoint orbit dimension mod U(n)"));
  c_orbit->add_option("--n", a.n_spec, "subalgebra");
  c_orbit->add_option("--expr", exprs, "element of U(g)")->required();

  auto* c_induce = add_common(app.add_subcommand("induce", "truncated induced module"));
  c_induce->add_option("--n", a.n_spec, "subalgebra");
  c_induce->add_option("--module", module_path, "n-module file")->required();

  auto* c_charcheck = add_common(app.add_subcommand("character-check", "validate a character"));
  c_charcheck->add_option("--n", a.n_spec, "subalgebra");
  c_charcheck->add_option("--lambda", a.lambda_spec, "character tag=q,...");

  auto* c_wv = add_common(app.add_subcommand("whittaker-vectors", "Whittaker vectors"));
  c_wv->add_option("--n", a.n_spec, "subalgebra");
  c_wv->add_option("--lambda", a.lambda_spec, "character tag=q,...");

  auto* c_dual =
      add_common(app.add_subcommand("dual-whittaker", "Whittaker functionals on U(n)*"));
  c_dual->add_option("--n", a.n_spec, "subalgebra");
  c_dual->add_option("--lambda", a.lambda_spec, "character tag=q,...");

  auto* c_verma = add_common(app.add_subcommand("verma-dims", "Verma weight multiplicities"));
  c_verma->add_option("--mu", a.mu_spec, "weight tag=q,...");
  auto* c_simple = add_common(app.add_subcommand("simple-dims", "simple quotient dimensions"));
  c_simple->add_option("--mu", a.mu_spec, "weight tag=q,...");
  c_simple->add_option("--orientation", orientation, "+1 highest, -1 lowest");
  auto* c_star = add_common(app.add_subcommand("star-check", "highest/lowest duality of dims"));
  c_star->add_option("--mu", a.mu_spec, "weight tag=q,...");

  auto* c_solve =
      add_common(app.add_subcommand("completion-solve", "Whittaker solve in the completion"));
  c_solve->add_option("--mu", a.mu_spec, "weight tag=q,...");
  c_solve->add_option("--lambda", a.lambda_spec, "Whittaker character tag=q,...");
  c_solve->add_option("--ladder", ladder_kind, "verma or simple");

  auto* c_simpl = add_common(app.add_subcommand("simplicity", "simplicity certificate"));
  c_simpl->add_option("--n", a.n_spec, "subalgebra");
  c_simpl->add_option("--lambda", a.lambda_spec, "character tag=q,...");
  c_simpl->add_option("--designated", designated, "generator used for degree reduction");

  auto* c_borel = add_common(app.add_subcommand("borel-simple", "simple module over a Borel"));
  c_borel->add_option("--lambda", a.lambda_spec, "character on simple root vectors");
  c_borel->add_option("--mu", a.mu_spec, "weight on the vanishing Cartan directions");

  auto* c_ext = add_common(app.add_subcommand("ext", "extension tables for solvable2d"));
  c_ext->add_option("--family", family, "nonzero or zero")->required();
  c_ext->add_option("--lambda", a.lambda_spec, "character value (nonzero family)");
  c_ext->add_option("--mu", a.mu_spec, "mu (zero family)");
  c_ext->add_option("--nu", nu_spec, "nu (zero family)");

  auto* c_ce = add_common(app.add_subcommand("ce-ext", "first extensions over a Borel"));
  c_ce->add_option("--lambda", a.lambda_spec, "source character");
  c_ce->add_option("--mu", a.mu_spec, "source weight");
  c_ce->add_option("--lambda2", a.lambda2_spec, "target character");
  c_ce->add_option("--mu2", a.mu2_spec, "target weight");

  auto* c_kun = app.add_subcommand("kunneth", "Kuenneth dimension from factor tables");
  c_kun->add_option("--table", table_specs, "factor table as i:d,i:d,...")->required();
  c_kun->add_option("--degree", degree_param, "cohomological degree")->required();
  c_kun->add_option("--format", a.format, "text or tree");

  auto* c_vk = app.add_subcommand("vk", "the projective quotient V_k(mu)");
  c_vk->add_option("--k", k_param, "power")->required();
  c_vk->add_option("--mu", a.mu_spec, "rational mu")->required();
  c_vk->add_option("--format", a.format, "text or tree");

  auto* c_quiver = app.add_subcommand("quiver", "assemble the Ext quiver on a coset window");
  c_quiver->add_option("--vertices", vertices_spec, "comma-separated rationals")->required();
  c_quiver->add_option("--off", off_spec, "off-coset samples, comma-separated");
  c_quiver->add_option("--format", a.format, "text or tree");

  auto* c_ann = add_common(app.add_subcommand("annihilator-check", "annihilator spot check"));
  c_ann->add_option("--mu", a.mu_spec, "weight tag=q,...");
  c_ann->add_option("--lambda", a.lambda_spec, "Whittaker character tag=q,...");
  c_ann->add_option("--expr", exprs, "elements of U(g), repeatable")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  if (c_catalog->parsed()) {
    static const char* names[] = {"check-pair",
                                  "lcs",
                                  "pbw-normalize",
                                  "blocks",
                                  "socle",
                                  "sim-check",
                                  "ad-orbit",
                                  "induce",
                                  "character-check",
                                  "whittaker-vectors",
                                  "dual-whittaker",
                                  "verma-dims",
                                  "simple-dims",
                                  "star-check",
                                  "completion-solve",
                                  "simplicity",
                                  "borel-simple",
                                  "ext",
                                  "ce-ext",
                                  "kunneth",
                                  "vk",
                                  "quiver",
                                  "annihilator-check",
                                  "jacobi",
                                  "decomp-check",
                                  "witt-bracket",
                                  "print-alg"};
    for (const char* n : names) std::cout << n << "\n";
    return 0;
  }

  if (c_witt->parsed()) {
    auto parse_derivation = [](const std::string& s) {
      auto open = s.find('(');
      if (s.empty() || s[0] != 'D' || open == std::string::npos || s.back() != ')')
        throw usage_error("derivations look like D<i>(m1,...,mn)");
      Derivation d;
      d.var = std::stoi(s.substr(1, open - 1));
      for (const auto& part : split_commas(s.substr(open + 1, s.size() - open - 2)))
        d.exponents.push_back(std::stol(part));
      return d;
    };
    Derivation d1 = parse_derivation(d1_spec), d2 = parse_derivation(d2_spec);
    auto terms = witt_bracket(d1, d2);
    std::string text;
    Json jterms = Json::array();
    for (const auto& [c, d] : terms) {
      if (!text.empty()) text += " + ";
      text += format_rational(c) + " " + d.tag();
      jterms.push_back({{"coeff", format_rational(c)}, {"derivation", d.tag()}});
    }
    if (terms.empty()) text = "0";
    emit(a, text, Json{{"bracket", jterms}});
    return 0;
  }

  if (c_kun->parsed()) {
    std::vector<ExtTable> tables;
    for (const auto& spec : table_specs) {
      ExtTable t;
      for (const auto& item : split_commas(spec)) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw usage_error("tables look like 0:1,1:1");
        t.set(std::stoi(item.substr(0, colon)), std::stol(item.substr(colon + 1)));
      }
      tables.push_back(std::move(t));
    }
    long dim = kunneth_ext(tables, degree_param);
    emit(a, "kunneth^" + std::to_string(degree_param) + " = " + std::to_string(dim),
         Json{{"degree", degree_param}, {"dim", dim}});
    return 0;
  }

  if (c_vk->parsed()) {
    auto r = vk_module(k_param, parse_rational(a.mu_spec));
    emit(a, "dim=" + std::to_string(r.dim) + " end=" + std::to_string(r.end_dim),
         Json{{"dim", r.dim}, {"end", r.end_dim}});
    return 0;
  }

  if (c_quiver->parsed()) {
    std::vector<Rational> vertices, off;
    for (const auto& s : split_commas(vertices_spec)) vertices.push_back(parse_rational(s));
    for (const auto& s : split_commas(off_spec)) off.push_back(parse_rational(s));
    auto q = ext_quiver_assemble(vertices, off);
    std::string text;
    Json jarrows = Json::array();
    for (const auto& ar : q.arrows) {
      if (!text.empty()) text += "\n";
      text += ar.name + ": " + format_rational(q.vertices[ar.from]) + " -> " +
              format_rational(q.vertices[ar.to]);
      jarrows.push_back({{"name", ar.name},
                         {"from", format_rational(q.vertices[ar.from])},
                         {"to", format_rational(q.vertices[ar.to])}});
    }
    for (const auto& rel : q.relations) text += "\nrelation " + rel;
    text += std::string("\ncross-coset arrows: ") + (q.cross_coset_clean ? "none" : "FOUND");
    Json j{{"vertices", Json::array()},
           {"arrows", jarrows},
           {"relations", q.relations},
           {"cross_coset_clean", q.cross_coset_clean}};
    for (const auto& v : q.vertices) j["vertices"].push_back(format_rational(v));
    emit(a, text, j);
    return 0;
  }

  if (c_ext->parsed()) {
    ExtTable t;
    int truncation = c_ext->count("--depth") ? a.depth : 8;
    if (family == "nonzero")
      t = ext_solvable2d_nonzero(parse_rational(a.lambda_spec), truncation);
    else if (family == "zero")
      t = ext_solvable2d_zero(parse_rational(a.mu_spec), parse_rational(nu_spec));
    else
      throw usage_error("--family expects nonzero or zero");
    emit(a, ext_text(t), ext_json(t));
    return 0;
  }

  // everything below operates on an algebra
  LiePresentation p = load_algebra(a);
  OverflowPolicy policy = parse_policy(a.overflow);

  if (c_print->parsed()) {
    std::cout << presentation_to_string(p);
    return 0;
  }

  if (c_jacobi->parsed()) {
    auto rep = jacobi_check(p);
    std::string text = std::string("jacobi: ") + (rep.pass() ? "pass" : "FAIL") + " (" +
                       std::to_string(rep.checked) + " triples, " +
                       std::to_string(rep.overflowed.size()) + " overflowed)";
    for (const auto& [t, res] : rep.failures)
      text += "\nfailure at (" + p.symbol(t.x).tag + ", " + p.symbol(t.y).tag + ", " +
              p.symbol(t.z).tag + ")";
    emit(a, text,
         Json{{"pass", rep.pass()},
              {"checked", rep.checked},
              {"overflowed", rep.overflowed.size()},
              {"failures", rep.failures.size()}});
    return 0;
  }

  if (c_decomp->parsed()) {
    auto rep = decomposition_check(p, split_commas(parts_spec));
    emit(a, std::string("decomposition: ") + (rep.pass() ? "pass" : "FAIL"),
         Json{{"pass", rep.pass()},
              {"covers_basis", rep.covers_basis},
              {"disjoint", rep.disjoint},
              {"not_closed", rep.not_closed},
              {"overflowed_pairs", rep.overflowed_pairs}});
    return 0;
  }

  if (c_norm->parsed()) {
    std::vector<int> part = a.n_spec.empty() ? std::vector<int>{} : parse_part(p, a.n_spec);
    PBWContext ctx(p, part, policy);
    auto r = parse_word_expression(ctx, exprs.at(0));
    std::string text = format_uea(ctx, r.value);
    if (r.overflowed) text += "  [window overflow marked]";
    emit(a, text, Json{{"normal_form", format_uea(ctx, r.value)}, {"overflowed", r.overflowed}});
    return 0;
  }

  if (c_pair->parsed()) {
    auto v = whittaker_pair_check(p, parse_part(p, a.n_spec), a.depth);
    std::string verdict = v.kind == PairVerdict::Kind::Pair
                              ? (v.window_bounded ? "yes (within window)" : "yes")
                          : v.kind == PairVerdict::Kind::NotPair ? "no"
                                                                 : "inconclusive";
    emit(a, "Whittaker pair: " + verdict,
         Json{{"pair", verdict},
              {"quasi_nilpotent", v.quasi_nilpotent.to_string()},
              {"failing_generators", v.failing_generators}});
    return 0;
  }

  if (c_lcs->parsed()) {
    auto part = parse_part(p, a.n_spec);
    auto cs = lower_central_series(p, part, a.depth);
    auto qn = quasi_nilpotent_check(p, part, a.depth);
    std::string text;
    Json jchain = Json::array();
    for (std::size_t i = 0; i < cs.chain.size(); ++i) {
      if (!text.empty()) text += "\n";
      std::string members;
      for (const auto& vec : cs.chain[i].basis()) {
        std::string term;
        for (int s = 0; s < p.size(); ++s)
          if (vec[s] != 0) {
            if (!term.empty()) term += "+";
            if (vec[s] != 1) term += format_rational(vec[s]) + " ";
            term += p.symbol(s).tag;
          }
        members += (members.empty() ? "" : ", ") + term;
      }
      bool over = i > 0 && cs.step_overflowed[i - 1];
      text += "n_" + std::to_string(i) + ": dim " + std::to_string(cs.chain[i].dim()) +
              (over ? " (overflow)" : "") + (members.empty() ? "" : "  {" + members + "}");
      jchain.push_back({{"dim", cs.chain[i].dim()}, {"overflow", over}});
    }
    text += "\nquasi-nilpotent: " + qn.to_string();
    emit(a, text, Json{{"chain", jchain}, {"quasi_nilpotent", qn.to_string()}});
    return 0;
  }

  if (c_blocks->parsed() || c_socle->parsed()) {
    auto part = parse_part(p, a.n_spec);
    std::optional<FinDimModule> m;
    if (use_adjoint)
      m.emplace(quotient_module(p, part));
    else if (!module_path.empty())
      m.emplace(load_module(p, part, module_path));
    else
      throw usage_error("needs --module <file> or --adjoint");
    auto blocks = c_blocks->parsed() ? generalized_weight_decomposition(*m) : socle_vectors(*m);
    std::string text;
    Json jblocks = Json::array();
    for (const auto& b : blocks) {
      if (!text.empty()) text += "\n";
      std::string w;
      for (const auto& [s, v] : b.weight) {
        if (!w.empty()) w += ",";
        w += p.symbol(s).tag + "=" + format_rational(v);
      }
      text += "weight {" + w + "}: dim " + std::to_string(b.basis.size());
      Json jw = Json::object();
      for (const auto& [s, v] : b.weight) jw[p.symbol(s).tag] = format_rational(v);
      jblocks.push_back({{"weight", jw}, {"dim", b.basis.size()}});
    }
    emit(a, text.empty() ? "zero module" : text, Json{{"blocks", jblocks}});
    return 0;
  }

  if (c_sim->parsed()) {
    auto part = parse_part(p, a.n_spec);
    auto res = sim_relation_check(p, part, parse_character(p, a.lambda_spec),
                                  parse_character(p, a.lambda2_spec), a.depth);
    emit(a, std::string("related: ") + (res.related ? "yes" : "no"),
         Json{{"related", res.related}, {"by_equality", res.by_equality}});
    return 0;
  }

  if (c_orbit->parsed()) {
    auto part = parse_part(p, a.n_spec);
    PBWContext ctx(p, part, policy);
    auto u = parse_word_expression(ctx, exprs.at(0));
    auto rep = adjoint_orbit_mod_un(ctx, part, u.value, a.depth);
    emit(a,
         "orbit dim " + std::to_string(rep.dim) +
             (rep.saturated ? " (saturated)" : " (budget exhausted)") +
             (rep.overflowed ? " [window overflow]" : ""),
         Json{{"dim", rep.dim}, {"saturated", rep.saturated}, {"overflowed", rep.overflowed}});
    return 0;
  }

  if (c_induce->parsed()) {
    auto part = parse_part(p, a.n_spec);
    PBWContext ctx(p, part, policy);
    FinDimModule n_mod = load_module(p, part, module_path);
    InducedTruncation ind(ctx, part, n_mod, a.depth);
    auto orbits = ind.orbit_samples(a.depth + 4);
    bool locally_finite = true;
    int max_orbit = 0;
    for (const auto& o : orbits) {
      locally_finite = locally_finite && o.saturated;
      max_orbit = std::max(max_orbit, o.dim);
    }
    emit(a,
         "induced dim " + std::to_string(ind.dim()) + ", max orbit " + std::to_string(max_orbit) +
             (locally_finite ? ", locally finite on the window" : ", budget exhausted"),
         Json{{"dim", ind.dim()}, {"max_orbit", max_orbit}, {"locally_finite", locally_finite}});
    return 0;
  }

  if (c_charcheck->parsed()) {
    auto part = parse_part(p, a.n_spec);
    auto val = character_validate(p, part, parse_character(p, a.lambda_spec));
    emit(a,
         std::string("character: ") + (val.ok ? "valid" : "REJECTED (" + val.violation + ")") +
             (val.unchecked_pairs ? " [" + std::to_string(val.unchecked_pairs) +
                                        " pairs hidden by the window]"
                                  : ""),
         Json{{"valid", val.ok},
              {"violation", val.violation},
              {"unchecked_pairs", val.unchecked_pairs}});
    return 0;
  }

  if (c_wv->parsed()) {
    auto part = parse_part(p, a.n_spec);
    StandardModule m(p, part, parse_character(p, a.lambda_spec));
    auto res = whittaker_vectors(m, a.depth);
    std::string rep;
    for (const auto& [mono, c] : res.representative) {
      if (!rep.empty()) rep += " + ";
      rep += format_rational(c) + " " + format_monomial(m.ctx(), mono);
    }
    emit(a,
         "whittaker dim " + std::to_string(res.dim) +
             (rep.empty() ? "" : "\nrepresentative: " + rep),
         Json{{"dim", res.dim}, {"representative", rep}});
    return 0;
  }

  if (c_dual->parsed()) {
    auto part = parse_part(p, a.n_spec);
    auto res = whittaker_vectors_in_dual(p, part, parse_character(p, a.lambda_spec), a.depth);
    std::string text = "dims by depth:";
    for (int d : res.dims_by_depth) text += " " + std::to_string(d);
    text += "\nskipped equations (window): " + std::to_string(res.skipped_equations);
    emit(a, text,
         Json{{"dims", res.dims_by_depth}, {"skipped_equations", res.skipped_equations}});
    return 0;
  }

  if (c_verma->parsed()) {
    auto dims = verma_weight_dims(p, parse_character(p, a.mu_spec), a.depth);
    std::string text = "verma dims:";
    for (long d : dims) text += " " + std::to_string(d);
    emit(a, text, Json{{"dims", dims}});
    return 0;
  }

  if (c_simple->parsed()) {
    auto dims = simple_hw_quotient_dims(p, parse_character(p, a.mu_spec), a.depth, orientation);
    std::string text = "simple quotient dims:";
    for (long d : dims) text += " " + std::to_string(d);
    emit(a, text, Json{{"dims", dims}});
    return 0;
  }

  if (c_star->parsed()) {
    auto rep = star_duality_check(p, parse_character(p, a.mu_spec), a.depth);
    std::string text = "highest:";
    for (long d : rep.highest) text += " " + std::to_string(d);
    text += "\nlowest: ";
    for (long d : rep.lowest) text += " " + std::to_string(d);
    text += std::string("\nequal: ") + (rep.equal ? "yes" : "NO");
    emit(a, text, Json{{"highest", rep.highest}, {"lowest", rep.lowest}, {"equal", rep.equal}});
    return 0;
  }

  if (c_solve->parsed()) {
    auto mode =
        ladder_kind == "simple" ? WeightLadder::Mode::SimpleQuotient : WeightLadder::Mode::Verma;
    WeightLadder lad = make_ladder(p, 1, parse_character(p, a.mu_spec), a.depth, mode);
    auto res = completion_whittaker_solve(lad, parse_character(p, a.lambda_spec), a.depth);
    std::string text = "solution dims by truncation:";
    for (int d : res.dims_by_truncation) text += " " + std::to_string(d);
    text += std::string("\nnested: ") + (res.nested ? "yes" : "NO");
    if (!res.nonsimple_layers.empty()) {
      text += "\nnonsimple layers (pairing radical):";
      for (int k : res.nonsimple_layers) text += " " + std::to_string(k);
    }
    text += "\n(truncation-bounded verdict)";
    Json jrep = Json::array();
    for (const auto& layer : res.representative) {
      Json jl = Json::array();
      for (const auto& c : layer) jl.push_back(format_rational(c));
      jrep.push_back(jl);
    }
    emit(a, text,
         Json{{"dims", res.dims_by_truncation},
              {"nested", res.nested},
              {"nonsimple_layers", res.nonsimple_layers},
              {"representative", jrep}});
    return 0;
  }

  if (c_simpl->parsed()) {
    auto part = parse_part(p, a.n_spec);
    StandardModule m(p, part, parse_character(p, a.lambda_spec));
    int des = designated.empty() ? part.front() : p.index_of(designated);
    auto cert = simplicity_certificate(m, des, a.depth);
    emit(a,
         std::string("simplicity certificate: ") + (cert.pass() ? "pass" : "FAIL") +
             " (whittaker dim " + std::to_string(cert.whittaker_dim) +
             (cert.witness.empty() ? "" : ", witness " + cert.witness) + ")",
         Json{{"pass", cert.pass()},
              {"unique_whittaker", cert.unique_whittaker},
              {"degree_reduction", cert.degree_reduction},
              {"whittaker_dim", cert.whittaker_dim},
              {"witness", cert.witness}});
    return 0;
  }

  if (c_borel->parsed()) {
    auto lambda = parse_character(p, a.lambda_spec);
    BorelSimpleModule m(p, lambda, parse_character(p, a.mu_spec));
    bool fact = m.factorization_check(a.depth);
    auto wv = whittaker_vectors_on(m, m.npart(), lambda, a.depth);
    std::string dims;
    for (int k = 0; k <= a.depth; ++k) dims += (k ? " " : "") + std::to_string(m.layer_dim(k));
    emit(a,
         "free variables " + std::to_string(m.free_cartan().size()) +
             "\nper-depth dims: " + dims + "\nfactorization: " + (fact ? "pass" : "FAIL") +
             "\nwhittaker dim " + std::to_string(wv.dim),
         Json{{"free_variables", m.free_cartan().size()},
              {"factorization", fact},
              {"whittaker_dim", wv.dim}});
    return 0;
  }

  if (c_ce->parsed()) {
    auto r = ce_ext1_borel(p, parse_character(p, a.lambda_spec), parse_character(p, a.mu_spec),
                           parse_character(p, a.lambda2_spec), parse_character(p, a.mu2_spec),
                           a.depth);
    emit(a,
         "ext1 = " + std::to_string(r.total) + " (Y " + std::to_string(r.y_part) + ", X " +
             std::to_string(r.x_part) + ")" + (r.saturated ? "" : "  [NOT saturated]"),
         Json{{"ext1", r.total},
              {"y_part", r.y_part},
              {"x_part", r.x_part},
              {"saturated", r.saturated}});
    return 0;
  }

  if (c_ann->parsed()) {
    WeightLadder lad =
        make_ladder(p, 1, parse_character(p, a.mu_spec), a.depth, WeightLadder::Mode::Verma);
    std::vector<UEA> elements;
    for (const auto& e : exprs) elements.push_back(parse_word_expression(lad.ctx(), e).value);
    auto rep = annihilator_spot_check(lad, elements, parse_character(p, a.lambda_spec), a.depth);
    std::string text;
    Json jitems = Json::array();
    for (std::size_t i = 0; i < rep.items.size(); ++i) {
      const auto& it = rep.items[i];
      if (!text.empty()) text += "\n";
      text += "element " + std::to_string(i) + ": verma " +
              (it.annihilates_verma_window ? "annihilated" : "NOT annihilated") + ", whittaker " +
              (it.annihilates_whittaker_window ? "annihilated" : "NOT annihilated") +
              (it.window_limited ? " [window-limited]" : "");
      jitems.push_back({{"verma", it.annihilates_verma_window},
                        {"whittaker", it.annihilates_whittaker_window},
                        {"window_limited", it.window_limited}});
    }
    text += "\nnote: " + rep.disclaimer;
    emit(a, text, Json{{"items", jitems}, {"note", rep.disclaimer}});
    return 0;
  }

  throw usage_error("unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const truncation_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
