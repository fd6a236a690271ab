#include "stight/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "stight/constructions.hpp"
#include "stight/enumeration.hpp"
#include "stight/errors.hpp"
#include "stight/groups.hpp"
#include "stight/intkernel.hpp"
#include "stight/io.hpp"
#include "stight/report.hpp"
#include "stight/tightness.hpp"

namespace stight::cli {
namespace {

std::size_t to_size(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("expected a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (s.back() == sep) parts.emplace_back();
  return parts;
}

AbelianGroup parse_group(const std::string& text) {
  std::vector<std::size_t> factors;
  for (const auto& f : split(text, 'x')) factors.push_back(to_size(f));
  if (factors.empty()) throw InputError("empty group description");
  if (factors == std::vector<std::size_t>{1}) return AbelianGroup();
  return AbelianGroup(factors);
}

ConnectionSet parse_set(const AbelianGroup& g, const std::string& text) {
  std::vector<AbelianGroup::Element> elems;
  for (const auto& e : split(text, ',')) elems.push_back(g.parse(e));
  return ConnectionSet(g, elems);
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void emit_graph(const Digraph& d, const std::string& format, const std::string& path,
                std::ostream& out) {
  if (format == "edges") {
    emit_text(to_edge_list(d), path, out);
  } else if (format == "dot") {
    emit_text(to_dot(d), path, out);
  } else {
    throw InputError("unknown format '" + format + "'");
  }
}

const std::map<std::string, Orientation (*)()>& fixture_table() {
  static const std::map<std::string, Orientation (*)()> table{
      {"pendant-triangle", fixtures::pendant_triangle},
      {"c3-e2", fixtures::c3_e2},
      {"c3-c3e3e3", fixtures::c3_c3e3e3},
      {"triangle-with-source", fixtures::triangle_with_source},
      {"twin-triangles", fixtures::twin_triangles},
      {"c3-e3e3c3", fixtures::c3_e3e3c3},
      {"c4-mixed", fixtures::c4_mixed},
      {"c62-weighted", fixtures::c62_weighted},
  };
  return table;
}

struct BuildArgs {
  std::vector<std::string> spec;
  std::string format = "edges";
  std::string out;
  std::string outer, inner, in;
  std::vector<std::string> parts;
  std::string contract = "none";
  std::string group, set;
  std::uint64_t seed = 1;
};

void need(const std::vector<std::string>& spec, std::size_t count) {
  if (spec.size() != count + 1)
    throw InputError("'" + spec[0] + "' takes " + std::to_string(count) + " parameter(s)");
}

ProductContract parse_contract(const std::string& c) {
  if (c == "none") return ProductContract::none;
  if (c == "seymour") return ProductContract::seymour;
  if (c == "sullivan") return ProductContract::sullivan;
  throw InputError("unknown contract '" + c + "'");
}

Orientation build_graph(const BuildArgs& a, std::ostream& err) {
  const auto& s = a.spec;
  if (s.empty()) throw InputError("build needs a family");
  const std::string& kind = s[0];
  if (kind == "empty") {
    need(s, 1);
    return build_family(FamilySpec::empty(to_size(s[1])));
  }
  if (kind == "cycle") {
    need(s, 1);
    return build_family(FamilySpec::cycle(to_size(s[1])));
  }
  if (kind == "cycle-power") {
    need(s, 2);
    return build_family(FamilySpec::cycle_power(to_size(s[1]), to_size(s[2])));
  }
  if (kind == "tournament") {
    need(s, 1);
    return build_family(FamilySpec::tournament(to_size(s[1])));
  }
  if (kind == "fixture") {
    need(s, 1);
    const auto it = fixture_table().find(s[1]);
    if (it == fixture_table().end()) throw InputError("unknown fixture '" + s[1] + "'");
    return it->second();
  }
  if (kind == "random") {
    need(s, 1);
    const std::size_t n = to_size(s[1]);
    std::mt19937_64 rng(a.seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const auto pick = rng() % 3;
        if (pick == 1) arcs.push_back({u, v});
        if (pick == 2) arcs.push_back({v, u});
      }
    err << "seed " << a.seed << "\n";
    return Orientation(n, arcs);
  }
  if (kind == "lex") {
    need(s, 0);
    return lex_product(load_orientation(a.outer), load_orientation(a.inner));
  }
  if (kind == "genlex") {
    need(s, 0);
    std::vector<Orientation> parts;
    for (const auto& p : a.parts) parts.push_back(load_orientation(p));
    return gen_lex_product(load_orientation(a.outer), parts, parse_contract(a.contract));
  }
  if (kind == "cayley") {
    need(s, 0);
    const AbelianGroup g = parse_group(a.group);
    return cayley_digraph(parse_set(g, a.set));
  }
  if (kind == "embed") {
    need(s, 0);
    return embed_in_seymour_tight(load_orientation(a.in)).host;
  }
  throw InputError("unknown family '" + kind + "'");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void check_text(const Orientation& d, std::ostream& out) {
  const NeighbourhoodProfile p = profile(d);
  out << "n " << d.order() << "\n";
  out << "vertex out1 out2 in1 in2 seymour_deficiency sullivan_deficiency\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    const auto& r = p.at(v);
    out << v << ' ' << r.out1 << ' ' << r.out2 << ' ' << r.in1 << ' ' << r.in2 << ' '
        << p.seymour_deficiency(v) << ' ' << p.sullivan_deficiency(v) << "\n";
  }
  out << "seymour " << yes(is_seymour_orientation(d)) << "\n";
  out << "seymour_tight " << yes(is_seymour_tight(d)) << "\n";
  out << "sullivan_tight " << yes(is_sullivan_tight(d)) << "\n";
  out << "eulerian " << yes(is_eulerian(d)) << "\n";
  out << "strongly_connected " << yes(is_strongly_connected(d)) << "\n";
}

void print_vector(const IntVector& v, std::ostream& out) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seymour- and Sullivan-tight orientation toolkit", "stight"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* cmd_build = app.add_subcommand("build", "Construct a family member or product");
  cmd_build->add_option("spec", build.spec,
                        "empty M | cycle N | cycle-power N K | tournament M | fixture NAME | "
                        "random N | lex | genlex | cayley | embed")
      ->required();
  cmd_build->add_option("--format", build.format, "edges or dot");
  cmd_build->add_option("--out", build.out, "output file (default stdout)");
  cmd_build->add_option("--outer", build.outer, "outer graph file (lex, genlex)");
  cmd_build->add_option("--inner", build.inner, "inner graph file (lex)");
  cmd_build->add_option("--parts", build.parts, "part files (genlex)")->delimiter(',');
  cmd_build->add_option("--contract", build.contract, "none, seymour or sullivan (genlex)");
  cmd_build->add_option("--group", build.group, "group, e.g. 6 or 2x4 (cayley)");
  cmd_build->add_option("--set", build.set, "connection set, e.g. 1,4 or 0.1,1.3 (cayley)");
  cmd_build->add_option("--in", build.in, "guest graph file (embed)");
  cmd_build->add_option("--seed", build.seed, "seed (random)");

  std::string check_in;
  bool check_json = false;
  auto* cmd_check = app.add_subcommand("check", "Profile and tightness flags of a graph");
  cmd_check->add_option("--in", check_in, "edge-list file")->required();
  cmd_check->add_flag("--json", check_json, "JSON report");

  std::string prod_outer, prod_inner, prod_format = "edges", prod_out;
  auto* cmd_product = app.add_subcommand("product", "Lexicographic product of two graphs");
  cmd_product->add_option("--outer", prod_outer)->required();
  cmd_product->add_option("--inner", prod_inner)->required();
  cmd_product->add_option("--format", prod_format, "edges or dot");
  cmd_product->add_option("--out", prod_out);

  std::string cls_group, cls_set;
  bool cls_json = false, cls_all = false;
  auto* cmd_classify = app.add_subcommand("classify", "Decompose a Cayley Seymour orientation");
  cmd_classify->add_option("--group", cls_group, "e.g. 6 or 2x4")->required();
  auto* set_opt = cmd_classify->add_option("--set", cls_set, "e.g. 1,4 or 0.1,1.3");
  auto* all_opt = cmd_classify->add_flag("--all", cls_all, "every Seymour set up to automorphism");
  set_opt->excludes(all_opt);
  cmd_classify->add_flag("--json", cls_json, "JSON tree");

  std::string ker_in, ker_matrix = "seymour";
  std::int64_t ker_bound = 0;
  auto* cmd_kernel = app.add_subcommand("kernel", "Integer kernel of the sign matrix");
  cmd_kernel->add_option("--in", ker_in)->required();
  cmd_kernel->add_option("--matrix", ker_matrix, "seymour or sullivan");
  auto* nonneg_opt = cmd_kernel->add_option("--nonneg", ker_bound, "list x in [0,BOUND]^n");

  ScanOptions scan;
  std::string pred = "seymour-tight", search_out, experiment;
  bool dedup = false;
  std::size_t max_out = 0, degree = 2;
  auto* cmd_search = app.add_subcommand("search", "Exhaustive orientation search");
  cmd_search->add_option("--n", scan.n, "order (maximum order for experiments)")->required();
  cmd_search->add_option("--pred", pred, "any, seymour, seymour-tight, counterexample, sullivan-tight");
  cmd_search->add_flag("--dedup", dedup, "one match per isomorphism class");
  cmd_search->add_option("--out", search_out, "report file (default stdout)");
  cmd_search->add_option("--jobs", scan.jobs, "worker threads");
  auto* max_out_opt = cmd_search->add_option("--max-out", max_out, "out-degree cap");
  cmd_search->add_flag("--strong", scan.strongly_connected, "strongly connected only");
  cmd_search->add_flag("--eulerian", scan.eulerian, "Eulerian only");
  cmd_search->add_option("--experiment", experiment,
                         "no-counterexample, lowdegree, converse or sullivan");
  cmd_search->add_option("--degree", degree, "census degree for lowdegree (1 or 2)");

  std::string exp_in, exp_format = "dot", exp_out;
  auto* cmd_export = app.add_subcommand("export", "Convert an edge list to DOT or edges");
  cmd_export->add_option("--in", exp_in)->required();
  cmd_export->add_option("--format", exp_format, "dot or edges");
  cmd_export->add_option("--out", exp_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (*cmd_build) {
      emit_graph(build_graph(build, err), build.format, build.out, out);
    } else if (*cmd_check) {
      const Orientation d = load_orientation(check_in);
      if (check_json) {
        out << check_report(d).dump(2) << "\n";
      } else {
        check_text(d, out);
      }
    } else if (*cmd_product) {
      emit_graph(lex_product(load_orientation(prod_outer), load_orientation(prod_inner)),
                 prod_format, prod_out, out);
    } else if (*cmd_classify) {
      const AbelianGroup g = parse_group(cls_group);
      if (cls_all) {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const auto& s : enumerate_seymour_connection_sets(g, true)) {
          const LexDecomposition t = classify_abelian_seymour(s);
          if (cls_json) {
            all.push_back({{"set", s.format()}, {"tree", t.to_json()}});
          } else {
            out << s.format() << " " << t.name() << "\n";
          }
        }
        if (cls_json) out << all.dump(2) << "\n";
      } else {
        const LexDecomposition t = classify_abelian_seymour(parse_set(g, cls_set));
        if (cls_json) {
          out << t.to_json().dump(2) << "\n";
        } else {
          out << t.name() << "\n" << t.text();
        }
      }
    } else if (*cmd_kernel) {
      const Orientation d = load_orientation(ker_in);
      SignMatrix m;
      if (ker_matrix == "seymour") {
        m = seymour_matrix(d);
      } else if (ker_matrix == "sullivan") {
        m = sullivan_matrix(d);
      } else {
        throw InputError("unknown matrix '" + ker_matrix + "'");
      }
      out << "# basis\n";
      for (const auto& v : integer_kernel_basis(m).vectors) print_vector(v, out);
      if (*nonneg_opt) {
        out << "# nonnegative, bound " << ker_bound << "\n";
        for (const auto& v : nonnegative_kernel_vectors(m, ker_bound)) print_vector(v, out);
      }
    } else if (*cmd_search) {
      if (*max_out_opt) scan.max_out_degree = max_out;
      SearchReport r;
      if (experiment.empty()) {
        r = search(scan, parse_predicate(pred), dedup);
      } else if (experiment == "no-counterexample") {
        r = verify_no_counterexample(scan.n, scan.jobs);
      } else if (experiment == "lowdegree") {
        r = verify_lowdegree_classification(scan.n, degree);
      } else if (experiment == "converse") {
        r = converse_conjecture_experiment(scan.n, scan.jobs);
      } else if (experiment == "sullivan") {
        r = sullivan_catalogue(scan.n, scan.jobs);
      } else {
        throw InputError("unknown experiment '" + experiment + "'");
      }
      emit_text(r.to_json().dump(2) + "\n", search_out, out);
    } else if (*cmd_export) {
      emit_graph(load_orientation(exp_in), exp_format, exp_out, out);
    }
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return 2;
  } catch (const TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace stight::cli
