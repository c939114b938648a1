#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdom/assignment.hpp"
#include "rdom/catalog.hpp"
#include "rdom/cnf.hpp"
#include "rdom/constructions.hpp"
#include "rdom/domination.hpp"
#include "rdom/error.hpp"
#include "rdom/graph.hpp"
#include "rdom/hereditary.hpp"
#include "rdom/reduction.hpp"
#include "rdom/structure.hpp"
#include "rdom/transfer.hpp"

namespace rdom::cli {
namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

Graph load_graph(const std::string& path) {
  try {
    return parse_edge_list(read_file(path));
  } catch (const ParseError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

CnfFormula load_cnf(const std::string& path) {
  try {
    return parse_dimacs(read_file(path));
  } catch (const ParseError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

ordered_json graph_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", edges}};
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << '\n'; }

struct Inconsistent {
  std::string what;
};

// -- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::string param = "both";
  bool witness = false;
  bool all_min = false;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  ordered_json j;
  const bool r2 = a.param != "roman";
  const bool roman = a.param != "r2";
  std::optional<RainbowResult> rr;
  std::optional<RomanResult> gr;
  if (r2) {
    rr = gamma_r2(g);
    j["gamma_r2"] = rr->value;
  }
  if (roman) {
    gr = gamma_roman(g);
    j["gamma_R"] = gr->value;
  }
  if (a.witness) {
    if (rr) j["witness_r2"] = format_assignment(rr->witness);
    if (gr) j["witness_R"] = format_assignment(gr->witness);
  }
  if (a.all_min) {
    ordered_json list = ordered_json::array();
    for (const auto& f : all_min_2rdf(g)) list.push_back(format_assignment(f));
    j["min_2rdf_count"] = list.size();
    j["min_2rdf"] = std::move(list);
  }
  if (rr && gr && (rr->value > gr->value || 2 * gr->value > 3 * rr->value)) {
    emit(out, j);
    throw Inconsistent{"sandwich bound violated"};
  }
  emit(out, j);
  return kExitOk;
}

// -- convert ----------------------------------------------------------------

struct ConvertArgs {
  std::string graph;
  std::string assignment;
  std::string direction;
};

int do_convert(const ConvertArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  ordered_json j;
  j["direction"] = a.direction;
  if (a.direction == "roman-to-r2") {
    const auto r = parse_roman_assignment(a.assignment);
    if (r.size() != g.order()) throw DomainError("assignment not sized to graph");
    const auto f = roman_to_rainbow(g, r);
    j["input"] = format_assignment(r);
    j["input_weight"] = r.weight();
    j["output"] = format_assignment(f);
    j["output_weight"] = f.weight();
    j["valid"] = is_2rainbow_dominating(g, f);
    if (!j["valid"].get<bool>() || f.weight() != r.weight()) {
      emit(out, j);
      throw Inconsistent{"conversion broke its weight or validity contract"};
    }
  } else {
    const auto f = parse_rainbow_assignment(a.assignment);
    if (f.size() != g.order()) throw DomainError("assignment not sized to graph");
    const auto r = rainbow_to_roman(g, f);
    j["input"] = format_assignment(f);
    j["input_weight"] = f.weight();
    j["output"] = format_assignment(r);
    j["output_weight"] = r.weight();
    j["valid"] = is_roman_dominating(g, r);
    if (!j["valid"].get<bool>() || 2 * r.weight() > 3 * f.weight()) {
      emit(out, j);
      throw Inconsistent{"conversion broke its weight or validity contract"};
    }
  }
  emit(out, j);
  return kExitOk;
}

// -- reduce -----------------------------------------------------------------

struct ReduceArgs {
  std::string cnf;
  std::string out_path;
  bool check = false;
};

int do_reduce(const ReduceArgs& a, std::ostream& out) {
  const CnfFormula f = load_cnf(a.cnf);
  const ReductionGraph r = build_reduction(f);
  if (!a.out_path.empty()) write_file(a.out_path, to_edge_list(r.graph));
  ordered_json j;
  if (!a.check) {
    j["n"] = f.num_vars;
    j["m"] = f.num_clauses();
    j["order"] = r.graph.order();
    j["edges"] = r.graph.edge_count();
    ordered_json names = ordered_json::array();
    for (const auto& role : r.roles) names.push_back(role.name());
    j["vertices"] = std::move(names);
    emit(out, j);
    return kExitOk;
  }
  const ReductionReport rep = verify_reduction(f);
  j["gamma_r2"] = rep.gamma_r2;
  j["gamma_R"] = rep.gamma_roman;
  j["satisfiable"] = rep.satisfiable;
  j["consistent"] = rep.consistent;
  emit(out, j);
  if (!rep.consistent) throw Inconsistent{"reduction identities failed"};
  return kExitOk;
}

// -- recognize --------------------------------------------------------------

struct RecognizeArgs {
  std::string graph;
  std::vector<std::string> family;
  bool hereditary_direct = false;
  std::optional<int> gk;
};

Family load_family(const std::vector<std::string>& specs) {
  if (specs.size() == 1 && (specs[0] == "theorem2" || specs[0] == "theorem3")) {
    return preset_family(specs[0]);
  }
  Family family;
  for (const auto& path : specs) {
    family.push_back({std::filesystem::path(path).stem().string(), load_graph(path)});
  }
  return family;
}

int do_recognize(const RecognizeArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const Family family = load_family(a.family);
  const auto witness = first_induced_member(g, family);
  ordered_json j;
  j["free"] = !witness.has_value();
  j["witness"] = witness ? ordered_json(*witness) : ordered_json(nullptr);

  const bool preset2 = a.family.size() == 1 && a.family[0] == "theorem2";
  const bool preset3 = a.family.size() == 1 && a.family[0] == "theorem3";
  std::string broken;
  if (a.hereditary_direct) {
    const bool eq = hereditary_equality_direct(g);
    j["hereditary_equal"] = eq;
    if (preset2 && eq != !witness) broken = "hereditary equality disagrees with the family test";
  }
  if (a.gk) {
    if (*a.gk < 1) throw DomainError("--gk must be positive");
    const bool in = in_Gk_direct(g, *a.gk);
    j["in_gk"] = in;
    if (preset3 && *a.gk == 3 && in != !witness) broken = "G_3 membership disagrees with the family test";
  }
  emit(out, j);
  if (!broken.empty()) throw Inconsistent{broken};
  return kExitOk;
}

// -- structure --------------------------------------------------------------

int do_structure(const std::string& path, std::ostream& out) {
  const Graph g = load_graph(path);
  const std::string text = structure_json(g);
  out << text << '\n';
  const auto j = ordered_json::parse(text);
  if (j["functions"].is_array()) {
    for (const auto& f : j["functions"]) {
      const auto& props = f["properties"];
      for (auto it = props.begin(); it != props.end(); ++it) {
        if (!it->get<bool>()) {
          throw Inconsistent{"an extremal graph failed property (" + it.key() + ")"};
        }
      }
    }
  }
  return kExitOk;
}

// -- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string op;
  std::optional<int> k;
  std::string graph;
  std::string out_path;
};

int do_construct(const ConstructArgs& a, std::ostream& out) {
  Graph input;
  Graph result;
  int expect_r2 = 0;
  int expect_roman = 0;
  ordered_json j;
  j["op"] = a.op;
  if (a.op == "gap-k") {
    if (!a.k) throw DomainError("gap-k needs --k");
    result = gap_instance(*a.k);
    j["k"] = *a.k;
  } else {
    if (a.graph.empty()) throw DomainError(a.op + " needs an input graph");
    input = load_graph(a.graph);
    const int r2 = gamma_r2(input).value;
    const int roman = gamma_roman(input).value;
    j["input"] = {{"gamma_r2", r2}, {"gamma_R", roman}};
    if (a.op == "add-c4") {
      result = add_c4(input);
      expect_r2 = r2 + 2;
      expect_roman = roman + 3;
    } else {
      result = star_link(input);
      expect_r2 = r2 + 2;
      expect_roman = roman + 2;
    }
  }
  const int r2 = gamma_r2(result).value;
  const int roman = gamma_roman(result).value;
  bool verified = true;
  if (a.op == "gap-k") {
    verified = roman - r2 == *a.k && is_connected(result) && is_k4_free(result);
  } else {
    verified = r2 == expect_r2 && roman == expect_roman;
    if (a.op == "star-link") verified = verified && is_connected(result);
  }
  j["graph"] = graph_json(result);
  j["edge_list"] = to_edge_list(result);
  j["gamma_r2"] = r2;
  j["gamma_R"] = roman;
  j["gap"] = roman - r2;
  j["connected"] = is_connected(result);
  j["k4_free"] = is_k4_free(result);
  j["verified"] = verified;
  if (!a.out_path.empty()) write_file(a.out_path, to_edge_list(result));
  emit(out, j);
  if (!verified) throw Inconsistent{"construction identities failed"};
  return kExitOk;
}

// -- scan -------------------------------------------------------------------

struct ScanArgs {
  int max_order = 0;
  std::string sample;
  std::string format = "jsonl";
  int jobs = 1;
  std::string out_path;
};

SampleSpec parse_sample(const std::string& text) {
  SampleSpec s;
  std::istringstream in(text);
  std::string a, b, c, extra;
  if (!std::getline(in, a, ',') || !std::getline(in, b, ',') || !std::getline(in, c, ',') ||
      std::getline(in, extra, ',')) {
    throw DomainError("--sample expects ORDER,COUNT,SEED");
  }
  std::size_t pa = 0, pb = 0, pc = 0;
  try {
    s.order = std::stoi(a, &pa);
    s.count = std::stoi(b, &pb);
    s.seed = std::stoull(c, &pc);
  } catch (const std::logic_error&) {
    throw DomainError("--sample expects ORDER,COUNT,SEED");
  }
  if (pa != a.size() || pb != b.size() || pc != c.size() || c.front() == '-') {
    throw DomainError("--sample expects ORDER,COUNT,SEED");
  }
  return s;
}

int do_scan(const ScanArgs& a, std::ostream& out) {
  ScanOptions opts;
  opts.max_order = a.max_order;
  opts.jobs = std::max(1, a.jobs);
  if (!a.sample.empty()) opts.sample = parse_sample(a.sample);
  const GapReport report = scan(opts);
  const std::string text = a.format == "csv" ? to_csv(report) : to_jsonl(report);
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
  }
  if (!report.aggregate.clean()) throw Inconsistent{"scan found violated identities"};
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-rainbow and Roman domination toolkit", "rdom"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "exact gamma_r2 and gamma_R");
  s->add_option("graph", solve.graph, "edge-list file")->required();
  s->add_option("--param", solve.param)->check(CLI::IsMember({"r2", "roman", "both"}));
  s->add_flag("--witness", solve.witness, "include optimal assignments");
  s->add_flag("--all-min", solve.all_min, "list every minimum 2-rainbow function");

  ConvertArgs convert;
  auto* c = app.add_subcommand("convert", "Roman <-> 2-rainbow conversion");
  c->add_option("graph", convert.graph, "edge-list file")->required();
  c->add_option("assignment", convert.assignment, "comma-separated labels")->required();
  c->add_option("--direction", convert.direction)
      ->required()
      ->check(CLI::IsMember({"roman-to-r2", "r2-to-roman"}));

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "build the 3SAT gadget");
  r->add_option("cnf", reduce.cnf, "DIMACS file")->required();
  r->add_option("--out", reduce.out_path, "write the gadget as an edge list");
  r->add_flag("--check", reduce.check, "solve and verify the gadget identities");

  RecognizeArgs recognize;
  auto* g = app.add_subcommand("recognize", "forbidden induced subgraph test");
  g->add_option("graph", recognize.graph, "edge-list file")->required();
  g->add_option("--family", recognize.family, "theorem2, theorem3 or edge-list files")
      ->required()
      ->expected(1, -1);
  g->add_flag("--hereditary-direct", recognize.hereditary_direct);
  g->add_option("--gk", recognize.gk);

  std::string structure_graph;
  auto* st = app.add_subcommand("structure", "extremality and the five-property audit");
  st->add_option("graph", structure_graph, "edge-list file")->required();

  ConstructArgs construct;
  auto* k = app.add_subcommand("construct", "gap-shifting constructions");
  k->add_option("--op", construct.op)
      ->required()
      ->check(CLI::IsMember({"add-c4", "star-link", "gap-k"}));
  k->add_option("--k", construct.k);
  k->add_option("graph", construct.graph, "edge-list file");
  k->add_option("--out", construct.out_path, "write the result as an edge list");

  ScanArgs scan_args;
  auto* sc = app.add_subcommand("scan", "small-graph catalog scan");
  sc->add_option("--max-order", scan_args.max_order)->required();
  sc->add_option("--sample", scan_args.sample, "ORDER,COUNT,SEED");
  sc->add_option("--format", scan_args.format)->check(CLI::IsMember({"jsonl", "csv"}));
  sc->add_option("--jobs", scan_args.jobs);
  sc->add_option("--out", scan_args.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitDomain;
  }

  try {
    if (s->parsed()) return do_solve(solve, out);
    if (c->parsed()) return do_convert(convert, out);
    if (r->parsed()) return do_reduce(reduce, out);
    if (g->parsed()) return do_recognize(recognize, out);
    if (st->parsed()) return do_structure(structure_graph, out);
    if (k->parsed()) return do_construct(construct, out);
    if (sc->parsed()) return do_scan(scan_args, out);
  } catch (const Inconsistent& e) {
    err << "inconsistency: " << e.what << '\n';
    return kExitInconsistent;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace rdom::cli
