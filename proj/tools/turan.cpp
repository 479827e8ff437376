// Command-line front end for the extremal 3-graph engine: generators,
// forbidden-family checks, Lagrangian bounds, symmetrization, branch-and-bound
// search, density reports and the batch claim verifier.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_util.hpp"
#include "verify_claims.hpp"

#include "turan/constructions.hpp"
#include "turan/edge_list.hpp"
#include "turan/family_m.hpp"
#include "turan/lagrangian.hpp"
#include "turan/region.hpp"
#include "turan/search.hpp"
#include "turan/symmetrize.hpp"

namespace {

using namespace turan;
using turan::cli::Json;

constexpr const char* kVersion = "0.1.0";

// exit codes: 0 success, 1 violation / failed claims, 2 usage or input error
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Hypergraph read_input(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  return read_edge_list_file(path);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
}

class Stopwatch {
 public:
  long long ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json report_shell(const std::string& command) {
  Json report;
  report["command"] = command;
  report["toolVersion"] = kVersion;
  return report;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

// --- gen ---------------------------------------------------------------

struct GenOptions {
  std::string name;
  std::vector<long long> params;
  std::string out;
};

Hypergraph generate(const GenOptions& opt) {
  auto need = [&](std::size_t count) {
    if (opt.params.size() != count)
      throw CLI::ValidationError("gen " + opt.name + " takes " + std::to_string(count) +
                                 " parameter(s)");
  };
  const auto& p = opt.params;
  if (opt.name == "g1") {
    need(1);
    return make_g1(static_cast<int>(p[0]));
  }
  if (opt.name == "g2") {
    need(1);
    return make_g2(static_cast<int>(p[0]));
  }
  if (opt.name == "g26") {
    need(0);
    return make_g26();
  }
  if (opt.name == "turan") {
    need(3);
    return make_turan(static_cast<int>(p[0]), static_cast<int>(p[1]), static_cast<int>(p[2]));
  }
  if (opt.name == "kostochka") {
    need(2);
    return make_kostochka({static_cast<int>(p[0]), static_cast<int>(p[1])});
  }
  if (opt.name == "complete") {
    need(2);
    return make_complete(static_cast<int>(p[0]), static_cast<int>(p[1]));
  }
  if (opt.name == "k53minus") {
    need(0);
    return make_k53_minus();
  }
  if (opt.name == "f32") {
    need(0);
    return make_f32();
  }
  if (opt.name == "star") {
    need(1);
    return make_full_star(static_cast<int>(p[0]));
  }
  throw CLI::ValidationError("unknown construction '" + opt.name +
                             "'; expected one of g1, g2, g26, turan, kostochka, complete, "
                             "k53minus, f32, star");
}

// --- check -------------------------------------------------------------

const char* kind_name(MKind kind) {
  switch (kind) {
    case MKind::M1: return "M1";
    case MKind::M2: return "M2";
    case MKind::M3: return "M3";
  }
  return "?";
}

Json violation_json(const MViolation& v) {
  Json out;
  out["kind"] = kind_name(v.kind);
  out["core"] = cli::vertex_set_json(v.core);
  Json edges = Json::array();
  for (const auto& e : v.witness_edges) edges.push_back(cli::vertex_set_json(e));
  out["witnessEdges"] = edges;
  out["vertexBoundExceeded"] = v.vertex_bound_exceeded;
  return out;
}

int run_check(const std::string& file, const std::string& mode, bool json,
              const std::string& out_path) {
  Stopwatch timer;
  Hypergraph h = read_input(file);
  std::optional<MViolation> violation = find_m1(h);
  if (!violation) violation = find_m2(h);
  if (!violation)
    violation = find_m3(h, mode == "fast" ? M3Mode::Fast : M3Mode::Exact);

  if (json) {
    Json report = report_shell("check");
    report["inputs"] = {{"file", file}, {"mode", mode},
                        {"vertexCount", h.vertex_count()}, {"edgeCount", h.size()}};
    report["results"]["mFree"] = !violation.has_value();
    if (violation) report["results"]["violation"] = violation_json(*violation);
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    std::ostringstream text;
    text << "M-free: " << (violation ? "false" : "true") << "\n";
    if (violation) {
      text << "kind: " << kind_name(violation->kind) << "\n";
      text << "core:";
      violation->core.for_each([&](int v) { text << ' ' << v; });
      text << "\nwitness edges:\n";
      for (const auto& e : violation->witness_edges) {
        bool first = true;
        text << "  ";
        e.for_each([&](int v) {
          if (!first) text << ' ';
          text << v;
          first = false;
        });
        text << "\n";
      }
      if (violation->vertex_bound_exceeded)
        text << "note: fast-mode witness exceeds the 21-vertex cap; "
                "rerun with --mode exact\n";
    }
    emit(out_path, text.str());
  }
  return violation ? kExitViolation : kExitOk;
}

// --- lagrangian ----------------------------------------------------------

int run_lagrangian(const std::string& file, bool certify, std::uint64_t seed, int resolution,
                   bool json, const std::string& out_path) {
  Stopwatch timer;
  Hypergraph h = read_input(file);
  LagrangianConfig cfg;
  cfg.seed = seed;
  LagrangianResult result = lagrangian_lower(h, cfg);
  std::optional<LatticeCertificate> cert;
  if (certify) {
    cert = lagrangian_upper(h, resolution);
    result.certified_upper = cert->upper_bound;
  }

  if (json) {
    Json report = report_shell("lagrangian");
    report["seed"] = seed;
    report["inputs"] = {{"file", file}, {"vertexCount", h.vertex_count()},
                        {"edgeCount", h.size()}};
    Json res;
    res["lowerBound"] = result.lower_bound;
    res["maximizer"] = result.maximizer;
    res["iterations"] = result.iterations;
    res["restarts"] = result.restarts;
    if (cert) {
      Json cj;
      cj["resolution"] = cert->resolution;
      cj["upperBound"] = cli::rational_json(cert->upper_bound);
      cj["latticeMax"] = cli::rational_json(cert->lattice_max);
      cj["momentBound"] = cli::rational_json(cert->moment_bound);
      cj["lipschitzBound"] = cli::rational_json(cert->lipschitz_bound);
      cj["gradientBound"] = cli::rational_json(cert->gradient_bound);
      cj["correction"] = cli::rational_json(cert->upper_bound - cert->lattice_max);
      cj["argmax"] = cert->argmax;
      res["certificate"] = cj;
    }
    report["results"] = res;
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    std::ostringstream text;
    text.precision(12);
    text << "lower bound: " << result.lower_bound << "\n";
    text << "maximizer:";
    for (double w : result.maximizer) text << ' ' << w;
    text << "\nstarts: " << result.restarts << ", iterations: " << result.iterations << "\n";
    if (cert) {
      text << "certified upper bound: " << to_string(cert->upper_bound) << " ("
           << to_double(cert->upper_bound) << ")\n";
      text << "lattice max: " << to_string(cert->lattice_max)
           << ", correction: " << to_string(cert->upper_bound - cert->lattice_max)
           << ", resolution: " << cert->resolution << "\n";
    }
    emit(out_path, text.str());
  }
  return kExitOk;
}

// --- symmetrize ------------------------------------------------------------

const char* event_kind_name(SymEvent::Kind kind) {
  switch (kind) {
    case SymEvent::Kind::InitialRemove: return "initialRemove";
    case SymEvent::Kind::Symmetrize: return "symmetrize";
    case SymEvent::Kind::CleanRemove: return "cleanRemove";
  }
  return "?";
}

Json trace_json(const SymmetrizationTrace& trace) {
  Json out;
  out["algorithm"] = trace.algorithm;
  out["alpha"] = cli::rational_json(trace.alpha);
  out["input"] = cli::hypergraph_json(trace.input);
  Json events = Json::array();
  for (const auto& ev : trace.events) {
    Json e;
    e["kind"] = event_kind_name(ev.kind);
    e["step"] = ev.step;
    if (ev.kind == SymEvent::Kind::Symmetrize) {
      e["classFrom"] = cli::vertex_set_json(ev.class_from);
      e["classTo"] = cli::vertex_set_json(ev.class_to);
    } else {
      e["vertex"] = ev.vertex;
    }
    events.push_back(e);
  }
  out["events"] = events;
  Json removed = Json::array();
  for (const auto& z : trace.removed) removed.push_back(cli::vertex_set_json(z));
  out["removed"] = removed;
  out["finalActive"] = cli::vertex_set_json(trace.final_active);
  out["final"] = cli::hypergraph_json(trace.final_graph);
  return out;
}

int run_symmetrize(const std::string& file, const std::string& alpha_text, int algorithm,
                   const std::string& trace_path, bool json, const std::string& out_path) {
  Stopwatch timer;
  Hypergraph h = read_input(file);
  SymmetrizationTrace trace;
  if (algorithm == 1) {
    trace = symmetrize(h);
  } else {
    trace = symmetrize_and_clean(h, parse_rational(alpha_text));
  }

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::runtime_error("cannot open " + trace_path + " for writing");
    out << trace_json(trace).dump(2) << "\n";
  }

  VertexSet removed_total;
  for (const auto& z : trace.removed) removed_total |= z;

  if (json) {
    Json report = report_shell("symmetrize");
    report["inputs"] = {{"file", file}, {"algorithm", algorithm},
                        {"alpha", cli::rational_json(trace.alpha)},
                        {"vertexCount", h.vertex_count()}, {"edgeCount", h.size()}};
    Json res;
    res["steps"] = trace.steps();
    res["events"] = trace.events.size();
    res["removedVertices"] = cli::vertex_set_json(removed_total);
    res["finalActive"] = cli::vertex_set_json(trace.final_active);
    res["finalEdgeCount"] = trace.final_graph.size();
    res["final"] = cli::edges_json(trace.final_graph);
    report["results"] = res;
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    std::ostringstream text;
    text << "steps: " << trace.steps() << ", events: " << trace.events.size() << "\n";
    text << "removed " << removed_total.count() << " vertices, " << trace.final_active.count()
         << " remain, " << trace.final_graph.size() << " edges (input had " << h.size()
         << ")\n";
    emit(out_path, text.str());
  }
  return kExitOk;
}

// --- search ------------------------------------------------------------

int run_search(int n, const std::string& family, long long budget, bool json,
               const std::string& out_path) {
  if (family != "m")
    throw CLI::ValidationError("only --family m is available");
  Stopwatch timer;
  SearchConfig cfg;
  cfg.n = n;
  cfg.node_budget = budget;
  SearchResult result = max_free_edges(cfg);

  if (json) {
    Json report = report_shell("search");
    report["inputs"] = {{"n", n}, {"family", family}, {"budget", budget}};
    Json res;
    res["maxEdges"] = result.max_edges;
    res["optimal"] = result.optimal;
    res["nodesExpanded"] = result.nodes_expanded;
    res["upperBound"] = cli::rational_json(turan_upper_bound(n));
    res["witness"] = cli::hypergraph_json(result.witness);
    report["results"] = res;
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    std::ostringstream text;
    text << "maxEdges: " << result.max_edges << (result.optimal ? " (optimal)" : " (budget hit)")
         << ", nodes: " << result.nodes_expanded << "\n";
    text << "upper bound 2n^3/27 = " << to_string(turan_upper_bound(n)) << "\n";
    text << "witness:\n" << to_edge_list(result.witness);
    emit(out_path, text.str());
  }
  return kExitOk;
}

// --- region / k43count / edlb ----------------------------------------------

int run_region(const std::string& file, bool json, const std::string& out_path) {
  Stopwatch timer;
  Hypergraph h = read_input(file);
  RegionPoint p = region_point(h);
  if (json) {
    Json report = report_shell("region");
    report["inputs"] = {{"file", file}, {"vertexCount", h.vertex_count()},
                        {"edgeCount", h.size()}};
    report["results"] = {{"shadowDensity", cli::rational_json(p.shadow_density)},
                         {"edgeDensity", cli::rational_json(p.edge_density)}};
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    std::ostringstream text;
    text << "shadow density: " << to_string(p.shadow_density) << " ("
         << to_double(p.shadow_density) << ")\n";
    text << "edge density: " << to_string(p.edge_density) << " (" << to_double(p.edge_density)
         << ")\n";
    emit(out_path, text.str());
  }
  return kExitOk;
}

int run_k43count(const std::string& file, bool json, const std::string& out_path) {
  Stopwatch timer;
  Hypergraph h = read_input(file);
  long long count = count_induced_k43_minus(h);
  if (json) {
    Json report = report_shell("k43count");
    report["inputs"] = {{"file", file}, {"vertexCount", h.vertex_count()},
                        {"edgeCount", h.size()}};
    report["results"] = {{"inducedK43Minus", count}};
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    emit(out_path, "induced K43-minus count: " + std::to_string(count) + "\n");
  }
  return kExitOk;
}

int run_edlb(const std::string& file1, const std::string& file2, bool json,
             const std::string& out_path) {
  Stopwatch timer;
  Hypergraph h1 = read_input(file1);
  Hypergraph h2 = read_input(file2);
  Rational bound = edit_distance_lower_bound(h1, h2);
  if (json) {
    Json report = report_shell("edlb");
    report["inputs"] = {{"file1", file1}, {"file2", file2}};
    report["results"] = {{"editDistanceLowerBound", cli::rational_json(bound)}};
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    emit(out_path, "edit distance >= " + to_string(bound) + " (" +
                       std::to_string(to_double(bound)) + ")\n");
  }
  return kExitOk;
}

// --- verify-lemmas -----------------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed, bool json,
               const std::string& out_path) {
  Stopwatch timer;
  if (!cli::suite_known(suite))
    throw CLI::ValidationError("unknown suite '" + suite +
                               "'; expected core, lagrangian, search, region or all");
  auto results = cli::run_claims(suite, seed);
  bool all_pass = true;
  if (json) {
    Json report = report_shell("verify-lemmas");
    report["seed"] = seed;
    report["inputs"] = {{"suite", suite}};
    Json claims = Json::array();
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      claims.push_back({{"suite", r.suite},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"measured", r.measured}});
    }
    report["results"] = {{"claims", claims}, {"allPass", all_pass}};
    report["timings"]["totalMs"] = timer.ms();
    emit(out_path, render(report));
  } else {
    std::ostringstream text;
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      text << (r.pass ? "PASS" : "FAIL") << " [" << r.suite << "] " << r.name << " — "
           << r.measured << "\n";
    }
    text << (all_pass ? "all claims pass" : "SOME CLAIMS FAILED") << "\n";
    emit(out_path, text.str());
  }
  return all_pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric engine for extremal 3-graph computations"};
  app.require_subcommand(1);

  // gen
  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a named construction as an edge list");
  gen->add_option("name", gen_opt.name, "construction name")->required();
  gen->add_option("params", gen_opt.params, "construction parameters");
  gen->add_option("--out", gen_opt.out, "output file (default stdout)");

  // check
  std::string check_file, check_mode = "exact", check_out;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "decide containment of the forbidden family M");
  check->add_option("file", check_file, "edge-list file, or - for stdin")->required();
  check->add_option("--mode", check_mode, "M3 decision mode")
      ->check(CLI::IsMember({"exact", "fast"}));
  check->add_flag("--json", check_json, "emit a JSON report");
  check->add_option("--out", check_out, "report destination (default stdout)");

  // lagrangian
  std::string lagr_file, lagr_out;
  bool lagr_certify = false, lagr_json = false;
  std::uint64_t lagr_seed = 1;
  int lagr_resolution = 120;
  auto* lagr = app.add_subcommand("lagrangian", "maximize the weight polynomial over the simplex");
  lagr->add_option("file", lagr_file, "edge-list file, or - for stdin")->required();
  lagr->add_flag("--certify", lagr_certify, "add a lattice upper-bound certificate");
  lagr->add_option("--seed", lagr_seed, "restart seed");
  lagr->add_option("--resolution", lagr_resolution, "lattice denominator for --certify");
  lagr->add_flag("--json", lagr_json, "emit a JSON report");
  lagr->add_option("--out", lagr_out, "report destination (default stdout)");

  // symmetrize
  std::string sym_file, sym_alpha = "0", sym_trace, sym_out;
  int sym_algorithm = 1;
  bool sym_json = false;
  auto* sym = app.add_subcommand("symmetrize", "run a symmetrization algorithm");
  sym->add_option("file", sym_file, "edge-list file, or - for stdin")->required();
  sym->add_option("--alpha", sym_alpha, "cleaning threshold as an exact rational P/Q");
  sym->add_option("--algorithm", sym_algorithm, "1 = plain, 2 = with cleaning")
      ->check(CLI::IsMember({1, 2}));
  sym->add_option("--trace", sym_trace, "write the full JSON event trace to this file");
  sym->add_flag("--json", sym_json, "emit a JSON report");
  sym->add_option("--out", sym_out, "report destination (default stdout)");

  // search
  int search_n = 6;
  std::string search_family = "m", search_out;
  long long search_budget = -1;
  bool search_json = false;
  auto* search = app.add_subcommand("search", "maximize edges over family-free 3-graphs");
  search->add_option("--n", search_n, "vertex count")->required();
  search->add_option("--family", search_family, "forbidden family (m)");
  search->add_option("--budget", search_budget, "node budget (negative = unlimited)");
  search->add_flag("--json", search_json, "emit a JSON report");
  search->add_option("--out", search_out, "report destination (default stdout)");

  // region
  std::string region_file, region_out;
  bool region_json = false;
  auto* region = app.add_subcommand("region", "shadow and edge densities");
  region->add_option("file", region_file, "edge-list file, or - for stdin")->required();
  region->add_flag("--json", region_json, "emit a JSON report");
  region->add_option("--out", region_out, "report destination (default stdout)");

  // k43count
  std::string k43_file, k43_out;
  bool k43_json = false;
  auto* k43 = app.add_subcommand("k43count", "count 4-sets inducing exactly three edges");
  k43->add_option("file", k43_file, "edge-list file, or - for stdin")->required();
  k43->add_flag("--json", k43_json, "emit a JSON report");
  k43->add_option("--out", k43_out, "report destination (default stdout)");

  // edlb
  std::string edlb_file1, edlb_file2, edlb_out;
  bool edlb_json = false;
  auto* edlb = app.add_subcommand("edlb", "edit-distance lower bound between two 3-graphs");
  edlb->add_option("file1", edlb_file1, "edge-list file, or - for stdin")->required();
  edlb->add_option("file2", edlb_file2, "edge-list file")->required();
  edlb->add_flag("--json", edlb_json, "emit a JSON report");
  edlb->add_option("--out", edlb_out, "report destination (default stdout)");

  // verify-lemmas
  std::string verify_suite = "all", verify_out;
  std::uint64_t verify_seed = 1;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify-lemmas", "run the batch claim verifier");
  verify->add_option("--suite", verify_suite, "core, lagrangian, search, region or all");
  verify->add_option("--seed", verify_seed, "seed for the randomized claims");
  verify->add_flag("--json", verify_json, "emit a JSON report");
  verify->add_option("--out", verify_out, "report destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Hypergraph h = generate(gen_opt);
      emit(gen_opt.out, to_edge_list(h));
      return kExitOk;
    }
    if (check->parsed()) return run_check(check_file, check_mode, check_json, check_out);
    if (lagr->parsed())
      return run_lagrangian(lagr_file, lagr_certify, lagr_seed, lagr_resolution, lagr_json,
                            lagr_out);
    if (sym->parsed())
      return run_symmetrize(sym_file, sym_alpha, sym_algorithm, sym_trace, sym_json, sym_out);
    if (search->parsed())
      return run_search(search_n, search_family, search_budget, search_json, search_out);
    if (region->parsed()) return run_region(region_file, region_json, region_out);
    if (k43->parsed()) return run_k43count(k43_file, k43_json, k43_out);
    if (edlb->parsed()) return run_edlb(edlb_file1, edlb_file2, edlb_json, edlb_out);
    if (verify->parsed()) return run_verify(verify_suite, verify_seed, verify_json, verify_out);
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
