#include "verify_claims.hpp"

#include <cmath>
#include <sstream>

#include "turan/constructions.hpp"
#include "turan/edge_list.hpp"
#include "turan/family_m.hpp"
#include "turan/lagrangian.hpp"
#include "turan/random.hpp"
#include "turan/region.hpp"
#include "turan/search.hpp"
#include "turan/symmetrize.hpp"

namespace turan::cli {

namespace {

ClaimResult make_result(const char* suite, const char* name, bool pass, std::string measured) {
  return ClaimResult{suite, name, pass, std::move(measured)};
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

// --- core suite ------------------------------------------------------------

ClaimResult claim_blowup_identity(std::uint64_t) {
  bool ok = true;
  const Hypergraph g26 = make_g26();
  ok &= check_blowup_bound(g26, BlowupSpec{{2, 2, 2, 2, 2, 2}});
  ok &= check_blowup_bound(g26, BlowupSpec{{1, 1, 1, 1, 1, 1}});
  const Hypergraph edge = Hypergraph::from_edges(3, 3, {{0, 1, 2}});
  ok &= check_blowup_bound(edge, BlowupSpec{{1, 2, 3}});
  long long doubled = blowup_size(g26, BlowupSpec{{2, 2, 2, 2, 2, 2}});
  ok &= doubled == 128;
  return make_result("core", "blowup edge count equals weight polynomial times n^3",
                     ok, "|blowup(g26, 2x)| = " + std::to_string(doubled));
}

ClaimResult claim_hom_free_equivalence(std::uint64_t seed) {
  int agree = 0, total = 0;
  for (int i = 0; i < 50; ++i) {
    int n = 4 + static_cast<int>(i % 4);  // 4..7
    double p = 0.25 + 0.15 * (i % 4);
    Hypergraph h = random_hypergraph(n, 3, p, seed + i);
    BlowupSpec spec;
    spec.part_sizes.assign(n, 2);
    bool direct = is_m_free(h);
    bool blown = is_m_free(blowup(h, spec));
    agree += direct == blown;
    ++total;
  }
  return make_result("core", "M-freeness of a graph and of its doubled blowup agree",
                     agree == total,
                     std::to_string(agree) + "/" + std::to_string(total) + " agree");
}

ClaimResult claim_witness_size_bounds(std::uint64_t seed) {
  int pass = 0, total = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 6 + static_cast<int>(i % 7);  // 6..12
    Hypergraph sb = random_semibipartite(n, seed + 1000 + i);
    Hypergraph gc = random_g26_colorable(n, seed + 2000 + i);
    bool ok = sb.size() <= g1_bound(n) && gc.size() <= g2_bound(n);
    ok = ok && semibipartite_witness(sb).has_value() && g26_coloring(gc).has_value();
    pass += ok;
    ++total;
  }
  return make_result("core", "semibipartite and colorable graphs respect g1/g2 size bounds",
                     pass == total, std::to_string(pass) + "/" + std::to_string(total));
}

ClaimResult claim_symmetrization_contracts(std::uint64_t seed) {
  int pass = 0, total = 0;
  for (int i = 0; i < 50; ++i) {
    int n = 5 + static_cast<int>(i % 5);  // 5..9
    Hypergraph h = random_hypergraph(n, 3, 0.3 + 0.1 * (i % 4), seed + 3000 + i);
    SymmetrizationTrace trace = symmetrize(h);
    bool ok = trace.final_graph.size() >= h.size();
    EquivalenceClasses classes = equivalence_classes(trace.final_graph, trace.final_active);
    VertexSet reps;
    for (const auto& c : classes.classes) reps.set(c.lowest());
    Hypergraph pattern = induced_subgraph(trace.final_graph, reps);
    ok = ok && is_two_covered(pattern);
    BlowupSpec spec;
    for (const auto& c : classes.classes) spec.part_sizes.push_back(c.count());
    ok = ok && blowup_size(pattern, spec) == trace.final_graph.size();
    if (ok && is_m_free(h)) {
      for (const auto& [active, state] : replay_states(trace)) {
        (void)active;
        if (!is_m_free(state)) {
          ok = false;
          break;
        }
      }
    }
    pass += ok;
    ++total;
  }
  return make_result("core", "symmetrization grows size, yields 2-covered blowups, keeps M-freeness",
                     pass == total, std::to_string(pass) + "/" + std::to_string(total));
}

ClaimResult claim_g26_degrees(std::uint64_t) {
  const Hypergraph g26 = make_g26();
  bool ok = g26.size() == 16;
  for (int v = 0; v < 6; ++v) ok = ok && degree(g26, v) == 8;
  return make_result("core", "the 6-vertex extremal pattern has 16 edges, all degrees 8", ok,
                     "|edges| = " + std::to_string(g26.size()));
}

ClaimResult claim_constructions_m_free(std::uint64_t) {
  bool ok = true;
  std::string detail;
  for (int n = 6; n <= 10; ++n) {
    bool f1 = is_m_free(make_g1(n));
    bool f2 = is_m_free(make_g2(n));
    ok = ok && f1 && f2;
    detail += "n=" + std::to_string(n) + (f1 && f2 ? " ok " : " FAIL ");
  }
  return make_result("core", "both extremal constructions are M-free for n = 6..10", ok, detail);
}

// --- lagrangian suite --------------------------------------------------------

ClaimResult claim_lagrangian_k4(std::uint64_t seed) {
  LagrangianConfig cfg;
  cfg.seed = seed;
  const Hypergraph k4 = make_complete(4, 3);
  LagrangianResult lower = lagrangian_lower(k4, cfg);
  LatticeCertificate cert = lagrangian_upper(k4, 120);
  bool ok = std::abs(lower.lower_bound - 1.0 / 16.0) <= 1e-9;
  ok = ok && cert.lattice_max == Rational(1, 16) && cert.upper_bound >= Rational(1, 16);
  return make_result("lagrangian", "Lagrangian of the complete 4-vertex 3-graph is 1/16", ok,
                     "lower = " + fmt(lower.lower_bound) +
                         ", certified <= " + to_string(cert.upper_bound));
}

ClaimResult claim_lagrangian_g26(std::uint64_t seed) {
  LagrangianConfig cfg;
  cfg.seed = seed;
  const Hypergraph g26 = make_g26();
  LagrangianResult lower = lagrangian_lower(g26, cfg);
  LatticeCertificate cert = lagrangian_upper(g26, 120);
  bool ok = std::abs(lower.lower_bound - 2.0 / 27.0) <= 1e-9;
  for (double w : lower.maximizer) ok = ok && std::abs(w - 1.0 / 6.0) <= 1e-6;
  ok = ok && cert.lattice_max == Rational(2, 27) && cert.upper_bound >= Rational(2, 27);
  return make_result("lagrangian",
                     "Lagrangian of the 6-vertex pattern is 2/27 at the uniform point", ok,
                     "lower = " + fmt(lower.lower_bound) +
                         ", certified <= " + to_string(cert.upper_bound));
}

ClaimResult claim_five_vertex_sweep(std::uint64_t seed) {
  FiveVertexSweepConfig cfg;
  cfg.lower.seed = seed;
  FiveVertexSweep sweep = sweep_five_vertex_bound(cfg);
  bool ok = sweep.instances == 1013 && sweep.eight_edge_instances == 45 &&
            sweep.bound_failures == 0 && sweep.embed_failures == 0;
  return make_result("lagrangian",
                     "every 5-vertex 3-graph with <= 8 edges stays below 2/27 - 1/1000; "
                     "8-edge ones embed into the pattern",
                     ok,
                     "max lower = " + fmt(sweep.max_lower_bound) +
                         ", min certified gap = " + to_string(sweep.min_gap));
}

ClaimResult claim_star_bound(std::uint64_t seed) {
  LagrangianConfig cfg;
  cfg.seed = seed;
  bool ok = std::abs(star_lagrangian_bound(3) - 1.0 / 27.0) <= 1e-12;
  // full star on 4 vertices attains its cap
  Hypergraph star4 = Hypergraph::from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  double lambda4 = lagrangian_lower(star4, cfg).lower_bound;
  ok = ok && lambda4 <= star_lagrangian_bound(4) + 1e-9;
  // bounds increase toward 2/27
  ok = ok && star_lagrangian_bound(50) < 2.0 / 27.0;
  Hypergraph star8 = make_full_star(8);
  ok = ok && lagrangian_lower(star8, cfg).lower_bound <= star_lagrangian_bound(8) + 1e-9;
  return make_result("lagrangian", "star Lagrangians respect the analytic cap below 2/27", ok,
                     "lambda(star4) = " + fmt(lambda4) +
                         ", cap = " + fmt(star_lagrangian_bound(4)));
}

// --- search suite ------------------------------------------------------------

ClaimResult claim_turan_number_n6(std::uint64_t) {
  SearchConfig cfg;
  cfg.n = 6;
  SearchResult result = max_free_edges(cfg);
  const Hypergraph g26 = make_g26();
  bool iso = contains_subgraph(result.witness, g26).has_value() &&
             contains_subgraph(g26, result.witness).has_value();
  bool ok = result.max_edges == 16 && result.optimal && iso;
  ok = ok && turan_upper_bound(6) == Rational(16);
  return make_result("search", "the M-free maximum at n=6 is 16, attained only by the pattern",
                     ok,
                     "maxEdges = " + std::to_string(result.max_edges) +
                         ", nodes = " + std::to_string(result.nodes_expanded));
}

ClaimResult claim_small_turan_values(std::uint64_t) {
  SearchConfig c3;
  c3.n = 3;
  SearchConfig c4;
  c4.n = 4;
  SearchConfig c5;
  c5.n = 5;
  int e3 = max_free_edges(c3).max_edges;
  int e4 = max_free_edges(c4).max_edges;
  int e5 = max_free_edges(c5).max_edges;
  bool ok = e3 == 1 && e4 == 4 && e5 == 8;
  ok = ok && Rational(e3) <= turan_upper_bound(3) && Rational(e4) <= turan_upper_bound(4) &&
       Rational(e5) <= turan_upper_bound(5);
  return make_result("search", "M-free maxima at n=3,4,5 are 1, 4, 8, all below 2n^3/27", ok,
                     std::to_string(e3) + ", " + std::to_string(e4) + ", " + std::to_string(e5));
}

// --- region suite ------------------------------------------------------------

ClaimResult claim_induced_count_formula(std::uint64_t) {
  bool ok = true;
  std::string detail;
  for (int n : {6, 9, 12, 15}) {
    for (int m = 0; m <= n / 3; ++m) {
      long long counted = count_induced_k43_minus(make_kostochka({n, m}));
      long long formula = kostochka_k43_minus_count(n, m);
      if (counted != formula) {
        ok = false;
        detail += "n=" + std::to_string(n) + ",m=" + std::to_string(m) + " mismatch ";
      }
    }
  }
  if (ok) detail = "all (n,m) with n in {6,9,12,15} match";
  return make_result("region", "induced near-complete 4-set counts match the closed form", ok,
                     detail);
}

ClaimResult claim_kostochka_sizes(std::uint64_t) {
  bool ok = true;
  for (int n : {6, 9, 12}) {
    for (int m = 0; m <= n / 3; ++m) {
      Hypergraph g = make_kostochka({n, m});
      if (g.size() != static_cast<long long>(n) * (n - 3) * (2 * n - 3) / 27) ok = false;
    }
    std::vector<int> ms(n / 3 + 1);
    for (int m = 0; m <= n / 3; ++m) ms[m] = m;
    kostochka_complement_family(n, ms);  // throws if any complement has a full 4-set
  }
  return make_result("region",
                     "Kostochka graphs have n(n-3)(2n-3)/27 edges and 4-clique-free complements",
                     ok, "n in {6,9,12}, all m");
}

ClaimResult claim_region_targets(std::uint64_t) {
  RegionPoint p1 = region_point(make_g1(240));
  RegionPoint p2 = region_point(make_g2(240));
  RegionPoint ps = region_point(make_full_star(100));
  auto near = [](const Rational& x, double target) {
    return std::abs(to_double(x) - target) < 0.01;
  };
  bool ok = near(p1.shadow_density, 8.0 / 9.0) && near(p1.edge_density, 4.0 / 9.0) &&
            near(p2.shadow_density, 5.0 / 6.0) && near(p2.edge_density, 4.0 / 9.0) &&
            ps.shadow_density == Rational(1);
  return make_result("region",
                     "densities approach (8/9, 4/9) and (5/6, 4/9); the full star has full shadow",
                     ok,
                     "g1(240) = (" + to_string(p1.shadow_density) + ", " +
                         to_string(p1.edge_density) + "), g2(240) = (" +
                         to_string(p2.shadow_density) + ", " + to_string(p2.edge_density) + ")");
}

ClaimResult claim_edit_distance(std::uint64_t) {
  Rational a = edit_distance_lower_bound(make_kostochka({9, 1}), make_kostochka({9, 0}));
  Rational b = edit_distance_lower_bound(make_kostochka({12, 2}), make_kostochka({12, 0}));
  bool ok = a == Rational(1, 2) && b == Rational(4, 3);
  return make_result("region", "edit-distance lower bounds from induced counts", ok,
                     "G(9,1) vs G(9,0): " + to_string(a) + "; G(12,2) vs G(12,0): " + to_string(b));
}

}  // namespace

bool suite_known(const std::string& suite) {
  return suite == "core" || suite == "lagrangian" || suite == "search" || suite == "region" ||
         suite == "all";
}

std::vector<ClaimResult> run_claims(const std::string& suite, std::uint64_t seed) {
  using Runner = ClaimResult (*)(std::uint64_t);
  struct Entry {
    const char* suite;
    Runner run;
  };
  static const Entry entries[] = {
      {"core", claim_blowup_identity},
      {"core", claim_g26_degrees},
      {"core", claim_hom_free_equivalence},
      {"core", claim_witness_size_bounds},
      {"core", claim_symmetrization_contracts},
      {"core", claim_constructions_m_free},
      {"lagrangian", claim_lagrangian_k4},
      {"lagrangian", claim_lagrangian_g26},
      {"lagrangian", claim_star_bound},
      {"lagrangian", claim_five_vertex_sweep},
      {"search", claim_turan_number_n6},
      {"search", claim_small_turan_values},
      {"region", claim_induced_count_formula},
      {"region", claim_kostochka_sizes},
      {"region", claim_region_targets},
      {"region", claim_edit_distance},
  };
  std::vector<ClaimResult> out;
  for (const auto& entry : entries) {
    if (suite != "all" && suite != entry.suite) continue;
    out.push_back(entry.run(seed));
  }
  return out;
}

}  // namespace turan::cli
