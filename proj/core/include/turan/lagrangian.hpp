#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

struct LagrangianConfig {
  std::uint64_t seed = 1;
  int restarts = 200;           // random starting points in addition to the
                                // uniform and uniform-on-support points
  int max_iterations = 2000;    // ascent iterations per start
  double improve_tol = 1e-13;   // stop when a sweep improves p by less
  int support_start_limit = 14; // enumerate all uniform-on-support starts
                                // only up to this vertex count
};

struct LagrangianResult {
  double lower_bound = 0.0;      // best weight polynomial value found
  SimplexPoint maximizer;        // attaining point; lower_bound = p(maximizer)
  std::optional<Rational> certified_upper;  // filled by callers that certify
  long long iterations = 0;      // total ascent iterations over all starts
  int restarts = 0;              // number of starting points used
};

/// Multi-start projected-gradient ascent over the simplex with backtracking
/// line search. Accepted steps never decrease the weight polynomial, and the
/// whole run is a deterministic function of the input and config.seed; ties
/// between stationary points go to the lexicographically smallest maximizer.
LagrangianResult lagrangian_lower(const Hypergraph& h, const LagrangianConfig& config = {});

/// A certified upper bound on the Lagrangian from exhaustive evaluation over
/// the lattice of denominator-`resolution` simplex points, in exact integer
/// arithmetic. Two sound corrections are computed and the smaller wins:
///   moment_bound:    lattice_max * D^r / (D (D-1) ... (D-r+1)),
///   lipschitz_bound: lattice_max + gradient_bound * n / D,
/// where gradient_bound caps every coordinate derivative of p over the
/// simplex (for 3-graphs via the clique number of each link). The bound
/// converges to the Lagrangian as the resolution grows.
struct LatticeCertificate {
  Rational upper_bound;
  Rational lattice_max;
  Rational moment_bound;
  Rational lipschitz_bound;
  Rational gradient_bound;
  std::vector<int> argmax;  // lattice point attaining lattice_max
  int resolution = 0;
};

/// Throws when the resolution is too coarse for a meaningful bound (smaller
/// than r, or correction exceeding the lattice maximum). Intended for
/// vertex counts up to ~8; cost grows as C(resolution + n - 2, n - 2).
LatticeCertificate lagrangian_upper(const Hypergraph& h, int resolution);

/// Analytic Lagrangian cap for stars on s vertices: (s-2)/(2(s-1)) * 4/27,
/// the maximum of (s-2)/(2(s-1)) * x (1-x)^2. Requires s >= 3; approaches
/// 2/27 from below.
double star_lagrangian_bound(int s);

/// Checks, exactly in rational arithmetic, that the blowup edge count equals
/// p_T(t / sum t) * (sum t)^r, and that this value respects the computed
/// Lagrangian bound (certified when the pattern has at most 8 vertices).
bool check_blowup_bound(const Hypergraph& pattern, const BlowupSpec& spec,
                        const LagrangianConfig& config = {});

struct FiveVertexSweepConfig {
  int resolution = 120;
  Rational margin = Rational(1, 1000);  // demand upper < 2/27 - margin
  LagrangianConfig lower;               // used for the reported lower bounds
  FiveVertexSweepConfig() { lower.restarts = 16; }
};

struct FiveVertexSweep {
  long long instances = 0;          // five-vertex edge sets with <= 8 edges
  long long eight_edge_instances = 0;
  long long bound_failures = 0;     // certified bound not below 2/27 - margin
  long long embed_failures = 0;     // 8-edge instances not embeddable in make_g26()
  double max_lower_bound = 0.0;     // largest ascent value seen over the family
  unsigned max_lower_mask = 0;      // edge subset attaining it (bit i = i-th triple)
  Rational max_upper;               // largest certified upper bound
  Rational min_gap;                 // smallest 2/27 - upper over the family
};

/// Sweeps every edge subset of the complete 3-graph on five vertices with at
/// most eight edges: certifies the Lagrangian bound for each and embeds every
/// eight-edge instance into make_g26(). Parallel over instances with a
/// deterministic, order-independent reduction.
FiveVertexSweep sweep_five_vertex_bound(const FiveVertexSweepConfig& config = {});

}  // namespace turan
