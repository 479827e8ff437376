#pragma once

#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

/// The forbidden family M consists of three finite classes of 3-graphs:
///   M1: the complete 3-graph on five vertices minus one edge.
///   M2: 3-graphs on at most 28 vertices with a 7-vertex core (every core
///       pair covered by an edge) whose induced subgraph has transversal
///       number at least two.
///   M3: 3-graphs on at most 21 vertices with a 6-vertex core that embed
///       neither into any blowup of a star nor into any blowup of the
///       16-edge graph from make_g26().
/// Containment of an M2 or M3 member is decided through core-set criteria
/// rather than by materializing the families; see find_m2 / find_m3.

enum class WitnessKind { Semibipartite, G26Coloring };

/// A vertex partition certifying structure: two parts (0 = A, 1 = B) with
/// every edge meeting A exactly once, or six parts such that every edge maps
/// onto three distinct parts forming an edge of make_g26().
struct PartitionWitness {
  WitnessKind kind;
  std::vector<int> part;  // one label per vertex
};

bool validate_witness(const Hypergraph& h, const PartitionWitness& w);

/// Searches for a semibipartite partition by unit propagation over the edges
/// with backtracking. Vertices in no edge land in B, so the empty hypergraph
/// gets the witness A = {}.
std::optional<PartitionWitness> semibipartite_witness(const Hypergraph& h);

/// Backtracking CSP over vertex part assignments, most-constrained vertex
/// first; the first constrained vertex only ranges over automorphism orbit
/// representatives of the 6-vertex pattern.
std::optional<PartitionWitness> g26_coloring(const Hypergraph& h);

enum class MKind { M1, M2, M3 };
enum class M3Mode { Fast, Exact };

struct MViolation {
  MKind kind;
  VertexSet core;                       // 5, 7 or 6 vertices
  std::vector<VertexSet> witness_edges;  // edges of h certifying the violation
  /// Fast-mode M3 answers are only sound while the assembled subgraph stays
  /// within the 21-vertex cap; set when the cap was exceeded.
  bool vertex_bound_exceeded = false;
};

/// Re-runs all kind-specific certificate checks.
bool validate_violation(const Hypergraph& h, const MViolation& v);

/// An embedded copy of the five-vertex, nine-edge forbidden graph.
std::optional<MViolation> find_m1(const Hypergraph& h);

/// A 7-set with every pair covered by an edge of h whose induced subgraph
/// has transversal number >= 2. The witness lists one covering edge per pair
/// plus the induced edges. Equivalent to containing an M2 member: covering
/// edges add at most C(7,2) vertices, within the 28-vertex cap, and the core's
/// induced subgraph is exactly h restricted to the 7-set.
std::optional<MViolation> find_m2(const Hypergraph& h);

/// Exact mode: a 6-set S with every pair covered in h together with a
/// subgraph F = h[S] plus one covering edge per pair such that F is neither
/// semibipartite nor colorable by the 6-vertex pattern. Non-embeddability
/// only grows with the assembly, so the enumeration ranges over maximal
/// choices (one outside covering edge per pair that has one) with
/// embeddability pruning in both directions. Fast mode instead tests h[S]
/// plus all edges meeting S twice at once; its positive answers are flagged
/// when that superset leaves the 21-vertex cap, and they may exceed exact
/// mode when breaking embeddability needs two covering edges on one pair.
std::optional<MViolation> find_m3(const Hypergraph& h, M3Mode mode);

/// The M3 criterion restricted to one candidate core; nullopt when some core
/// pair is uncovered in h or every admissible assembly embeds.
std::optional<MViolation> find_m3_for_core(const Hypergraph& h, const VertexSet& core,
                                           M3Mode mode);

/// First violation in kind order M1, M2, M3 (exact mode), or nullopt.
std::optional<MViolation> find_m_violation(const Hypergraph& h);

inline bool is_m_free(const Hypergraph& h) { return !find_m_violation(h).has_value(); }

/// True when the blowup with all parts of size 3 is M-free; M-freeness and
/// M-hom-freeness coincide, so this decides hom-freeness by an independent
/// route. Intended for small inputs.
bool is_m_hom_free(const Hypergraph& h);

}  // namespace turan
