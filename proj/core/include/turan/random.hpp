#pragma once

#include <cstdint>

#include "turan/hypergraph.hpp"

namespace turan {

/// Seeded generators used by the property suites and the batch verifier.
/// All of them draw from a private 64-bit generator with platform-independent
/// uniform extraction, so a seed pins the output everywhere.

/// Each r-set becomes an edge independently with probability edge_prob.
Hypergraph random_hypergraph(int n, int r, double edge_prob, std::uint64_t seed);

/// A random semibipartite 3-graph: part A gets a random size in [1, n-2]
/// (the first labels), and each admissible triple (one vertex in A, two in
/// B) is kept with probability 1/2.
Hypergraph random_semibipartite(int n, std::uint64_t seed);

/// A random subgraph of a blowup: vertices get uniform parts in {0..5}, and
/// each triple whose parts form an edge of make_g26() is kept with
/// probability 1/2.
Hypergraph random_g26_colorable(int n, std::uint64_t seed);

/// Removes `count` distinct edges chosen uniformly (capped at the edge count).
Hypergraph remove_random_edges(const Hypergraph& h, long long count, std::uint64_t seed);

}  // namespace turan
