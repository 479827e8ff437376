#pragma once

#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

struct SearchConfig {
  int n = 6;
  /// Forbid the family M (all checks incremental); or, when custom_forbidden
  /// is non-empty, forbid exactly those subgraphs instead.
  std::vector<Hypergraph> custom_forbidden;
  long long node_budget = -1;  // negative: unlimited
  bool symmetry_pruning = true;
};

struct SearchResult {
  int max_edges = 0;
  Hypergraph witness{3, 0};
  long long nodes_expanded = 0;
  bool optimal = false;  // true when the search ran to completion
};

/// Branch-and-bound edge-count maximization over forbidden-family-free
/// 3-graphs. Candidate triples are branched in lexicographic order
/// (include first); inclusion triggers incremental violation checks limited
/// to vertex sets sharing a covered pair with the new edge; the incumbent
/// prunes via count + remaining <= best. Symmetry pruning forces the first
/// included edge to {0,1,2}, which is sound because the families are closed
/// under relabeling. For family M the exact mode is intended for n <= 10.
SearchResult max_free_edges(const SearchConfig& config);

/// 2 n^3 / 27 as an exact rational; edge counts of M-free 3-graphs never
/// exceed it, with equality at multiples of six.
Rational turan_upper_bound(int n);

}  // namespace turan
