#pragma once

#include <array>

#include "turan/hypergraph.hpp"

namespace turan {

/// The semibipartite extremal 3-graph: part A = {0, ..., floor(n/3)-1},
/// part B = the remaining ceil(2n/3) labels, edges = all triples with one
/// vertex in A and two in B. Requires n >= 3.
Hypergraph make_g1(int n);

/// The 6-vertex 3-graph whose complement consists of the four triples
/// {0,1,2}, {0,1,5}, {2,3,4}, {3,4,5}; it has 16 of the 20 possible edges.
Hypergraph make_g26();

/// A maximum-edge blowup of make_g26() on n vertices. Parts are as balanced
/// as possible; which parts receive the ceil(n/6) extras is decided by
/// exhaustive search over all placements, ties resolved in favor of the
/// lexicographically first placement. Blocks appear in part order. n >= 6.
Hypergraph make_g2(int n);

/// Part sizes used by make_g2, in part order.
std::array<int, 6> g2_part_sizes(int n);

/// Generalized Turan construction: parts of size floor(n/l) or ceil(n/l)
/// (the first n mod l parts are larger, blocks consecutive), edges = all
/// r-sets with at most one vertex per part. Requires l >= r >= 2, n >= l.
Hypergraph make_turan(int r, int n, int l);

struct KostochkaSpec {
  int n;  // multiple of 3
  int m;  // 0 <= m <= n/3
};

/// Kostochka's 3-graph G(n,m). The ground set splits into three consecutive
/// groups V_1, V_2, V_3 of size n/3; within group j the first m labels form
/// the cell V_{1,j} and the rest form V_{2,j}. Edges are the union of the six
/// classes (indices cyclic in {1,2,3}):
///   1. triples inside one cell,
///   2. two in V_{1,j}, one in V_{2,j},
///   3. two in V_{1,j}, one in V_{j+1},
///   4. two in V_{2,j}, one in V_{1,j+1},
///   5. two in V_{2,j}, one in V_{j-1},
///   6. one in V_{1,j}, one in V_{2,j}, one in V_{j+1}.
/// |G(n,m)| = n(n-3)(2n-3)/27 for every valid m.
Hypergraph make_kostochka(const KostochkaSpec& spec);

/// Complete r-graph on l vertices.
Hypergraph make_complete(int l, int r);

/// Complete 3-graph on five vertices minus the lexicographically last triple
/// {2,3,4}.
Hypergraph make_k53_minus();

/// Five vertices, edges {0,1,2}, {0,1,3}, {0,1,4}, {2,3,4}.
Hypergraph make_f32();

/// All triples through vertex 0; C(n-1,2) edges. n >= 3.
Hypergraph make_full_star(int n);

/// Edge counts of make_g1 / make_g2 as closed forms, valid beyond the
/// materializable vertex range.
long long g1_bound(int n);
long long g2_bound(int n);

}  // namespace turan
