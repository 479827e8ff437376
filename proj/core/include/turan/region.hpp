#pragma once

#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

/// Exact shadow and edge densities of one hypergraph.
struct RegionPoint {
  Rational shadow_density;  // |shadow| / C(n, r-1)
  Rational edge_density;    // |edges| / C(n, r)
};

RegionPoint region_point(const Hypergraph& h);

/// Number of 4-sets inducing exactly three edges (the unique 3-graph with
/// four vertices and three edges, counted unlabeled). Parallel by range over
/// the 4-sets with a deterministic chunk-ordered sum.
long long count_induced_k43_minus(const Hypergraph& h);

/// Closed form for that count in the Kostochka graph G(n,m):
/// m^2 (n-3m)(n-3m-3)/6, equivalently 3 m^2 C(n/3-m, 2).
long long kostochka_k43_minus_count(int n, int m);

/// |count(h1) - count(h2)| / (n-3): a certified lower bound on the number of
/// edge edits between the two hypergraphs, since one edit moves the induced
/// count by at most n-3. Requires equal vertex counts, n >= 4.
Rational edit_distance_lower_bound(const Hypergraph& h1, const Hypergraph& h2);

/// Complements of G(n,m) for each m in ms; every member is K4-free as a
/// 3-graph (no 4-set carries all four triples), which is verified.
std::vector<Hypergraph> kostochka_complement_family(int n, const std::vector<int>& ms);

}  // namespace turan
