#include "doctest.h"

#include "test_util.hpp"
#include "turan/constructions.hpp"
#include "turan/family_m.hpp"
#include "turan/search.hpp"

using namespace turan;
using testutil::subsets;

TEST_SUITE_BEGIN("search");

namespace {

/// Exhaustive oracle over every edge subset on n vertices (only sane for
/// n <= 5, i.e. at most 2^10 subsets).
int exhaustive_max_m_free(int n) {
  auto triples = subsets(n, 3);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << triples.size()); ++mask) {
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (mask & (1u << i)) edges.push_back(triples[i]);
    int count = static_cast<int>(edges.size());
    if (count <= best) continue;
    if (is_m_free(Hypergraph::from_masks(3, n, std::move(edges)))) best = count;
  }
  return best;
}

}  // namespace

TEST_CASE("upper bound formula") {
  CHECK(turan_upper_bound(6) == Rational(16));
  CHECK(turan_upper_bound(3) == Rational(2));
  CHECK(turan_upper_bound(12) == Rational(128));
  CHECK(Rational(make_g2(12).size()) == turan_upper_bound(12));
}

TEST_CASE("small exact values against the exhaustive oracle") {
  CHECK(exhaustive_max_m_free(4) == 4);
  CHECK(exhaustive_max_m_free(5) == 8);

  for (int n = 3; n <= 5; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    SearchResult result = max_free_edges(cfg);
    CHECK(result.optimal);
    CHECK(result.max_edges == (n == 3 ? 1 : n == 4 ? 4 : 8));
    CHECK(!find_m_violation(result.witness).has_value());
    CHECK(Rational(result.max_edges) <= turan_upper_bound(n));
  }

  // the complete 4-graph is M-free (every family member needs >= 5 vertices)
  CHECK(is_m_free(make_complete(4, 3)));
}

TEST_CASE("turan number at six vertices") {
  SearchConfig cfg;
  cfg.n = 6;
  SearchResult result = max_free_edges(cfg);
  CHECK(result.max_edges == 16);
  CHECK(result.optimal);
  CHECK(!find_m_violation(result.witness).has_value());
  const Hypergraph g26 = make_g26();
  CHECK(contains_subgraph(result.witness, g26).has_value());
  CHECK(contains_subgraph(g26, result.witness).has_value());
}

TEST_CASE("monotone in the vertex count") {
  int prev = 0;
  for (int n = 3; n <= 6; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    int value = max_free_edges(cfg).max_edges;
    CHECK(value >= prev);
    prev = value;
  }
}

TEST_CASE("custom forbidden families") {
  SearchConfig cfg;
  cfg.n = 5;
  cfg.custom_forbidden = {make_k53_minus()};
  CHECK(max_free_edges(cfg).max_edges == 8);

  // forbidding a single triple forces the empty graph
  cfg.custom_forbidden = {Hypergraph::from_edges(3, 3, {{0, 1, 2}})};
  SearchResult empty = max_free_edges(cfg);
  CHECK(empty.max_edges == 0);
  CHECK(empty.witness.size() == 0);

  // results are invariant under relabeling the forbidden pattern
  Hypergraph f32 = make_f32();
  Hypergraph relabeled =
      Hypergraph::from_edges(3, 5, {{2, 3, 4}, {1, 3, 4}, {0, 3, 4}, {0, 1, 2}});
  SearchConfig a;
  a.n = 5;
  a.custom_forbidden = {f32};
  SearchConfig b;
  b.n = 5;
  b.custom_forbidden = {relabeled};
  CHECK(max_free_edges(a).max_edges == max_free_edges(b).max_edges);
}

TEST_CASE("symmetry pruning changes nothing but the node count") {
  for (int n = 4; n <= 5; ++n) {
    SearchConfig with;
    with.n = n;
    SearchConfig without;
    without.n = n;
    without.symmetry_pruning = false;
    SearchResult rw = max_free_edges(with);
    SearchResult ro = max_free_edges(without);
    CHECK(rw.max_edges == ro.max_edges);
    CHECK(rw.nodes_expanded <= ro.nodes_expanded);
  }
}

TEST_CASE("node budgets surrender gracefully") {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.node_budget = 50;
  SearchResult result = max_free_edges(cfg);
  CHECK(!result.optimal);
  CHECK(result.max_edges <= 16);
  CHECK(!find_m_violation(result.witness).has_value());
}

TEST_CASE("config validation") {
  SearchConfig cfg;
  cfg.n = 11;
  CHECK_THROWS_AS(max_free_edges(cfg), std::invalid_argument);
  cfg.n = -1;
  CHECK_THROWS_AS(max_free_edges(cfg), std::invalid_argument);
}

TEST_SUITE_END();
