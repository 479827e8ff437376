#include "doctest.h"

#include <cmath>

#include "test_util.hpp"
#include "turan/constructions.hpp"
#include "turan/family_m.hpp"

using namespace turan;
using testutil::subsets;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("g1 layout and sizes") {
  Hypergraph g = make_g1(6);
  CHECK(g.size() == 12);  // 2 * C(4,2)
  CHECK(g1_bound(6) == 12);
  CHECK(make_g1(3).size() == 1);
  CHECK(g1_bound(3) == 1);

  // part A is the first floor(n/3) labels: every edge meets it exactly once
  for (const auto& e : g.edges()) {
    int in_a = 0;
    e.for_each([&](int v) { in_a += v < 2; });
    CHECK(in_a == 1);
  }

  // density approaches 2/27
  CHECK(std::abs(static_cast<double>(g1_bound(600)) / (600.0 * 600 * 600) - 2.0 / 27) < 0.001);
  CHECK_THROWS_AS(make_g1(2), std::invalid_argument);
}

TEST_CASE("g26 membership") {
  Hypergraph g = make_g26();
  CHECK(g.size() == 16);
  CHECK(!g.has_edge(VertexSet::of({0, 1, 2})));
  CHECK(g.has_edge(VertexSet::of({0, 2, 3})));
}

TEST_CASE("g2 blowups") {
  CHECK(make_g2(6) == make_g26());
  CHECK(make_g2(12).size() == 128);
  CHECK(g2_bound(6) == 16);
  CHECK(std::abs(static_cast<double>(g2_bound(600)) / (600.0 * 600 * 600) - 2.0 / 27) < 0.001);
  CHECK_THROWS_AS(make_g2(5), std::invalid_argument);
}

TEST_CASE("g2 maximality over all compositions") {
  // every blowup of the pattern with parts summing to n (zeros allowed, which
  // covers colorings that skip parts) has at most g2_bound(n) edges
  const Hypergraph pattern = make_g26();
  for (int n = 6; n <= 12; ++n) {
    long long best = 0;
    std::vector<int> parts(6, 0);
    // enumerate all nonnegative compositions of n into 6 parts
    auto rec = [&](auto&& self, int idx, int left) -> void {
      if (idx == 5) {
        parts[5] = left;
        long long count = 0;
        for (const auto& e : pattern.edges()) {
          long long prod = 1;
          e.for_each([&](int v) { prod *= parts[v]; });
          count += prod;
        }
        best = std::max(best, count);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        parts[idx] = v;
        self(self, idx + 1, left - v);
      }
    };
    rec(rec, 0, n);
    CHECK(best == g2_bound(n));
  }
}

TEST_CASE("generalized turan construction") {
  CHECK(make_turan(2, 4, 2).size() == 4);
  CHECK(make_turan(3, 6, 3).size() == 8);
  CHECK(make_turan(3, 6, 6).size() == 20);
  CHECK_THROWS_AS(make_turan(3, 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_turan(3, 2, 3), std::invalid_argument);
}

TEST_CASE("kostochka sizes") {
  for (int n = 3; n <= 18; n += 3)
    for (int m = 0; m <= n / 3; ++m)
      CHECK(make_kostochka({n, m}).size() ==
            static_cast<long long>(n) * (n - 3) * (2 * n - 3) / 27);

  CHECK(make_kostochka({6, 1}).size() == 6);
  CHECK(make_kostochka({9, 1}).size() == 30);
  CHECK_THROWS_AS(make_kostochka({7, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_kostochka({9, 4}), std::invalid_argument);
}

TEST_CASE("kostochka complements avoid complete 4-sets") {
  for (int n = 6; n <= 12; n += 3) {
    for (int m = 0; m <= n / 3; ++m) {
      Hypergraph comp = complement(make_kostochka({n, m}));
      for (const auto& s : subsets(n, 4)) {
        int inside = 0;
        for (const auto& e : comp.edges()) inside += s.contains(e);
        CHECK(inside < 4);
      }
    }
  }
}

TEST_CASE("fixed small constructions") {
  CHECK(make_k53_minus().size() == 9);
  CHECK(!make_k53_minus().has_edge(VertexSet::of({2, 3, 4})));

  Hypergraph f32 = make_f32();
  CHECK(f32.size() == 4);
  CHECK(f32.has_edge(VertexSet::of({0, 1, 2})));
  CHECK(f32.has_edge(VertexSet::of({0, 1, 3})));
  CHECK(f32.has_edge(VertexSet::of({0, 1, 4})));
  CHECK(f32.has_edge(VertexSet::of({2, 3, 4})));

  CHECK(make_full_star(6).size() == 10);
  CHECK(make_complete(5, 3).size() == 10);
}

TEST_CASE("extremal constructions are structured and M-free") {
  for (int n = 3; n <= 12; ++n) {
    Hypergraph g1 = make_g1(n);
    auto witness = semibipartite_witness(g1);
    REQUIRE(witness.has_value());
    CHECK(validate_witness(g1, *witness));
    CHECK(is_m_free(g1));
  }
  for (int n = 6; n <= 12; ++n) {
    Hypergraph g2 = make_g2(n);
    auto witness = g26_coloring(g2);
    REQUIRE(witness.has_value());
    CHECK(validate_witness(g2, *witness));
    CHECK(is_m_free(g2));
  }
}

TEST_SUITE_END();
