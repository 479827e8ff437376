#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "test_util.hpp"
#include "turan/constructions.hpp"
#include "turan/edge_list.hpp"
#include "turan/hypergraph.hpp"
#include "turan/random.hpp"

using namespace turan;
using testutil::subsets;

TEST_SUITE_BEGIN("core");

namespace {

/// Independent construction of the 6-vertex pattern straight from its
/// complement triples, used as the oracle against make_g26().
Hypergraph g26_oracle() {
  std::vector<VertexSet> missing = {VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 5}),
                                    VertexSet::of({2, 3, 4}), VertexSet::of({3, 4, 5})};
  std::vector<VertexSet> edges;
  for (const auto& t : subsets(6, 3))
    if (std::find(missing.begin(), missing.end(), t) == missing.end()) edges.push_back(t);
  return Hypergraph::from_masks(3, 6, std::move(edges));
}

}  // namespace

TEST_CASE("shadow basics") {
  CHECK(shadow(Hypergraph(3, 5)).size() == 0);

  Hypergraph single = Hypergraph::from_edges(3, 3, {{0, 1, 2}});
  Hypergraph sh = shadow(single);
  CHECK(sh.uniformity() == 2);
  CHECK(sh.size() == 3);
  CHECK(sh.has_edge(VertexSet::of({0, 1})));
  CHECK(sh.has_edge(VertexSet::of({0, 2})));
  CHECK(sh.has_edge(VertexSet::of({1, 2})));

  // the 16 edges of the pattern cover every pair on six vertices
  Hypergraph oracle = g26_oracle();
  CHECK(make_g26() == oracle);
  CHECK(shadow(oracle).size() == 15);
}

TEST_CASE("link and degrees") {
  const Hypergraph g26 = make_g26();
  for (int v = 0; v < 6; ++v) CHECK(degree(g26, v) == 8);
  CHECK(min_degree(g26) == 8);

  Hypergraph single = Hypergraph::from_edges(3, 4, {{0, 1, 2}});
  Hypergraph l0 = link(single, 0);
  CHECK(l0.size() == 1);
  CHECK(l0.has_edge(VertexSet::of({1, 2})));
  CHECK(link(single, 3).size() == 0);  // isolated vertex

  CHECK_THROWS_AS(link(single, 4), std::out_of_range);
}

TEST_CASE("degree sum property") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Hypergraph h = random_hypergraph(7, 3, 0.4, seed);
    long long total = 0;
    for (int v = 0; v < 7; ++v) total += degree(h, v);
    CHECK(total == 3 * h.size());
    // every link is part of the shadow
    Hypergraph sh = shadow(h);
    for (int v = 0; v < 7; ++v) {
      Hypergraph lv = link(h, v);
      for (const auto& e : lv.edges()) CHECK(sh.has_edge(e));
    }
  }
}

TEST_CASE("transversal number") {
  CHECK(transversal_number(Hypergraph(3, 5)) == 0);
  Hypergraph disjoint = Hypergraph::from_edges(3, 6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(transversal_number(disjoint) == 2);
  CHECK(transversal_number(make_complete(4, 3)) == testutil::transversal_oracle(make_complete(4, 3)));
  CHECK(transversal_number(make_complete(4, 3)) == 2);

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Hypergraph h = random_hypergraph(6 + seed % 3, 3, 0.35, seed * 7);
    CHECK(transversal_number(h) == testutil::transversal_oracle(h));
  }
}

TEST_CASE("neighborhood") {
  Hypergraph h = Hypergraph::from_edges(3, 4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(neighborhood(h, VertexSet::of({0})) == VertexSet::of({1, 2, 3}));
  CHECK(neighborhood(h, VertexSet::of({0, 1})) == VertexSet::of({2, 3}));
  CHECK(neighborhood(h, VertexSet::of({2, 3})) == VertexSet{});
  CHECK(adjacent(h, 0, 2));
  CHECK(!adjacent(h, 2, 3));
}

TEST_CASE("induced subgraph") {
  const Hypergraph g26 = make_g26();
  CHECK(induced_subgraph(g26, VertexSet::first_n(6)) == g26);
  CHECK(induced_subgraph(g26, VertexSet{}).vertex_count() == 0);

  // complement triples inside {0..4}: {0,1,2} and {2,3,4}, so 10 - 2 = 8 edges
  Hypergraph sub = induced_subgraph(g26, VertexSet::first_n(5));
  CHECK(sub.size() == 8);
}

TEST_CASE("complement") {
  CHECK(complement(Hypergraph(3, 6)).size() == 20);
  Hypergraph co = complement(make_g26());
  CHECK(co.size() == 4);
  CHECK(co.has_edge(VertexSet::of({0, 1, 2})));
  CHECK(co.has_edge(VertexSet::of({0, 1, 5})));
  CHECK(co.has_edge(VertexSet::of({2, 3, 4})));
  CHECK(co.has_edge(VertexSet::of({3, 4, 5})));
  CHECK(complement(co) == make_g26());
  CHECK(complement(make_complete(4, 3)).size() == 0);
}

TEST_CASE("blowup") {
  Hypergraph edge = Hypergraph::from_edges(3, 3, {{0, 1, 2}});
  Hypergraph doubled = blowup(edge, {{2, 2, 2}});
  CHECK(doubled.size() == 8);
  CHECK(doubled.vertex_count() == 6);

  const Hypergraph g26 = make_g26();
  CHECK(blowup(g26, {{1, 1, 1, 1, 1, 1}}) == g26);
  CHECK(blowup(g26, {{2, 2, 2, 2, 2, 2}}).size() == 16 * 8);

  CHECK_THROWS_AS(blowup(edge, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(blowup(edge, {{2, 0, 2}}), std::invalid_argument);
}

TEST_CASE("blowup identity in exact arithmetic") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Hypergraph t = random_hypergraph(5, 3, 0.5, seed);
    BlowupSpec spec;
    spec.part_sizes = {1 + static_cast<int>(seed % 3), 2, 1, 3, 1 + static_cast<int>(seed % 2)};
    long long n = 0;
    for (int s : spec.part_sizes) n += s;
    std::vector<Rational> x;
    for (int s : spec.part_sizes) x.emplace_back(s, n);
    Rational scaled = weight_polynomial(t, x) * Rational(n * n * n);
    CHECK(scaled == Rational(blowup_size(t, spec)));
    CHECK(blowup_size(t, spec) == blowup(t, spec).size());
  }
}

TEST_CASE("subgraph containment") {
  CHECK(contains_subgraph(make_k53_minus(), make_complete(5, 3)).has_value());
  CHECK(contains_subgraph(make_complete(4, 3), make_g1(9)) == std::nullopt);

  // oracle: no 4-set of g1(9) carries all four triples
  Hypergraph g19 = make_g1(9);
  for (const auto& s : subsets(9, 4)) {
    int inside = 0;
    for (const auto& e : g19.edges()) inside += s.contains(e);
    CHECK(inside < 4);
  }

  Hypergraph f = make_f32();
  auto self_map = contains_subgraph(f, f);
  REQUIRE(self_map.has_value());
  for (const auto& e : f.edges()) {
    VertexSet image;
    e.for_each([&](int v) { image.set((*self_map)[v]); });
    CHECK(f.has_edge(image));
  }
}

TEST_CASE("homomorphisms") {
  Hypergraph single = Hypergraph::from_edges(3, 3, {{0, 1, 2}});
  CHECK(homomorphism(single, make_g26()).has_value());

  // no map from the complete 4-graph onto a single-edge pattern: exhaustive oracle
  Hypergraph k4 = make_complete(4, 3);
  CHECK(homomorphism(k4, single) == std::nullopt);
  {
    bool any = false;
    for (int code = 0; code < 81 && !any; ++code) {
      int f[4] = {code % 3, code / 3 % 3, code / 9 % 3, code / 27 % 3};
      bool ok = true;
      for (const auto& e : k4.edges()) {
        VertexSet image;
        e.for_each([&](int v) { image.set(f[v]); });
        if (image.count() != 3 || !single.has_edge(image)) {
          ok = false;
          break;
        }
      }
      any = ok;
    }
    CHECK(!any);
  }

  CHECK(homomorphism(make_f32(), make_f32()).has_value());

  // containment implies homomorphism
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Hypergraph pattern = random_hypergraph(4, 3, 0.5, seed);
    Hypergraph host = random_hypergraph(6, 3, 0.5, seed + 100);
    if (contains_subgraph(pattern, host)) CHECK(homomorphism(pattern, host).has_value());
  }
}

TEST_CASE("homomorphism matches blowup containment for 2-covered patterns") {
  const Hypergraph k4 = make_complete(4, 3);  // 2-covered
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Hypergraph host = random_hypergraph(5, 3, 0.55, seed * 13);
    BlowupSpec spec;
    spec.part_sizes.assign(5, 4);
    bool hom = homomorphism(k4, host).has_value();
    bool contained = contains_subgraph(k4, blowup(host, spec)).has_value();
    CHECK(hom == contained);
  }
}

TEST_CASE("two-covered and stars") {
  CHECK(is_two_covered(make_g26()));
  CHECK(is_two_covered(make_k53_minus()));
  CHECK(!is_two_covered(Hypergraph::from_edges(3, 4, {{0, 1, 2}})));

  CHECK(star_center(Hypergraph::from_edges(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})) == 0);
  CHECK(star_center(Hypergraph::from_edges(3, 6, {{0, 1, 2}, {3, 4, 5}})) == std::nullopt);
  CHECK(star_center(make_full_star(6)) == 0);
  CHECK(star_center(Hypergraph(3, 4)) == 0);   // edgeless, n >= 1
  CHECK(star_center(Hypergraph(3, 0)) == std::nullopt);
}

TEST_CASE("weight polynomial") {
  const Hypergraph k4 = make_complete(4, 3);
  CHECK(weight_polynomial(k4, SimplexPoint{0.25, 0.25, 0.25, 0.25}) == doctest::Approx(1.0 / 16).epsilon(1e-12));

  const Hypergraph g26 = make_g26();
  SimplexPoint uniform(6, 1.0 / 6);
  CHECK(weight_polynomial(g26, uniform) == doctest::Approx(2.0 / 27).epsilon(1e-12));

  SimplexPoint basis(6, 0.0);
  basis[2] = 1.0;
  CHECK(weight_polynomial(g26, basis) == 0.0);

  CHECK_THROWS_AS(weight_polynomial(k4, SimplexPoint{0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(weight_polynomial(k4, SimplexPoint{0.5, 0.6, -0.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(weight_polynomial(k4, SimplexPoint{0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Hypergraph h = random_hypergraph(8, 3, 0.3, seed * 31);
    CHECK(parse_edge_list(to_edge_list(h)) == h);
  }
  Hypergraph g2 = make_g2(9);
  CHECK(parse_edge_list(to_edge_list(g2)) == g2);
}

TEST_CASE("edge list parsing errors carry line numbers") {
  auto parse = [](const std::string& text) { return parse_edge_list(text); };

  CHECK(parse("# comment\n3 4\n0 1 2\n").size() == 1);
  CHECK(parse("3 4\n\n0 1 3\n").size() == 1);

  CHECK_THROWS_WITH_AS(parse("3 4\n0 1\n"), doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 4\n0 2 1\n"), doctest::Contains("strictly increasing"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 4\n0 1 2\n0 1 2\n"), doctest::Contains("duplicate"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 4\n0 1 9\n"), doctest::Contains("out of range"),
                       std::runtime_error);
  CHECK_THROWS_AS(parse(""), std::runtime_error);
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph::from_edges(3, 4, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_edges(3, 3, {{0, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, -1), std::invalid_argument);
  // duplicates collapse silently when building from sets
  CHECK(Hypergraph::from_edges(3, 4, {{0, 1, 2}, {2, 1, 0}}).size() == 1);
}

TEST_SUITE_END();
