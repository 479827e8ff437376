#include "doctest.h"

#include <algorithm>

#include "turan/constructions.hpp"
#include "turan/family_m.hpp"
#include "turan/random.hpp"
#include "turan/symmetrize.hpp"

using namespace turan;

TEST_SUITE_BEGIN("symmetrize");

namespace {

/// Rebuilds the final hypergraph as a blowup of its class representatives and
/// compares edge sets through the class/block label bijection.
bool final_is_class_blowup(const SymmetrizationTrace& trace) {
  EquivalenceClasses classes =
      equivalence_classes(trace.final_graph, trace.final_active);
  VertexSet reps;
  BlowupSpec spec;
  for (const auto& c : classes.classes) {
    reps.set(c.lowest());
    spec.part_sizes.push_back(c.count());
  }
  Hypergraph pattern = induced_subgraph(trace.final_graph, reps);
  Hypergraph rebuilt = blowup(pattern, spec);

  // block i of the blowup corresponds to class i, members in label order
  std::vector<int> to_original;
  for (const auto& c : classes.classes)
    for (int v : c.to_vector()) to_original.push_back(v);

  std::vector<VertexSet> mapped;
  for (const auto& e : rebuilt.edges()) {
    VertexSet m;
    e.for_each([&](int v) { m.set(to_original[v]); });
    mapped.push_back(m);
  }
  Hypergraph remapped =
      Hypergraph::from_masks(3, trace.final_graph.vertex_count(), std::move(mapped));
  return remapped == trace.final_graph;
}

}  // namespace

TEST_CASE("equivalence classes") {
  Hypergraph edge = Hypergraph::from_edges(3, 3, {{0, 1, 2}});
  EquivalenceClasses tripled = equivalence_classes(blowup(edge, {{2, 2, 2}}));
  CHECK(tripled.classes.size() == 3);
  for (const auto& c : tripled.classes) CHECK(c.count() == 2);

  EquivalenceClasses k4 = equivalence_classes(make_complete(4, 3));
  CHECK(k4.classes.size() == 4);

  EquivalenceClasses empty = equivalence_classes(Hypergraph(3, 5));
  CHECK(empty.classes.size() == 1);
  CHECK(empty.classes[0].count() == 5);
}

TEST_CASE("plain symmetrization on already-symmetric inputs") {
  Hypergraph b = blowup(make_g26(), {{2, 1, 2, 1, 1, 2}});
  SymmetrizationTrace trace = symmetrize(b);
  CHECK(trace.steps() == 0);
  CHECK(trace.final_graph == b);

  SymmetrizationTrace g19 = symmetrize(make_g1(9));
  CHECK(g19.final_graph.size() >= make_g1(9).size());
}

TEST_CASE("plain symmetrization contracts on random inputs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 5 + static_cast<int>(seed % 5);
    Hypergraph h = random_hypergraph(n, 3, 0.25 + 0.1 * (seed % 4), seed * 101);
    int initial_classes = static_cast<int>(equivalence_classes(h).classes.size());
    SymmetrizationTrace trace = symmetrize(h);

    CHECK(trace.final_graph.size() >= h.size());
    CHECK(trace.steps() <= initial_classes);

    EquivalenceClasses classes = equivalence_classes(trace.final_graph, trace.final_active);
    VertexSet reps;
    for (const auto& c : classes.classes) reps.set(c.lowest());
    CHECK(is_two_covered(induced_subgraph(trace.final_graph, reps)));
    CHECK(final_is_class_blowup(trace));

    // replay reproduces the final graph bit-exactly
    auto states = replay_states(trace);
    CHECK(states.back().second == trace.final_graph);
    CHECK(states.back().first == trace.final_active);

    if (is_m_free(h))
      for (const auto& [active, state] : states) {
        (void)active;
        CHECK(is_m_free(state));
      }
  }
}

TEST_CASE("cleaning keeps the semibipartite construction intact") {
  // alpha = 4/9 - 3 sqrt(0.01) = 13/90
  Hypergraph g1 = make_g1(12);
  SymmetrizationTrace trace = symmetrize_and_clean(g1, Rational(13, 90));
  CHECK(trace.final_graph == g1);
  for (const auto& z : trace.removed) CHECK(z.empty());
  CHECK(semibipartite_witness(trace.final_graph).has_value());
}

TEST_CASE("cleaning with threshold zero never removes vertices") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Hypergraph h = random_hypergraph(7, 3, 0.3, seed * 911);
    SymmetrizationTrace plain = symmetrize(h);
    SymmetrizationTrace cleaned = symmetrize_and_clean(h, Rational(0));
    CHECK(cleaned.final_graph == plain.final_graph);
    CHECK(cleaned.final_active == plain.final_active);
    for (const auto& z : cleaned.removed) CHECK(z.empty());
  }
}

TEST_CASE("cleaning cascade on the complete 4-graph minus an edge") {
  Hypergraph k4 = make_complete(4, 3);
  std::vector<VertexSet> edges(k4.edges().begin(), k4.edges().end());
  edges.pop_back();  // drop {1,2,3}
  Hypergraph h = Hypergraph::from_masks(3, 4, edges);

  SymmetrizationTrace trace = symmetrize_and_clean(h, Rational(1));
  // vertex 1 is the smallest minimum-degree vertex; after it goes the single
  // remaining edge {0,2,3} on three vertices meets the threshold since
  // C(2,2) = 1
  CHECK(trace.removed[0] == VertexSet::single(1));
  CHECK(trace.final_active == VertexSet::of({0, 2, 3}));
  REQUIRE(trace.final_graph.size() == 1);
  CHECK(trace.final_graph.edges()[0] == VertexSet::of({0, 2, 3}));
}

TEST_CASE("cleaning output contracts") {
  const Rational alphas[] = {Rational(0), Rational(1, 3), Rational(4, 9), Rational(1)};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int n = 6 + static_cast<int>(seed % 4);
    Hypergraph h = random_hypergraph(n, 3, 0.3 + 0.1 * (seed % 3), seed * 733);
    const Rational& alpha = alphas[seed % 4];
    SymmetrizationTrace trace = symmetrize_and_clean(h, alpha);

    const Hypergraph& out = trace.final_graph;
    if (out.size() > 0) {
      long long v = trace.final_active.count();
      long long delta = -1;
      trace.final_active.for_each([&](int u) {
        long long d = degree(out, u);
        if (delta < 0 || d < delta) delta = d;
      });
      CHECK(2 * alpha.denominator() * delta >= alpha.numerator() * (v - 1) * (v - 2));
      // no non-adjacent non-equivalent pair: classes of equal links partition
      // the active set; distinct classes must be adjacent everywhere
      EquivalenceClasses classes = equivalence_classes(out, trace.final_active);
      auto verts = trace.final_active.to_vector();
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
          if (classes.class_of[verts[i]] != classes.class_of[verts[j]])
            CHECK(adjacent(out, verts[i], verts[j]));
    }
    // event count cap: n removals plus classes * n symmetrizations
    long long initial_classes = static_cast<long long>(equivalence_classes(h).classes.size());
    CHECK(static_cast<long long>(trace.events.size()) <= n + initial_classes * n);

    auto states = replay_states(trace);
    CHECK(states.back().second == trace.final_graph);
  }
}

TEST_CASE("removal poset") {
  RemovalPoset poset;
  poset.add_relations(VertexSet::of({0, 1}), VertexSet::of({2}));
  poset.add_relations(VertexSet::of({2}), VertexSet::of({3, 4}));
  CHECK(poset.precedes(0, 2));
  CHECK(poset.precedes(0, 3));  // transitive through 2
  CHECK(poset.precedes(2, 4));
  CHECK(!poset.precedes(3, 0));
  CHECK(!poset.precedes(0, 1));
  CHECK(poset.is_acyclic());

  CHECK(poset.minimal_element(VertexSet::of({2, 3, 4})) == 2);
  CHECK(poset.minimal_element(VertexSet::of({0, 2, 3})) == 0);
  CHECK(poset.minimal_element(VertexSet::of({3, 4})) == 3);  // incomparable, smallest label
}

TEST_CASE("restricted trace dichotomy") {
  // zero-step trace restricts to a single member
  {
    Hypergraph b = blowup(make_g26(), {{1, 1, 2, 1, 1, 1}});
    SymmetrizationTrace trace = symmetrize(b);
    auto restricted = restrict_trace(trace, trace.final_active);
    CHECK(restricted.size() == 1);
    CHECK(restricted[0] == induced_subgraph(b, trace.final_active));
  }

  CHECK_THROWS_AS(restrict_trace(symmetrize(make_g26()), VertexSet::of({0, 1})),
                  std::invalid_argument);

  // consecutive members are equal or differ by one class replacement
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    int n = 6 + static_cast<int>(seed % 4);
    Hypergraph h = random_hypergraph(n, 3, 0.35, seed * 397);
    SymmetrizationTrace trace = symmetrize_and_clean(h, Rational(1, 3));
    auto restricted = restrict_trace(trace, trace.final_active);
    REQUIRE(static_cast<int>(restricted.size()) == trace.steps() + 1);
    for (std::size_t i = 1; i < restricted.size(); ++i) {
      if (restricted[i] == restricted[i - 1]) continue;
      // locate this step's symmetrize event and replay the replacement on the
      // restricted graph
      const SymEvent* ev = nullptr;
      for (const auto& e : trace.events)
        if (e.step == static_cast<int>(i) && e.kind == SymEvent::Kind::Symmetrize) ev = &e;
      REQUIRE(ev != nullptr);
      VertexSet from = ev->class_from & trace.final_active;
      VertexSet to = ev->class_to & trace.final_active;
      CHECK(!from.empty());
      CHECK(ev->class_to == to);  // absorbing class survives whole

      // relabel into the restricted index space
      std::vector<int> relabel(h.vertex_count(), -1);
      int next = 0;
      trace.final_active.for_each([&](int v) { relabel[v] = next++; });
      const Hypergraph& prev = restricted[i - 1];
      std::vector<VertexSet> edges;
      VertexSet from_r, to_r;
      from.for_each([&](int v) { from_r.set(relabel[v]); });
      to.for_each([&](int v) { to_r.set(relabel[v]); });
      int absorb = to_r.lowest();
      std::vector<VertexSet> absorb_link;
      for (const auto& e : prev.edges()) {
        if (!e.intersects(from_r)) {
          edges.push_back(e);
          if (e.test(absorb)) {
            VertexSet rest = e;
            rest.reset(absorb);
            absorb_link.push_back(rest);
          }
        }
      }
      from_r.for_each([&](int v) {
        for (const auto& rest : absorb_link) {
          VertexSet e = rest;
          e.set(v);
          edges.push_back(e);
        }
      });
      CHECK(Hypergraph::from_masks(3, prev.vertex_count(), edges) == restricted[i]);
    }
  }
}

TEST_SUITE_END();
