#pragma once

#include <utility>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

/// Maximal groups of vertices with identical links. Two vertices with equal
/// links are automatically non-adjacent (a shared edge would put one of them
/// inside the other's link), so equal links are exactly the equivalence of
/// the symmetrization algorithms. Classes are listed by smallest member.
struct EquivalenceClasses {
  std::vector<VertexSet> classes;
  std::vector<int> class_of;  // index into classes, -1 for inactive vertices
};

EquivalenceClasses equivalence_classes(const Hypergraph& h);
EquivalenceClasses equivalence_classes(const Hypergraph& h, const VertexSet& active);

/// Strict partial order on vertex labels, grown by merged-class events and
/// never shrunk; queries restrict to any candidate subset.
class RemovalPoset {
 public:
  /// below ≺ above for every pair drawn from the two sets.
  void add_relations(const VertexSet& below, const VertexSet& above);

  /// a ≺ b.
  bool precedes(int a, int b) const;

  /// Smallest-label element of candidates with no smaller candidate below it.
  int minimal_element(const VertexSet& candidates) const;

  bool is_acyclic() const;

  const std::vector<std::pair<VertexSet, VertexSet>>& relations() const {
    return relations_;
  }

 private:
  std::vector<std::pair<VertexSet, VertexSet>> relations_;  // (below, above)
};

struct SymEvent {
  enum class Kind { InitialRemove, Symmetrize, CleanRemove };
  Kind kind;
  int step;            // 0 for the initial phase, then 1-based
  int vertex = -1;     // removals
  VertexSet class_from;  // symmetrize: the replaced class C_v
  VertexSet class_to;    // symmetrize: the absorbing class C_u
};

/// Full history of one symmetrization run. Replaying the events against the
/// stored input reproduces every intermediate hypergraph bit-exactly.
struct SymmetrizationTrace {
  Hypergraph input;
  int algorithm = 1;
  Rational alpha = Rational(0);      // cleaning threshold (algorithm 2)
  std::vector<SymEvent> events;
  std::vector<VertexSet> removed;    // Z_0, ..., Z_t
  VertexSet final_active;            // W
  Hypergraph final_graph;            // on the original labels, edges within W

  int steps() const { return static_cast<int>(removed.size()) - 1; }

  SymmetrizationTrace() : input(3, 0), final_graph(3, 0) {}
};

/// Symmetrization without cleaning: while some pair of non-adjacent,
/// non-equivalent vertices exists, replace the class of the lower-degree one
/// by duplicates of the higher-degree one (labels are reused). The pair
/// chosen is the one maximizing max(d(u), d(v)), ties by smaller then larger
/// label; equal degrees keep the smaller label as the absorbing vertex. The
/// class count strictly decreases, so this terminates.
SymmetrizationTrace symmetrize(const Hypergraph& h);

/// Symmetrization and cleaning with threshold alpha (an exact rational, so
/// the degree test 2 Q d >= P (v-1)(v-2) runs in integers). Cleaning removes
/// a poset-minimal minimum-degree vertex (smallest label on ties) until the
/// graph is edgeless or alpha-dense; symmetrization steps alternate with
/// cleaning phases and record v' ≺ u' for every replaced/absorbing pair.
SymmetrizationTrace symmetrize_and_clean(const Hypergraph& h, const Rational& alpha);

/// H_0, ..., H_t on the original labels together with the active vertex set
/// at each step boundary, reconstructed by replaying the events.
std::vector<std::pair<VertexSet, Hypergraph>> replay_states(const SymmetrizationTrace& trace);

/// The restrictions H_0[W], ..., H_t[W], relabeled consistently; W must be
/// the trace's final vertex set. Consecutive members are equal or differ by
/// one class replacement.
std::vector<Hypergraph> restrict_trace(const SymmetrizationTrace& trace, const VertexSet& w);

}  // namespace turan
