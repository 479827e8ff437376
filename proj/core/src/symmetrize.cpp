#include "turan/symmetrize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace turan {

namespace {

void require_3graph(const Hypergraph& h, const char* op) {
  if (h.uniformity() != 3)
    throw std::invalid_argument(std::string(op) + " expects a 3-uniform hypergraph");
}

/// Working state shared by both algorithms: an edge set over the original
/// labels plus the surviving vertex set.
struct SymState {
  int n;
  VertexSet active;
  std::vector<VertexSet> edges;  // canonical order, all inside active

  std::vector<long long> degrees() const {
    std::vector<long long> deg(n, -1);
    active.for_each([&](int v) { deg[v] = 0; });
    for (const auto& e : edges) e.for_each([&](int v) { ++deg[v]; });
    return deg;
  }

  void remove_vertex(int v) {
    active.reset(v);
    std::vector<VertexSet> kept;
    kept.reserve(edges.size());
    for (const auto& e : edges)
      if (!e.test(v)) kept.push_back(e);
    edges = std::move(kept);
  }

  Hypergraph to_hypergraph(int uniformity) const {
    return Hypergraph::from_masks(uniformity, n, edges);
  }
};

/// Link of every active vertex as a sorted list of co-edge masks.
std::vector<std::vector<VertexSet>> active_links(const SymState& st) {
  std::vector<std::vector<VertexSet>> links(st.n);
  for (const auto& e : st.edges) {
    e.for_each([&](int v) {
      VertexSet rest = e;
      rest.reset(v);
      links[v].push_back(rest);
    });
  }
  // edges arrive in canonical order, so each link list is already sorted
  return links;
}

EquivalenceClasses classes_for(const SymState& st) {
  auto links = active_links(st);
  EquivalenceClasses out;
  out.class_of.assign(st.n, -1);
  std::map<std::vector<VertexSet>, int, bool (*)(const std::vector<VertexSet>&,
                                                 const std::vector<VertexSet>&)>
      index([](const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            VertexSetLexLess{});
      });
  st.active.for_each([&](int v) {
    auto [it, inserted] = index.try_emplace(links[v], static_cast<int>(out.classes.size()));
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].set(v);
    out.class_of[v] = it->second;
  });
  // reorder classes by smallest member for reproducible reporting
  std::vector<int> order(out.classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return out.classes[a].lowest() < out.classes[b].lowest();
  });
  std::vector<VertexSet> sorted;
  std::vector<int> position(out.classes.size());
  for (int idx : order) {
    position[idx] = static_cast<int>(sorted.size());
    sorted.push_back(out.classes[idx]);
  }
  for (auto& c : out.class_of)
    if (c >= 0) c = position[c];
  out.classes = std::move(sorted);
  return out;
}

/// Adjacency over active vertices.
std::vector<VertexSet> adjacency_of(const SymState& st) {
  std::vector<VertexSet> adj(st.n);
  for (const auto& e : st.edges) {
    e.for_each([&](int v) {
      adj[v] |= e;
      adj[v].reset(v);
    });
  }
  return adj;
}

struct PairChoice {
  int absorb;   // u, keeps its class
  int replace;  // v, class gets overwritten
};

/// The non-adjacent non-equivalent pair to symmetrize next, or nullopt.
/// Rule: maximize max(d(x), d(y)); ties by smaller then larger label.
std::optional<PairChoice> select_pair(const SymState& st, const EquivalenceClasses& classes) {
  auto deg = st.degrees();
  auto adj = adjacency_of(st);
  auto verts = st.active.to_vector();
  long long best_key = -1;
  int best_x = -1, best_y = -1;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      int x = verts[i], y = verts[j];
      if (classes.class_of[x] == classes.class_of[y]) continue;
      if (adj[x].test(y)) continue;
      long long key = std::max(deg[x], deg[y]);
      if (key > best_key) {
        best_key = key;
        best_x = x;
        best_y = y;
      }
    }
  }
  if (best_x < 0) return std::nullopt;
  // the higher-degree endpoint absorbs; equal degrees keep the smaller label
  if (deg[best_x] > deg[best_y]) return PairChoice{best_x, best_y};
  if (deg[best_y] > deg[best_x]) return PairChoice{best_y, best_x};
  return PairChoice{best_x, best_y};
}

/// Replaces every vertex of class_from by a duplicate of `absorb`, reusing
/// the removed labels.
void apply_symmetrize(SymState& st, const VertexSet& class_from, int absorb) {
  std::vector<VertexSet> out;
  out.reserve(st.edges.size());
  std::vector<VertexSet> absorb_link;
  for (const auto& e : st.edges) {
    if (!e.intersects(class_from)) {
      out.push_back(e);
      if (e.test(absorb)) {
        VertexSet rest = e;
        rest.reset(absorb);
        absorb_link.push_back(rest);
      }
    }
  }
  class_from.for_each([&](int v) {
    for (const auto& rest : absorb_link) {
      VertexSet e = rest;
      e.set(v);
      out.push_back(e);
    }
  });
  std::sort(out.begin(), out.end(), VertexSetLexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  st.edges = std::move(out);
}

/// 2 Q delta >= P (v-1)(v-2), the alpha-density test in exact integers.
bool alpha_dense(const SymState& st, const Rational& alpha) {
  if (st.edges.empty()) return true;
  long long v = st.active.count();
  auto deg = st.degrees();
  long long delta = -1;
  st.active.for_each([&](int u) {
    if (delta < 0 || deg[u] < delta) delta = deg[u];
  });
  const long long p = alpha.numerator(), q = alpha.denominator();
  return 2 * q * delta >= p * (v - 1) * (v - 2);
}

int min_degree_vertex_smallest(const SymState& st) {
  auto deg = st.degrees();
  int best = -1;
  long long best_deg = -1;
  st.active.for_each([&](int v) {
    if (best < 0 || deg[v] < best_deg) {
      best = v;
      best_deg = deg[v];
    }
  });
  return best;
}

}  // namespace

EquivalenceClasses equivalence_classes(const Hypergraph& h) {
  return equivalence_classes(h, VertexSet::first_n(h.vertex_count()));
}

EquivalenceClasses equivalence_classes(const Hypergraph& h, const VertexSet& active) {
  SymState st{h.vertex_count(), active, h.edges()};
  return classes_for(st);
}

void RemovalPoset::add_relations(const VertexSet& below, const VertexSet& above) {
  relations_.emplace_back(below, above);
}

bool RemovalPoset::precedes(int a, int b) const {
  // reachability over the relation DAG
  VertexSet reached = VertexSet::single(a);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [below, above] : relations_) {
      if (below.intersects(reached) && !reached.contains(above)) {
        reached |= above;
        grew = true;
      }
    }
  }
  return a != b && reached.test(b);
}

int RemovalPoset::minimal_element(const VertexSet& candidates) const {
  int best = -1;
  candidates.for_each([&](int z) {
    if (best >= 0) return;
    bool minimal = true;
    candidates.for_each([&](int y) {
      if (minimal && y != z && precedes(y, z)) minimal = false;
    });
    if (minimal) best = z;
  });
  return best;
}

bool RemovalPoset::is_acyclic() const {
  VertexSet ground;
  for (const auto& [below, above] : relations_) {
    ground |= below;
    ground |= above;
  }
  bool ok = true;
  ground.for_each([&](int v) {
    if (ok && precedes(v, v)) ok = false;
  });
  return ok;
}

SymmetrizationTrace symmetrize(const Hypergraph& h) {
  require_3graph(h, "symmetrize");
  SymmetrizationTrace trace;
  trace.input = h;
  trace.algorithm = 1;
  trace.removed.push_back(VertexSet{});  // Z_0

  SymState st{h.vertex_count(), VertexSet::first_n(h.vertex_count()), h.edges()};
  int step = 0;
  while (true) {
    EquivalenceClasses classes = classes_for(st);
    auto pair = select_pair(st, classes);
    if (!pair) break;
    ++step;
    SymEvent ev;
    ev.kind = SymEvent::Kind::Symmetrize;
    ev.step = step;
    ev.class_from = classes.classes[classes.class_of[pair->replace]];
    ev.class_to = classes.classes[classes.class_of[pair->absorb]];
    trace.events.push_back(ev);
    trace.removed.push_back(VertexSet{});
    apply_symmetrize(st, ev.class_from, pair->absorb);
  }
  trace.final_active = st.active;
  trace.final_graph = st.to_hypergraph(h.uniformity());
  return trace;
}

SymmetrizationTrace symmetrize_and_clean(const Hypergraph& h, const Rational& alpha) {
  require_3graph(h, "symmetrize_and_clean");
  if (alpha < Rational(0) || alpha > Rational(1))
    throw std::invalid_argument("alpha must lie in [0, 1]");

  SymmetrizationTrace trace;
  trace.input = h;
  trace.algorithm = 2;
  trace.alpha = alpha;

  SymState st{h.vertex_count(), VertexSet::first_n(h.vertex_count()), h.edges()};

  // initial cleaning
  VertexSet z0;
  while (!st.edges.empty() && !alpha_dense(st, alpha)) {
    int z = min_degree_vertex_smallest(st);
    SymEvent ev;
    ev.kind = SymEvent::Kind::InitialRemove;
    ev.step = 0;
    ev.vertex = z;
    trace.events.push_back(ev);
    z0.set(z);
    st.remove_vertex(z);
  }
  trace.removed.push_back(z0);

  RemovalPoset poset;
  int step = 0;
  while (true) {
    if (st.edges.empty()) break;
    EquivalenceClasses classes = classes_for(st);
    auto pair = select_pair(st, classes);
    if (!pair && alpha_dense(st, alpha)) break;
    ++step;

    if (pair) {
      SymEvent ev;
      ev.kind = SymEvent::Kind::Symmetrize;
      ev.step = step;
      ev.class_from = classes.classes[classes.class_of[pair->replace]];
      ev.class_to = classes.classes[classes.class_of[pair->absorb]];
      trace.events.push_back(ev);
      apply_symmetrize(st, ev.class_from, pair->absorb);
      poset.add_relations(ev.class_from, ev.class_to);
    }

    VertexSet zi;
    while (!st.edges.empty() && !alpha_dense(st, alpha)) {
      auto deg = st.degrees();
      long long delta = -1;
      st.active.for_each([&](int v) {
        if (delta < 0 || deg[v] < delta) delta = deg[v];
      });
      VertexSet b;
      st.active.for_each([&](int v) {
        if (deg[v] == delta) b.set(v);
      });
      int z = poset.minimal_element(b);
      SymEvent ev;
      ev.kind = SymEvent::Kind::CleanRemove;
      ev.step = step;
      ev.vertex = z;
      trace.events.push_back(ev);
      zi.set(z);
      st.remove_vertex(z);
    }
    trace.removed.push_back(zi);
  }
  trace.final_active = st.active;
  trace.final_graph = st.to_hypergraph(h.uniformity());
  return trace;
}

std::vector<std::pair<VertexSet, Hypergraph>> replay_states(const SymmetrizationTrace& trace) {
  SymState st{trace.input.vertex_count(), VertexSet::first_n(trace.input.vertex_count()),
              trace.input.edges()};
  std::vector<std::pair<VertexSet, Hypergraph>> states;
  std::size_t i = 0;
  // initial phase (step 0)
  while (i < trace.events.size() && trace.events[i].step == 0) {
    st.remove_vertex(trace.events[i].vertex);
    ++i;
  }
  states.emplace_back(st.active, st.to_hypergraph(trace.input.uniformity()));
  int steps = trace.steps();
  for (int s = 1; s <= steps; ++s) {
    while (i < trace.events.size() && trace.events[i].step == s) {
      const SymEvent& ev = trace.events[i];
      if (ev.kind == SymEvent::Kind::Symmetrize) {
        // any member of the absorbing class works; links agree by definition
        apply_symmetrize(st, ev.class_from, ev.class_to.lowest());
      } else {
        st.remove_vertex(ev.vertex);
      }
      ++i;
    }
    states.emplace_back(st.active, st.to_hypergraph(trace.input.uniformity()));
  }
  return states;
}

std::vector<Hypergraph> restrict_trace(const SymmetrizationTrace& trace, const VertexSet& w) {
  if (!(w == trace.final_active))
    throw std::invalid_argument("restrict_trace: W must be the trace's final vertex set");
  std::vector<Hypergraph> out;
  for (const auto& [active, graph] : replay_states(trace)) {
    (void)active;
    out.push_back(induced_subgraph(graph, w));
  }
  return out;
}

}  // namespace turan
