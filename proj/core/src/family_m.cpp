#include "turan/family_m.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "turan/constructions.hpp"

namespace turan {

namespace {

void require_3graph(const Hypergraph& h, const char* op) {
  if (h.uniformity() != 3)
    throw std::invalid_argument(std::string(op) + " expects a 3-uniform hypergraph");
}

//
// Semibipartite search: exactly one vertex of every edge in part A.
// Unit propagation with copy-on-branch backtracking.
//

constexpr std::int8_t kUnset = -1, kA = 0, kB = 1;

struct SBState {
  std::vector<std::int8_t> part;
};

bool sb_propagate(const Hypergraph& h, const std::vector<std::vector<int>>& incident,
                  SBState& st, std::vector<int> queue) {
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int ei : incident[v]) {
      const VertexSet& e = h.edges()[ei];
      int a = 0, b = 0;
      int unset_vertex = -1;
      e.for_each([&](int u) {
        if (st.part[u] == kA) ++a;
        else if (st.part[u] == kB) ++b;
        else unset_vertex = u;
      });
      if (a >= 2) return false;
      if (a + b == 3 && a != 1) return false;
      if (a == 1 && unset_vertex >= 0) {
        // remaining vertices must be B
        e.for_each([&](int u) {
          if (st.part[u] == kUnset) {
            st.part[u] = kB;
            queue.push_back(u);
          }
        });
      } else if (a == 0 && b == 2 && unset_vertex >= 0) {
        st.part[unset_vertex] = kA;
        queue.push_back(unset_vertex);
      }
    }
  }
  return true;
}

//
// 6-part coloring CSP against the fixed 6-vertex pattern.
//

struct G26Tables {
  // completions[a][b]: parts c such that {a,b,c} is a pattern edge.
  std::array<std::array<std::uint8_t, 6>, 6> completions{};
  std::array<std::array<std::array<bool, 6>, 6>, 6> is_edge{};
};

const G26Tables& g26_tables() {
  static const G26Tables tables = [] {
    G26Tables t{};
    const Hypergraph pattern = make_g26();
    for (const auto& e : pattern.edges()) {
      auto vs = e.to_vector();
      int a = vs[0], b = vs[1], c = vs[2];
      int perm[3] = {a, b, c};
      std::sort(perm, perm + 3);
      do {
        t.is_edge[perm[0]][perm[1]][perm[2]] = true;
        t.completions[perm[0]][perm[1]] |= std::uint8_t{1} << perm[2];
      } while (std::next_permutation(perm, perm + 3));
    }
    return t;
  }();
  return tables;
}

struct ColorState {
  std::vector<std::int8_t> color;       // -1 unassigned
  std::vector<std::uint8_t> domain;     // 6-bit masks
};

bool color_assign(const Hypergraph& h, const std::vector<std::vector<int>>& incident,
                  ColorState& st, int v, int c) {
  const auto& tab = g26_tables();
  st.color[v] = static_cast<std::int8_t>(c);
  st.domain[v] = std::uint8_t{1} << c;
  for (int ei : incident[v]) {
    const VertexSet& e = h.edges()[ei];
    int assigned[3], unassigned[3];
    int na = 0, nu = 0;
    e.for_each([&](int u) {
      if (st.color[u] >= 0) assigned[na++] = u;
      else unassigned[nu++] = u;
    });
    if (na == 3) {
      int p[3] = {st.color[assigned[0]], st.color[assigned[1]], st.color[assigned[2]]};
      std::sort(p, p + 3);
      if (p[0] == p[1] || p[1] == p[2] || !tab.is_edge[p[0]][p[1]][p[2]]) return false;
    } else if (na == 2) {
      int pa = st.color[assigned[0]], pb = st.color[assigned[1]];
      if (pa == pb) return false;
      std::uint8_t allowed = tab.completions[pa][pb];
      st.domain[unassigned[0]] &= allowed;
      if (st.domain[unassigned[0]] == 0) return false;
    }
  }
  return true;
}

bool color_search(const Hypergraph& h, const std::vector<std::vector<int>>& incident,
                  const std::vector<bool>& constrained, ColorState& st, bool first_pick) {
  // most-constrained unassigned vertex
  int best = -1, best_size = 7;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (!constrained[v] || st.color[v] >= 0) continue;
    int size = std::popcount(st.domain[v]);
    if (size < best_size) {
      best_size = size;
      best = v;
    }
  }
  if (best < 0) return true;
  std::uint8_t options = st.domain[best];
  if (first_pick) options &= 0b000101;  // orbit representatives 0 and 2
  for (int c = 0; c < 6; ++c) {
    if (!(options & (std::uint8_t{1} << c))) continue;
    ColorState branch = st;
    if (color_assign(h, incident, branch, best, c) &&
        color_search(h, incident, constrained, branch, false)) {
      st = branch;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> incidence_lists(const Hypergraph& h) {
  std::vector<std::vector<int>> incident(h.vertex_count());
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    h.edges()[i].for_each([&](int v) { incident[v].push_back(static_cast<int>(i)); });
  return incident;
}

}  // namespace

std::optional<PartitionWitness> semibipartite_witness(const Hypergraph& h) {
  require_3graph(h, "semibipartite_witness");
  auto incident = incidence_lists(h);
  std::vector<int> constrained;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!incident[v].empty()) constrained.push_back(v);

  SBState st;
  st.part.assign(h.vertex_count(), kUnset);

  // Depth-first with propagation; A tried before B so the witness is
  // reproducible.
  struct Searcher {
    const Hypergraph& h;
    const std::vector<std::vector<int>>& incident;
    const std::vector<int>& constrained;
    std::optional<SBState> found;

    bool run(SBState st, std::size_t next) {
      while (next < constrained.size() && st.part[constrained[next]] != kUnset) ++next;
      if (next == constrained.size()) {
        found = std::move(st);
        return true;
      }
      int v = constrained[next];
      for (std::int8_t val : {kA, kB}) {
        SBState branch = st;
        branch.part[v] = val;
        if (sb_propagate(h, incident, branch, {v}) && run(std::move(branch), next + 1))
          return true;
      }
      return false;
    }
  } searcher{h, incident, constrained, std::nullopt};

  if (!searcher.run(st, 0)) return std::nullopt;
  PartitionWitness w;
  w.kind = WitnessKind::Semibipartite;
  w.part.resize(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    std::int8_t p = searcher.found->part[v];
    w.part[v] = (p == kA) ? 0 : 1;  // untouched vertices land in B
  }
  return w;
}

std::optional<PartitionWitness> g26_coloring(const Hypergraph& h) {
  require_3graph(h, "g26_coloring");
  auto incident = incidence_lists(h);
  std::vector<bool> constrained(h.vertex_count(), false);
  for (int v = 0; v < h.vertex_count(); ++v) constrained[v] = !incident[v].empty();

  ColorState st;
  st.color.assign(h.vertex_count(), -1);
  st.domain.assign(h.vertex_count(), 0b111111);

  if (!color_search(h, incident, constrained, st, true)) return std::nullopt;
  PartitionWitness w;
  w.kind = WitnessKind::G26Coloring;
  w.part.resize(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v)
    w.part[v] = st.color[v] >= 0 ? st.color[v] : 0;
  return w;
}

bool validate_witness(const Hypergraph& h, const PartitionWitness& w) {
  if (static_cast<int>(w.part.size()) != h.vertex_count()) return false;
  if (w.kind == WitnessKind::Semibipartite) {
    for (const auto& e : h.edges()) {
      int in_a = 0;
      e.for_each([&](int v) { in_a += w.part[v] == 0; });
      if (in_a != 1) return false;
    }
    return true;
  }
  const auto& tab = g26_tables();
  for (int p : w.part)
    if (p < 0 || p >= 6) return false;
  for (const auto& e : h.edges()) {
    int p[3];
    int i = 0;
    e.for_each([&](int v) { p[i++] = w.part[v]; });
    std::sort(p, p + 3);
    if (p[0] == p[1] || p[1] == p[2] || !tab.is_edge[p[0]][p[1]][p[2]]) return false;
  }
  return true;
}

namespace {

bool embeddable(const Hypergraph& f) {
  return semibipartite_witness(f).has_value() || g26_coloring(f).has_value();
}

/// Compacts a set of edges (over the labels of some larger ground set) into a
/// standalone hypergraph.
Hypergraph assemble(const std::vector<VertexSet>& edges) {
  VertexSet used;
  for (const auto& e : edges) used |= e;
  std::vector<int> relabel(VertexSet::kMaxVertices, -1);
  int next = 0;
  used.for_each([&](int v) { relabel[v] = next++; });
  std::vector<VertexSet> out;
  out.reserve(edges.size());
  for (const auto& e : edges) {
    VertexSet m;
    e.for_each([&](int v) { m.set(relabel[v]); });
    out.push_back(m);
  }
  return Hypergraph::from_masks(3, next, std::move(out));
}

/// Coverage table: for each vertex pair the index of the first covering edge
/// in canonical order, or -1.
struct PairCover {
  int n;
  std::vector<int> first;

  explicit PairCover(const Hypergraph& h) : n(h.vertex_count()) {
    first.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t i = h.edges().size(); i-- > 0;) {
      auto vs = h.edges()[i].to_vector();
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          first[static_cast<std::size_t>(vs[a]) * n + vs[b]] = static_cast<int>(i);
          first[static_cast<std::size_t>(vs[b]) * n + vs[a]] = static_cast<int>(i);
        }
    }
  }

  int covering_edge(int u, int v) const {
    return first[static_cast<std::size_t>(u) * n + v];
  }
  bool covered(int u, int v) const { return covering_edge(u, v) >= 0; }
};

template <typename F>
void for_each_k_subset(int n, int k, F&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return;  // fn returns true to stop
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Enumerates "one covering edge per pair" assemblies for one candidate core.
/// Pairs covered only inside the core contribute nothing (their edge is in
/// h[S] already), and replacing an in-core choice by an outside covering edge
/// only grows the assembly. Non-embeddability is upward closed under adding
/// edges, so it suffices to range over maximal choices: exactly one outside
/// covering edge for every pair that has one. Returns the edges of a
/// non-embeddable assembly, or nullopt when all of them embed.
struct M3CoreSearch {
  const Hypergraph& h;
  VertexSet core;
  std::vector<VertexSet> internal;             // edges inside the core
  std::vector<std::pair<int, int>> branching;  // pairs with outside covering edges
  std::vector<std::vector<int>> options;       // their outside third vertices

  std::optional<std::vector<VertexSet>> run() {
    std::vector<int> pick(branching.size(), -1);
    return dfs(0, pick);
  }

 private:
  VertexSet pendant(std::size_t pair_index, int w) const {
    VertexSet e = VertexSet::of({branching[pair_index].first, branching[pair_index].second});
    e.set(w);
    return e;
  }

  static void dedupe(std::vector<VertexSet>& edges) {
    std::sort(edges.begin(), edges.end(), VertexSetLexLess{});
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  std::vector<VertexSet> assembly(const std::vector<int>& pick, std::size_t upto,
                                  bool all_from_upto) const {
    std::vector<VertexSet> edges = internal;
    for (std::size_t i = 0; i < upto; ++i) edges.push_back(pendant(i, pick[i]));
    if (all_from_upto)
      for (std::size_t i = upto; i < branching.size(); ++i)
        for (int w : options[i]) edges.push_back(pendant(i, w));
    dedupe(edges);
    return edges;
  }

  std::optional<std::vector<VertexSet>> dfs(std::size_t depth, std::vector<int>& pick) {
    // A partial assembly that already fails to embed stays that way under any
    // completion; complete with first options to present a concrete witness.
    if (!embeddable(assemble(assembly(pick, depth, false)))) {
      for (std::size_t i = depth; i < branching.size(); ++i) pick[i] = options[i].front();
      return assembly(pick, branching.size(), false);
    }
    // If even the union of everything still reachable embeds, so does every
    // choice below this node.
    if (embeddable(assemble(assembly(pick, depth, true)))) return std::nullopt;
    if (depth == branching.size()) return std::nullopt;

    // Outside vertices appearing in no other option list are interchangeable.
    bool fresh_used = false;
    for (int w : options[depth]) {
      bool appears_elsewhere = false;
      for (std::size_t j = 0; j < branching.size() && !appears_elsewhere; ++j) {
        if (j == depth) continue;
        appears_elsewhere =
            std::find(options[j].begin(), options[j].end(), w) != options[j].end();
      }
      bool chosen_before =
          std::find(pick.begin(), pick.begin() + static_cast<long>(depth), w) !=
          pick.begin() + static_cast<long>(depth);
      if (!appears_elsewhere && !chosen_before) {
        if (fresh_used) continue;
        fresh_used = true;
      }
      pick[depth] = w;
      if (auto found = dfs(depth + 1, pick)) return found;
    }
    pick[depth] = -1;
    return std::nullopt;
  }
};

}  // namespace

std::optional<MViolation> find_m1(const Hypergraph& h) {
  require_3graph(h, "find_m1");
  static const Hypergraph pattern = make_k53_minus();
  auto map = contains_subgraph(pattern, h);
  if (!map) return std::nullopt;
  MViolation v;
  v.kind = MKind::M1;
  for (int hv : *map) v.core.set(hv);
  for (const auto& e : pattern.edges()) {
    VertexSet image;
    e.for_each([&](int pv) { image.set((*map)[pv]); });
    v.witness_edges.push_back(image);
  }
  std::sort(v.witness_edges.begin(), v.witness_edges.end(), VertexSetLexLess{});
  return v;
}

std::optional<MViolation> find_m2(const Hypergraph& h) {
  require_3graph(h, "find_m2");
  const int n = h.vertex_count();
  if (n < 7) return std::nullopt;
  PairCover cover(h);

  std::optional<MViolation> out;
  for_each_k_subset(n, 7, [&](const std::vector<int>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (!cover.covered(s[a], s[b])) return false;

    VertexSet core;
    for (int v : s) core.set(v);
    // transversal number of the induced subgraph: >= 2 iff it has an edge but
    // no vertex meets every edge.
    VertexSet common = VertexSet::first_n(n);
    bool has_internal = false;
    std::vector<VertexSet> internal;
    for (const auto& e : h.edges()) {
      if (core.contains(e)) {
        has_internal = true;
        common &= e;
        internal.push_back(e);
      }
    }
    if (!has_internal || !common.empty()) return false;

    MViolation v;
    v.kind = MKind::M2;
    v.core = core;
    v.witness_edges = std::move(internal);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        v.witness_edges.push_back(h.edges()[cover.covering_edge(s[a], s[b])]);
    std::sort(v.witness_edges.begin(), v.witness_edges.end(), VertexSetLexLess{});
    v.witness_edges.erase(std::unique(v.witness_edges.begin(), v.witness_edges.end()),
                          v.witness_edges.end());
    out = std::move(v);
    return true;
  });
  return out;
}

namespace {

std::optional<MViolation> m3_core_impl(const Hypergraph& h, const PairCover& cover,
                                       const std::vector<int>& s, M3Mode mode) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!cover.covered(s[a], s[b])) return std::nullopt;

  VertexSet core;
  for (int v : s) core.set(v);

  if (mode == M3Mode::Fast) {
    std::vector<VertexSet> big;
    for (const auto& e : h.edges())
      if ((e & core).count() >= 2) big.push_back(e);
    if (!embeddable(assemble(big))) {
      VertexSet used;
      for (const auto& e : big) used |= e;
      MViolation v;
      v.kind = MKind::M3;
      v.core = core;
      v.witness_edges = std::move(big);
      v.vertex_bound_exceeded = used.count() > 21;
      return v;
    }
    return std::nullopt;
  }

  M3CoreSearch search{h, core, {}, {}, {}};
  for (const auto& e : h.edges())
    if (core.contains(e)) search.internal.push_back(e);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      std::vector<int> ws;  // covering third vertices outside the core
      for (const auto& e : h.edges()) {
        if (e.test(s[a]) && e.test(s[b])) {
          VertexSet rest = e;
          rest.reset(s[a]);
          rest.reset(s[b]);
          int w = rest.lowest();
          if (!core.test(w)) ws.push_back(w);
        }
      }
      if (ws.empty()) continue;
      std::sort(ws.begin(), ws.end());
      ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
      search.branching.emplace_back(s[a], s[b]);
      search.options.push_back(std::move(ws));
    }
  }

  if (auto found = search.run()) {
    MViolation v;
    v.kind = MKind::M3;
    v.core = core;
    v.witness_edges = std::move(*found);
    return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<MViolation> find_m3(const Hypergraph& h, M3Mode mode) {
  require_3graph(h, "find_m3");
  const int n = h.vertex_count();
  if (n < 6) return std::nullopt;
  PairCover cover(h);

  std::optional<MViolation> out;
  for_each_k_subset(n, 6, [&](const std::vector<int>& s) {
    if (auto v = m3_core_impl(h, cover, s, mode)) {
      out = std::move(v);
      return true;
    }
    return false;
  });
  return out;
}

std::optional<MViolation> find_m3_for_core(const Hypergraph& h, const VertexSet& core,
                                           M3Mode mode) {
  require_3graph(h, "find_m3_for_core");
  if (core.count() != 6) throw std::invalid_argument("core must have six vertices");
  PairCover cover(h);
  return m3_core_impl(h, cover, core.to_vector(), mode);
}

std::optional<MViolation> find_m_violation(const Hypergraph& h) {
  if (auto v = find_m1(h)) return v;
  if (auto v = find_m2(h)) return v;
  return find_m3(h, M3Mode::Exact);
}

bool is_m_hom_free(const Hypergraph& h) {
  require_3graph(h, "is_m_hom_free");
  if (h.vertex_count() == 0) return true;
  BlowupSpec spec;
  spec.part_sizes.assign(h.vertex_count(), 3);
  return is_m_free(blowup(h, spec));
}

bool validate_violation(const Hypergraph& h, const MViolation& v) {
  for (const auto& e : v.witness_edges)
    if (!h.has_edge(e)) return false;

  if (v.kind == MKind::M1) {
    if (v.core.count() != 5) return false;
    for (const auto& e : v.witness_edges)
      if (!v.core.contains(e)) return false;
    return contains_subgraph(make_k53_minus(), assemble(v.witness_edges)).has_value();
  }

  auto pairs_covered = [&](int k) {
    auto vs = v.core.to_vector();
    if (static_cast<int>(vs.size()) != k) return false;
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        bool hit = false;
        for (const auto& e : v.witness_edges)
          if (e.test(vs[a]) && e.test(vs[b])) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
    return true;
  };

  if (v.kind == MKind::M2) {
    if (!pairs_covered(7)) return false;
    return transversal_number(induced_subgraph(h, v.core)) >= 2;
  }

  // M3
  if (!pairs_covered(6)) return false;
  Hypergraph f = assemble(v.witness_edges);
  if (!v.vertex_bound_exceeded && f.vertex_count() > 21) return false;
  return !embeddable(f);
}

}  // namespace turan
