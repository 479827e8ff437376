#include "turan/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

void check_shape(int r, int n) {
  if (r < 1) throw std::invalid_argument("uniformity must be positive");
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > VertexSet::kMaxVertices)
    throw std::invalid_argument("vertex count exceeds " +
                                std::to_string(VertexSet::kMaxVertices));
}

void canonicalize(std::vector<VertexSet>& edges) {
  std::sort(edges.begin(), edges.end(), VertexSetLexLess{});
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

/// Enumerates all k-subsets of {0,...,n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int v : idx) s.set(v);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Hypergraph::Hypergraph(int uniformity, int vertex_count)
    : r_(uniformity), n_(vertex_count) {
  check_shape(r_, n_);
}

Hypergraph Hypergraph::from_edges(int uniformity, int vertex_count,
                                  const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    VertexSet m;
    for (int v : e) {
      if (v < 0 || v >= vertex_count)
        throw std::invalid_argument("edge vertex " + std::to_string(v) + " out of range");
      m.set(v);
    }
    masks.push_back(m);
  }
  return from_masks(uniformity, vertex_count, std::move(masks));
}

Hypergraph Hypergraph::from_masks(int uniformity, int vertex_count,
                                  std::vector<VertexSet> edges) {
  Hypergraph h(uniformity, vertex_count);
  VertexSet ground = VertexSet::first_n(vertex_count);
  for (const auto& e : edges) {
    if (e.count() != uniformity)
      throw std::invalid_argument("edge does not have exactly " +
                                  std::to_string(uniformity) + " distinct vertices");
    if (!ground.contains(e)) throw std::invalid_argument("edge vertex out of range");
  }
  canonicalize(edges);
  h.edges_ = std::move(edges);
  return h;
}

bool Hypergraph::has_edge(const VertexSet& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, VertexSetLexLess{});
}

Hypergraph shadow(const Hypergraph& h) {
  if (h.uniformity() < 2) throw std::invalid_argument("shadow needs uniformity >= 2");
  std::vector<VertexSet> out;
  out.reserve(h.edges().size() * static_cast<std::size_t>(h.uniformity()));
  for (const auto& e : h.edges()) {
    e.for_each([&](int v) {
      VertexSet s = e;
      s.reset(v);
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end(), VertexSetLexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Hypergraph::from_masks(h.uniformity() - 1, h.vertex_count(), std::move(out));
}

Hypergraph link(const Hypergraph& h, int v) {
  if (h.uniformity() < 2) throw std::invalid_argument("link needs uniformity >= 2");
  if (v < 0 || v >= h.vertex_count())
    throw std::out_of_range("link vertex out of range");
  std::vector<VertexSet> out;
  for (const auto& e : h.edges()) {
    if (e.test(v)) {
      VertexSet s = e;
      s.reset(v);
      out.push_back(s);
    }
  }
  return Hypergraph::from_masks(h.uniformity() - 1, h.vertex_count(), std::move(out));
}

long long degree(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.vertex_count())
    throw std::out_of_range("degree vertex out of range");
  long long d = 0;
  for (const auto& e : h.edges()) d += e.test(v);
  return d;
}

long long min_degree(const Hypergraph& h) {
  if (h.vertex_count() == 0) return 0;
  std::vector<long long> deg(h.vertex_count(), 0);
  for (const auto& e : h.edges()) e.for_each([&](int v) { ++deg[v]; });
  return *std::min_element(deg.begin(), deg.end());
}

namespace {

void transversal_search(const std::vector<VertexSet>& edges, VertexSet chosen,
                        int chosen_size, int& best) {
  if (chosen_size >= best) return;
  const VertexSet* uncovered = nullptr;
  for (const auto& e : edges) {
    if (!e.intersects(chosen)) {
      uncovered = &e;
      break;
    }
  }
  if (!uncovered) {
    best = chosen_size;
    return;
  }
  uncovered->for_each([&](int v) {
    VertexSet next = chosen;
    next.set(v);
    transversal_search(edges, next, chosen_size + 1, best);
  });
}

}  // namespace

int transversal_number(const Hypergraph& h) {
  if (h.edges().empty()) return 0;
  int best = static_cast<int>(h.edges().size()) * h.uniformity();
  best = std::min(best, h.vertex_count());
  transversal_search(h.edges(), VertexSet{}, 0, best);
  return best;
}

VertexSet neighborhood(const Hypergraph& h, const VertexSet& s) {
  if (!VertexSet::first_n(h.vertex_count()).contains(s))
    throw std::invalid_argument("neighborhood set out of range");
  VertexSet out;
  for (const auto& e : h.edges())
    if (e.contains(s)) out |= e;
  out -= s;
  return out;
}

bool adjacent(const Hypergraph& h, int u, int v) {
  VertexSet pair = VertexSet::of({u, v});
  for (const auto& e : h.edges())
    if (e.contains(pair)) return true;
  return false;
}

Hypergraph induced_subgraph(const Hypergraph& h, const VertexSet& s) {
  if (!VertexSet::first_n(h.vertex_count()).contains(s))
    throw std::invalid_argument("induced set out of range");
  std::vector<int> relabel(h.vertex_count(), -1);
  int next = 0;
  s.for_each([&](int v) { relabel[v] = next++; });
  std::vector<VertexSet> out;
  for (const auto& e : h.edges()) {
    if (s.contains(e)) {
      VertexSet m;
      e.for_each([&](int v) { m.set(relabel[v]); });
      out.push_back(m);
    }
  }
  return Hypergraph::from_masks(h.uniformity(), next, std::move(out));
}

Hypergraph complement(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for_each_subset(h.vertex_count(), h.uniformity(), [&](const VertexSet& s) {
    if (!h.has_edge(s)) out.push_back(s);
  });
  return Hypergraph::from_masks(h.uniformity(), h.vertex_count(), std::move(out));
}

Hypergraph blowup(const Hypergraph& pattern, const BlowupSpec& spec) {
  const int s = pattern.vertex_count();
  if (static_cast<int>(spec.part_sizes.size()) != s)
    throw std::invalid_argument("blowup spec length must equal pattern vertex count");
  long long total = 0;
  for (int t : spec.part_sizes) {
    if (t < 1) throw std::invalid_argument("blowup part sizes must be >= 1");
    total += t;
  }
  if (total > VertexSet::kMaxVertices)
    throw std::invalid_argument("blowup exceeds maximum vertex count");

  std::vector<int> offset(s + 1, 0);
  for (int i = 0; i < s; ++i) offset[i + 1] = offset[i] + spec.part_sizes[i];

  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(blowup_size(pattern, spec)));
  std::vector<int> parts;
  for (const auto& e : pattern.edges()) {
    parts = e.to_vector();
    const int r = static_cast<int>(parts.size());
    std::vector<int> pick(r, 0);
    while (true) {
      VertexSet m;
      for (int i = 0; i < r; ++i) m.set(offset[parts[i]] + pick[i]);
      out.push_back(m);
      int i = r - 1;
      while (i >= 0 && pick[i] + 1 == spec.part_sizes[parts[i]]) {
        pick[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++pick[i];
    }
  }
  return Hypergraph::from_masks(pattern.uniformity(), static_cast<int>(total),
                                std::move(out));
}

long long blowup_size(const Hypergraph& pattern, const BlowupSpec& spec) {
  if (static_cast<int>(spec.part_sizes.size()) != pattern.vertex_count())
    throw std::invalid_argument("blowup spec length must equal pattern vertex count");
  long long total = 0;
  for (const auto& e : pattern.edges()) {
    long long prod = 1;
    e.for_each([&](int v) { prod *= spec.part_sizes[v]; });
    total += prod;
  }
  return total;
}

namespace {

struct EmbedState {
  const Hypergraph* pattern;
  const Hypergraph* host;
  bool injective;
  std::vector<int> order;                  // pattern vertices, match order
  std::vector<std::vector<VertexSet>> ready;  // pattern edges completed per step
  std::vector<long long> pattern_deg;
  std::vector<long long> host_deg;
  VertexMap assign;
  VertexSet used;
};

bool embed_step(EmbedState& st, std::size_t depth) {
  if (depth == st.order.size()) return true;
  const int p = st.order[depth];
  for (int hvert = 0; hvert < st.host->vertex_count(); ++hvert) {
    if (st.injective && st.used.test(hvert)) continue;
    if (st.injective && st.host_deg[hvert] < st.pattern_deg[p]) continue;
    st.assign[p] = hvert;
    bool ok = true;
    for (const auto& e : st.ready[depth]) {
      VertexSet image;
      bool collapsed = false;
      e.for_each([&](int pv) {
        image.set(st.assign[pv]);
      });
      if (image.count() != st.pattern->uniformity()) collapsed = true;
      if (collapsed || !st.host->has_edge(image)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (st.injective) st.used.set(hvert);
      if (embed_step(st, depth + 1)) return true;
      if (st.injective) st.used.reset(hvert);
    }
  }
  st.assign[p] = -1;
  return false;
}

std::optional<VertexMap> embed(const Hypergraph& pattern, const Hypergraph& host,
                               bool injective) {
  if (pattern.uniformity() != host.uniformity())
    throw std::invalid_argument("uniformity mismatch");
  if (injective && pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (host.vertex_count() == 0) {
    if (pattern.vertex_count() == 0) return VertexMap{};
    return std::nullopt;
  }

  EmbedState st;
  st.pattern = &pattern;
  st.host = &host;
  st.injective = injective;
  st.pattern_deg.resize(pattern.vertex_count());
  for (int v = 0; v < pattern.vertex_count(); ++v) st.pattern_deg[v] = degree(pattern, v);
  st.host_deg.resize(host.vertex_count());
  for (int v = 0; v < host.vertex_count(); ++v) st.host_deg[v] = degree(host, v);

  st.order.resize(pattern.vertex_count());
  for (int v = 0; v < pattern.vertex_count(); ++v) st.order[v] = v;
  std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    if (st.pattern_deg[a] != st.pattern_deg[b]) return st.pattern_deg[a] > st.pattern_deg[b];
    return a < b;
  });

  // Edge e becomes checkable at the step where its last vertex is placed.
  std::vector<int> step_of(pattern.vertex_count());
  for (std::size_t i = 0; i < st.order.size(); ++i) step_of[st.order[i]] = static_cast<int>(i);
  st.ready.resize(st.order.size());
  for (const auto& e : pattern.edges()) {
    int last = 0;
    e.for_each([&](int v) { last = std::max(last, step_of[v]); });
    st.ready[last].push_back(e);
  }

  st.assign.assign(pattern.vertex_count(), -1);
  if (embed_step(st, 0)) return st.assign;
  return std::nullopt;
}

}  // namespace

std::optional<VertexMap> contains_subgraph(const Hypergraph& pattern, const Hypergraph& host) {
  return embed(pattern, host, /*injective=*/true);
}

std::optional<VertexMap> homomorphism(const Hypergraph& pattern, const Hypergraph& host) {
  return embed(pattern, host, /*injective=*/false);
}

bool is_two_covered(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
  for (const auto& e : h.edges()) {
    auto vs = e.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        covered[static_cast<std::size_t>(vs[i]) * n + vs[j]] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!covered[static_cast<std::size_t>(u) * n + v]) return false;
  return true;
}

std::optional<int> star_center(const Hypergraph& h) {
  if (h.edges().empty()) {
    if (h.vertex_count() >= 1) return 0;
    return std::nullopt;
  }
  VertexSet common = h.edges().front();
  for (const auto& e : h.edges()) common &= e;
  int c = common.lowest();
  if (c < 0) return std::nullopt;
  return c;
}

double weight_polynomial(const Hypergraph& h, const SimplexPoint& x) {
  if (static_cast<int>(x.size()) != h.vertex_count())
    throw std::invalid_argument("weight vector length must equal vertex count");
  double sum = 0.0;
  for (double w : x) {
    if (w < 0.0) throw std::invalid_argument("weight vector has a negative entry");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("weight vector must sum to 1");
  double total = 0.0;
  for (const auto& e : h.edges()) {
    double prod = 1.0;
    e.for_each([&](int v) { prod *= x[v]; });
    total += prod;
  }
  return total;
}

Rational weight_polynomial(const Hypergraph& h, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != h.vertex_count())
    throw std::invalid_argument("weight vector length must equal vertex count");
  Rational sum(0);
  for (const auto& w : x) {
    if (w < Rational(0)) throw std::invalid_argument("weight vector has a negative entry");
    sum += w;
  }
  if (sum != Rational(1)) throw std::invalid_argument("weight vector must sum to 1");
  Rational total(0);
  for (const auto& e : h.edges()) {
    Rational prod(1);
    e.for_each([&](int v) { prod *= x[v]; });
    total += prod;
  }
  return total;
}

}  // namespace turan
