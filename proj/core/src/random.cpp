#include "turan/random.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "turan/constructions.hpp"

namespace turan {

namespace {

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

template <typename F>
void for_each_r_subset(int n, int r, F&& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Hypergraph random_hypergraph(int n, int r, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> edges;
  for_each_r_subset(n, r, [&](const std::vector<int>& idx) {
    if (next_uniform(rng) < edge_prob) {
      VertexSet m;
      for (int v : idx) m.set(v);
      edges.push_back(m);
    }
  });
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph random_semibipartite(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_semibipartite requires n >= 3");
  std::mt19937_64 rng(seed);
  const int a = 1 + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(n - 2)));
  std::vector<VertexSet> edges;
  for (int x = 0; x < a; ++x)
    for (int b1 = a; b1 < n; ++b1)
      for (int b2 = b1 + 1; b2 < n; ++b2)
        if (next_uniform(rng) < 0.5) edges.push_back(VertexSet::of({x, b1, b2}));
  return Hypergraph::from_masks(3, n, std::move(edges));
}

Hypergraph random_g26_colorable(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_g26_colorable requires n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> part(n);
  for (int v = 0; v < n; ++v) part[v] = static_cast<int>(next_below(rng, 6));
  const Hypergraph pattern = make_g26();
  std::vector<VertexSet> edges;
  for_each_r_subset(n, 3, [&](const std::vector<int>& idx) {
    VertexSet parts = VertexSet::of({part[idx[0]], part[idx[1]], part[idx[2]]});
    if (parts.count() != 3 || !pattern.has_edge(parts)) return;
    if (next_uniform(rng) < 0.5)
      edges.push_back(VertexSet::of({idx[0], idx[1], idx[2]}));
  });
  return Hypergraph::from_masks(3, n, std::move(edges));
}

Hypergraph remove_random_edges(const Hypergraph& h, long long count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> edges = h.edges();
  count = std::min<long long>(count, static_cast<long long>(edges.size()));
  // partial Fisher-Yates: move victims to the back, then truncate
  std::size_t remaining = edges.size();
  for (long long i = 0; i < count; ++i) {
    std::size_t pick = static_cast<std::size_t>(next_below(rng, remaining));
    std::swap(edges[pick], edges[remaining - 1]);
    --remaining;
  }
  edges.resize(remaining);
  return Hypergraph::from_masks(h.uniformity(), h.vertex_count(), std::move(edges));
}

}  // namespace turan
