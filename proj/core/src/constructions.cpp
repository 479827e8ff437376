#include "turan/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace turan {

Hypergraph make_g1(int n) {
  if (n < 3) throw std::invalid_argument("make_g1 requires n >= 3");
  const int a = n / 3;
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(g1_bound(n)));
  for (int x = 0; x < a; ++x)
    for (int b1 = a; b1 < n; ++b1)
      for (int b2 = b1 + 1; b2 < n; ++b2)
        edges.push_back(VertexSet::of({x, b1, b2}));
  return Hypergraph::from_masks(3, n, std::move(edges));
}

namespace {

const std::array<VertexSet, 4>& g26_complement_triples() {
  static const std::array<VertexSet, 4> triples = {
      VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 5}),
      VertexSet::of({2, 3, 4}), VertexSet::of({3, 4, 5})};
  return triples;
}

}  // namespace

Hypergraph make_g26() {
  std::vector<VertexSet> edges;
  const auto& missing = g26_complement_triples();
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        VertexSet t = VertexSet::of({a, b, c});
        if (std::find(missing.begin(), missing.end(), t) == missing.end())
          edges.push_back(t);
      }
  return Hypergraph::from_masks(3, 6, std::move(edges));
}

std::array<int, 6> g2_part_sizes(int n) {
  if (n < 6) throw std::invalid_argument("make_g2 requires n >= 6");
  const int base = n / 6;
  const int extra = n % 6;
  const Hypergraph pattern = make_g26();

  std::array<int, 6> best{};
  long long best_count = -1;
  // All placements of the `extra` larger parts; the first maximizing
  // placement in subset order wins, so the output is reproducible.
  for (int mask = 0; mask < 64; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != extra) continue;
    BlowupSpec spec;
    spec.part_sizes.resize(6);
    for (int i = 0; i < 6; ++i) spec.part_sizes[i] = base + ((mask >> i) & 1);
    long long count = blowup_size(pattern, spec);
    if (count > best_count) {
      best_count = count;
      for (int i = 0; i < 6; ++i) best[i] = spec.part_sizes[i];
    }
  }
  return best;
}

Hypergraph make_g2(int n) {
  auto sizes = g2_part_sizes(n);
  BlowupSpec spec;
  spec.part_sizes.assign(sizes.begin(), sizes.end());
  return blowup(make_g26(), spec);
}

Hypergraph make_turan(int r, int n, int l) {
  if (r < 2 || l < r || n < l)
    throw std::invalid_argument("make_turan requires l >= r >= 2 and n >= l");
  std::vector<int> part_of(n);
  {
    const int base = n / l, extra = n % l;
    int v = 0;
    for (int p = 0; p < l; ++p) {
      int size = base + (p < extra ? 1 : 0);
      for (int i = 0; i < size; ++i) part_of[v++] = p;
    }
  }
  std::vector<VertexSet> edges;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    bool transversal = true;
    for (int i = 1; i < r && transversal; ++i)
      if (part_of[idx[i]] == part_of[idx[i - 1]]) transversal = false;
    if (transversal) {
      VertexSet m;
      for (int v : idx) m.set(v);
      edges.push_back(m);
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return Hypergraph::from_masks(r, n, std::move(edges));
}

Hypergraph make_kostochka(const KostochkaSpec& spec) {
  const int n = spec.n, m = spec.m;
  if (n < 3 || n % 3 != 0) throw std::invalid_argument("kostochka: n must be a positive multiple of 3");
  if (m < 0 || m > n / 3) throw std::invalid_argument("kostochka: m must satisfy 0 <= m <= n/3");
  const int g = n / 3;

  // cell(i,j): V_{i,j} as a label range inside group j, groups consecutive.
  auto group = [&](int j) {  // j in {0,1,2}
    VertexSet s;
    for (int v = j * g; v < (j + 1) * g; ++v) s.set(v);
    return s;
  };
  auto cell1 = [&](int j) {
    VertexSet s;
    for (int v = j * g; v < j * g + m; ++v) s.set(v);
    return s;
  };
  auto cell2 = [&](int j) {
    VertexSet s;
    for (int v = j * g + m; v < (j + 1) * g; ++v) s.set(v);
    return s;
  };

  std::vector<VertexSet> edges;
  auto add_pairs_times_single = [&](const VertexSet& pair_src, const VertexSet& single_src) {
    auto ps = pair_src.to_vector();
    auto ss = single_src.to_vector();
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        for (int c : ss)
          edges.push_back(VertexSet::of({ps[i], ps[j], c}));
  };
  auto add_triples_inside = [&](const VertexSet& src) {
    auto vs = src.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        for (std::size_t k = j + 1; k < vs.size(); ++k)
          edges.push_back(VertexSet::of({vs[i], vs[j], vs[k]}));
  };

  for (int j = 0; j < 3; ++j) {
    const int jn = (j + 1) % 3;  // j+1 cyclic
    const int jp = (j + 2) % 3;  // j-1 cyclic
    add_triples_inside(cell1(j));                    // class 1 (V_{1,j})
    add_triples_inside(cell2(j));                    // class 1 (V_{2,j})
    add_pairs_times_single(cell1(j), cell2(j));      // class 2
    add_pairs_times_single(cell1(j), group(jn));     // class 3
    add_pairs_times_single(cell2(j), cell1(jn));     // class 4
    add_pairs_times_single(cell2(j), group(jp));     // class 5
    // class 6: one vertex from each of V_{1,j}, V_{2,j}, V_{j+1}
    for (int x : cell1(j).to_vector())
      for (int y : cell2(j).to_vector())
        for (int z : group(jn).to_vector())
          edges.push_back(VertexSet::of({x, y, z}));
  }
  return Hypergraph::from_masks(3, n, std::move(edges));
}

Hypergraph make_complete(int l, int r) {
  if (r < 1 || l < r) throw std::invalid_argument("make_complete requires l >= r >= 1");
  Hypergraph empty(r, l);
  return complement(empty);
}

Hypergraph make_k53_minus() {
  Hypergraph k53 = make_complete(5, 3);
  std::vector<VertexSet> edges;
  const VertexSet removed = VertexSet::of({2, 3, 4});
  for (const auto& e : k53.edges())
    if (!(e == removed)) edges.push_back(e);
  return Hypergraph::from_masks(3, 5, std::move(edges));
}

Hypergraph make_f32() {
  return Hypergraph::from_edges(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}});
}

Hypergraph make_full_star(int n) {
  if (n < 3) throw std::invalid_argument("make_full_star requires n >= 3");
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(binomial(n - 1, 2)));
  for (int b = 1; b < n; ++b)
    for (int c = b + 1; c < n; ++c)
      edges.push_back(VertexSet::of({0, b, c}));
  return Hypergraph::from_masks(3, n, std::move(edges));
}

long long g1_bound(int n) {
  if (n < 3) throw std::invalid_argument("g1_bound requires n >= 3");
  const long long a = n / 3;
  const long long b = n - a;  // ceil(2n/3)
  return a * binomial(static_cast<int>(b), 2);
}

long long g2_bound(int n) {
  auto sizes = g2_part_sizes(n);
  BlowupSpec spec;
  spec.part_sizes.assign(sizes.begin(), sizes.end());
  return blowup_size(make_g26(), spec);
}

}  // namespace turan
