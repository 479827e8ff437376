#include "turan/region.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/parallel.hpp"

namespace turan {

RegionPoint region_point(const Hypergraph& h) {
  const int n = h.vertex_count(), r = h.uniformity();
  RegionPoint p;
  long long shadow_cap = binomial(n, r - 1);
  long long edge_cap = binomial(n, r);
  p.shadow_density = shadow_cap > 0 ? Rational(shadow(h).size(), shadow_cap) : Rational(0);
  p.edge_density = edge_cap > 0 ? Rational(h.size(), edge_cap) : Rational(0);
  return p;
}

namespace {

/// 4-set with rank `index` in the lexicographic enumeration.
VertexSet unrank_4set(long long index, int n) {
  VertexSet s;
  int start = 0;
  for (int pos = 0; pos < 4; ++pos) {
    for (int v = start; v < n; ++v) {
      long long block = binomial(n - v - 1, 3 - pos);
      if (index < block) {
        s.set(v);
        start = v + 1;
        break;
      }
      index -= block;
    }
  }
  return s;
}

}  // namespace

long long count_induced_k43_minus(const Hypergraph& h) {
  if (h.uniformity() != 3)
    throw std::invalid_argument("count_induced_k43_minus expects a 3-uniform hypergraph");
  const int n = h.vertex_count();
  if (n < 4) return 0;
  const long long total = binomial(n, 4);

  std::vector<long long> sums(std::max(chunk_count(total), 1), 0);
  parallel_chunks(total, [&](long long begin, long long end, int chunk) {
    long long local = 0;
    for (long long idx = begin; idx < end; ++idx) {
      VertexSet s = unrank_4set(idx, n);
      auto vs = s.to_vector();
      int inside = 0;
      for (int skip = 0; skip < 4; ++skip) {
        VertexSet triple = s;
        triple.reset(vs[skip]);
        inside += h.has_edge(triple);
      }
      local += inside == 3;
    }
    sums[chunk] = local;
  });

  long long count = 0;
  for (long long s : sums) count += s;
  return count;
}

long long kostochka_k43_minus_count(int n, int m) {
  if (n < 3 || n % 3 != 0)
    throw std::invalid_argument("kostochka_k43_minus_count: n must be a positive multiple of 3");
  if (m < 0 || m > n / 3)
    throw std::invalid_argument("kostochka_k43_minus_count: m out of range");
  // m^2 (n-3m)(n-3m-3)/6 == 3 m^2 C(n/3-m, 2)
  return 3LL * m * m * binomial(n / 3 - m, 2);
}

Rational edit_distance_lower_bound(const Hypergraph& h1, const Hypergraph& h2) {
  if (h1.vertex_count() != h2.vertex_count())
    throw std::invalid_argument("edit_distance_lower_bound: vertex counts differ");
  const int n = h1.vertex_count();
  if (n < 4) throw std::invalid_argument("edit_distance_lower_bound requires n >= 4");
  long long c1 = count_induced_k43_minus(h1);
  long long c2 = count_induced_k43_minus(h2);
  long long diff = c1 > c2 ? c1 - c2 : c2 - c1;
  return Rational(diff, n - 3);
}

std::vector<Hypergraph> kostochka_complement_family(int n, const std::vector<int>& ms) {
  std::vector<Hypergraph> out;
  out.reserve(ms.size());
  for (int m : ms) {
    Hypergraph comp = complement(make_kostochka({n, m}));
    // no 4-set may carry all four triples
    auto vs = VertexSet::first_n(n).to_vector();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        for (std::size_t c = b + 1; c < vs.size(); ++c)
          for (std::size_t d = c + 1; d < vs.size(); ++d) {
            VertexSet four = VertexSet::of({vs[a], vs[b], vs[c], vs[d]});
            int inside = 0;
            four.for_each([&](int skip) {
              VertexSet triple = four;
              triple.reset(skip);
              inside += comp.has_edge(triple);
            });
            if (inside == 4)
              throw std::logic_error("kostochka complement contains a complete 4-set");
          }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace turan
