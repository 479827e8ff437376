#pragma once

#include <vector>

#include "turan/hypergraph.hpp"

namespace turan::testutil {

/// All k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<VertexSet> subsets(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int v : idx) s.set(v);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Independent transversal oracle: smallest hitting set by exhaustive
/// enumeration over all vertex subsets, smallest size first.
inline int transversal_oracle(const Hypergraph& h) {
  if (h.edges().empty()) return 0;
  const int n = h.vertex_count();
  for (int size = 1; size <= n; ++size) {
    for (const auto& s : subsets(n, size)) {
      bool hits_all = true;
      for (const auto& e : h.edges())
        if (!e.intersects(s)) {
          hits_all = false;
          break;
        }
      if (hits_all) return size;
    }
  }
  return n;
}

/// Independent induced-count oracle: 4-sets with exactly three edges, by
/// direct enumeration.
inline long long k43_minus_oracle(const Hypergraph& h) {
  long long count = 0;
  for (const auto& s : subsets(h.vertex_count(), 4)) {
    int inside = 0;
    for (const auto& e : h.edges()) inside += s.contains(e);
    count += inside == 3;
  }
  return count;
}

}  // namespace turan::testutil
