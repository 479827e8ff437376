#include "turan/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/family_m.hpp"

namespace turan {

namespace {

std::vector<VertexSet> all_k_subsets(int n, int k) {
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

struct Searcher {
  int n = 0;
  bool family_m = true;
  const std::vector<Hypergraph>* custom = nullptr;
  bool symmetry = true;
  long long budget = -1;

  std::vector<VertexSet> candidates;           // all triples, lexicographic
  std::vector<VertexSet> five_sets, six_sets, seven_sets;
  std::vector<int> cover;                      // pair coverage counts

  std::vector<VertexSet> chosen;
  long long nodes = 0;
  bool exhausted = false;
  int best = -1;
  std::vector<VertexSet> best_edges;

  int& cover_at(int u, int v) { return cover[static_cast<std::size_t>(u) * n + v]; }

  void add(const VertexSet& e) {
    auto vs = e.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        ++cover_at(vs[i], vs[j]);
        ++cover_at(vs[j], vs[i]);
      }
    chosen.push_back(e);
  }

  void remove(const VertexSet& e) {
    chosen.pop_back();
    auto vs = e.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        --cover_at(vs[i], vs[j]);
        --cover_at(vs[j], vs[i]);
      }
  }

  bool set_fully_covered(const VertexSet& s) {
    auto vs = s.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (cover_at(vs[i], vs[j]) == 0) return false;
    return true;
  }

  /// The inclusion of e just created a violation. Only vertex sets sharing a
  /// covered pair with e can host a new one, so those are the only sets
  /// rechecked.
  bool violates(const VertexSet& e) {
    if (!family_m) {
      Hypergraph current = Hypergraph::from_masks(3, n, chosen);
      for (const auto& f : *custom)
        if (contains_subgraph(f, current)) return true;
      return false;
    }

    // M1: a five-vertex set holding >= 9 edges contains the forbidden
    // nine-edge graph; a new copy uses e, so its span contains e.
    for (const auto& s : five_sets) {
      if (!s.contains(e)) continue;
      int inside = 0;
      for (const auto& c : chosen) inside += s.contains(c);
      if (inside >= 9) return true;
    }

    // M2: 7-set with all pairs covered whose induced edges have no common
    // vertex.
    for (const auto& s : seven_sets) {
      if ((s & e).count() < 2) continue;
      if (!set_fully_covered(s)) continue;
      VertexSet common = VertexSet::first_n(n);
      bool has_internal = false;
      for (const auto& c : chosen) {
        if (s.contains(c)) {
          has_internal = true;
          common &= c;
        }
      }
      if (has_internal && common.empty()) return true;
    }

    // M3: exact core criterion on covered 6-sets touching e twice.
    if (!six_sets.empty()) {
      Hypergraph current(3, 0);
      bool built = false;
      for (const auto& s : six_sets) {
        if ((s & e).count() < 2) continue;
        if (!set_fully_covered(s)) continue;
        if (!built) {
          current = Hypergraph::from_masks(3, n, chosen);
          built = true;
        }
        if (find_m3_for_core(current, s, M3Mode::Exact)) return true;
      }
    }
    return false;
  }

  void dfs(std::size_t idx) {
    ++nodes;
    if (budget >= 0 && nodes > budget) {
      exhausted = true;
      return;
    }
    if (static_cast<int>(chosen.size()) > best) {
      best = static_cast<int>(chosen.size());
      best_edges = chosen;
    }
    if (idx == candidates.size()) return;
    if (static_cast<int>(chosen.size() + (candidates.size() - idx)) <= best) return;

    const VertexSet& e = candidates[idx];
    const bool include_allowed = !symmetry || !chosen.empty() || idx == 0;
    if (include_allowed) {
      add(e);
      if (!violates(e)) dfs(idx + 1);
      remove(e);
      if (exhausted) return;
    }
    dfs(idx + 1);
  }
};

}  // namespace

SearchResult max_free_edges(const SearchConfig& config) {
  if (config.n < 0 || config.n > VertexSet::kMaxVertices)
    throw std::invalid_argument("search vertex count out of range");
  const bool family_m = config.custom_forbidden.empty();
  if (family_m && config.n > 10)
    throw std::invalid_argument("family M exact search is limited to n <= 10");
  for (const auto& f : config.custom_forbidden)
    if (f.uniformity() != 3)
      throw std::invalid_argument("custom forbidden graphs must be 3-uniform");

  Searcher searcher;
  searcher.n = config.n;
  searcher.family_m = family_m;
  searcher.custom = &config.custom_forbidden;
  searcher.symmetry = config.symmetry_pruning;
  searcher.budget = config.node_budget;
  searcher.candidates = all_k_subsets(config.n, 3);
  searcher.five_sets = all_k_subsets(config.n, 5);
  searcher.six_sets = all_k_subsets(config.n, 6);
  searcher.seven_sets = all_k_subsets(config.n, 7);
  searcher.cover.assign(static_cast<std::size_t>(config.n) * config.n, 0);
  searcher.dfs(0);

  SearchResult result;
  result.max_edges = searcher.best;
  result.witness = Hypergraph::from_masks(3, config.n, searcher.best_edges);
  result.nodes_expanded = searcher.nodes;
  result.optimal = !searcher.exhausted;
  return result;
}

Rational turan_upper_bound(int n) {
  if (n < 1) throw std::invalid_argument("turan_upper_bound requires n >= 1");
  return Rational(2LL * n * n * n, 27);
}

}  // namespace turan
