#include "turan/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/parallel.hpp"

namespace turan {

namespace {

double eval_poly(const std::vector<VertexSet>& edges, const std::vector<double>& x) {
  double total = 0.0;
  for (const auto& e : edges) {
    double prod = 1.0;
    e.for_each([&](int v) { prod *= x[v]; });
    total += prod;
  }
  return total;
}

void eval_gradient(const std::vector<VertexSet>& edges, const std::vector<double>& x,
                   std::vector<double>& g) {
  std::fill(g.begin(), g.end(), 0.0);
  std::vector<int> vs;
  for (const auto& e : edges) {
    vs = e.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      double prod = 1.0;
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (j != i) prod *= x[vs[j]];
      g[vs[i]] += prod;
    }
  }
}

/// Euclidean projection onto the standard simplex.
void project_simplex(std::vector<double>& z) {
  const int n = static_cast<int>(z.size());
  std::vector<double> sorted = z;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double running = 0.0, tau = 0.0;
  for (int j = 0; j < n; ++j) {
    running += sorted[j];
    double candidate = (running - 1.0) / (j + 1);
    if (sorted[j] - candidate > 0.0) tau = candidate;
  }
  for (auto& v : z) v = std::max(v - tau, 0.0);
}

/// Deterministic uniform double in [0, 1) independent of the standard
/// library's distribution implementations.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct AscentOutcome {
  double value;
  std::vector<double> point;
  long long iterations;
};

AscentOutcome ascend(const std::vector<VertexSet>& edges, std::vector<double> x,
                     const LagrangianConfig& cfg) {
  const int n = static_cast<int>(x.size());
  double p = eval_poly(edges, x);
  std::vector<double> g(n), trial(n);
  long long iters = 0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    ++iters;
    eval_gradient(edges, x, g);
    double step = 1.0;
    double improved = 0.0;
    while (step > 1e-18) {
      for (int v = 0; v < n; ++v) trial[v] = x[v] + step * g[v];
      project_simplex(trial);
      double pt = eval_poly(edges, trial);
      if (pt > p) {
        improved = pt - p;
        x = trial;
        p = pt;
        break;
      }
      step *= 0.5;
    }
    if (improved < cfg.improve_tol) break;
  }
  return {p, std::move(x), iters};
}

bool lex_smaller(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int max_clique_size(const std::vector<VertexSet>& adjacency, VertexSet candidates,
                    int current, int best) {
  if (candidates.empty()) return std::max(best, current);
  if (current + candidates.count() <= best) return best;
  int v = candidates.lowest();
  // branch: take v
  best = max_clique_size(adjacency, candidates & adjacency[v], current + 1, best);
  // branch: skip v
  candidates.reset(v);
  best = max_clique_size(adjacency, candidates, current, best);
  return best;
}

/// Motzkin-Straus: a graph's Lagrangian is (1/2)(1 - 1/omega).
Rational graph_lagrangian(const Hypergraph& graph) {
  if (graph.edges().empty()) return Rational(0);
  std::vector<VertexSet> adjacency(graph.vertex_count());
  for (const auto& e : graph.edges()) {
    auto vs = e.to_vector();
    adjacency[vs[0]].set(vs[1]);
    adjacency[vs[1]].set(vs[0]);
  }
  int omega =
      max_clique_size(adjacency, VertexSet::first_n(graph.vertex_count()), 0, 0);
  return Rational(1, 2) * (Rational(1) - Rational(1, omega));
}

Rational gradient_sup_bound(const Hypergraph& h) {
  if (h.edges().empty()) return Rational(0);
  if (h.uniformity() == 2) return Rational(1);
  if (h.uniformity() == 3) {
    Rational best(0);
    for (int v = 0; v < h.vertex_count(); ++v)
      best = std::max(best, graph_lagrangian(link(h, v)));
    return best;
  }
  long long fact = 1;
  for (int i = 2; i < h.uniformity(); ++i) fact *= i;
  return Rational(1, fact);
}

struct LatticeScan {
  const std::vector<VertexSet>& edges;
  int n;
  long long resolution;
  long long best = -1;
  std::vector<int> best_point;

  void consider(const std::vector<int>& point, long long value) {
    if (value > best || (value == best &&
                         std::lexicographical_compare(point.begin(), point.end(),
                                                      best_point.begin(), best_point.end()))) {
      best = value;
      best_point = point;
    }
  }

  // Closed-form max over the final two coordinates: with every other
  // coordinate fixed, D^r p is c0 + ca*ka + cb*kb + cab*ka*kb with kb = R-ka,
  // concave in ka, so the integer maximum sits at an endpoint or beside the
  // parabola vertex.
  void last_two(std::vector<int>& k, long long remaining) {
    const int va = n - 2, vb = n - 1;
    long long c0 = 0, ca = 0, cb = 0, cab = 0;
    for (const auto& e : edges) {
      long long prod = 1;
      bool hits_a = false, hits_b = false;
      e.for_each([&](int v) {
        if (v == va) hits_a = true;
        else if (v == vb) hits_b = true;
        else prod *= k[v];
      });
      if (prod == 0) continue;
      if (hits_a && hits_b) cab += prod;
      else if (hits_a) ca += prod;
      else if (hits_b) cb += prod;
      else c0 += prod;
    }
    auto value_at = [&](long long ka) {
      long long kb = remaining - ka;
      return c0 + ca * ka + cb * kb + cab * ka * kb;
    };
    long long candidates[4] = {0, remaining, -1, -1};
    if (cab > 0) {
      // vertex of the parabola at (cab*R + ca - cb) / (2 cab)
      long long num = cab * remaining + ca - cb;
      long long lo = num >= 0 ? num / (2 * cab) : 0;
      candidates[2] = std::clamp<long long>(lo, 0, remaining);
      candidates[3] = std::clamp<long long>(lo + 1, 0, remaining);
    }
    for (long long ka : candidates) {
      if (ka < 0) continue;
      long long value = value_at(ka);
      k[va] = static_cast<int>(ka);
      k[vb] = static_cast<int>(remaining - ka);
      consider(k, value);
    }
    k[va] = k[vb] = 0;
  }

  void recurse(std::vector<int>& k, int idx, long long remaining) {
    if (idx == n - 2) {
      last_two(k, remaining);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      k[idx] = static_cast<int>(v);
      recurse(k, idx + 1, remaining - v);
    }
    k[idx] = 0;
  }

  void run() {
    std::vector<int> k(n, 0);
    if (n == 1) {
      k[0] = static_cast<int>(resolution);
      consider(k, eval_integer(k));
      return;
    }
    recurse(k, 0, resolution);
  }

  long long eval_integer(const std::vector<int>& k) const {
    long long total = 0;
    for (const auto& e : edges) {
      long long prod = 1;
      e.for_each([&](int v) { prod *= k[v]; });
      total += prod;
    }
    return total;
  }
};

}  // namespace

LagrangianResult lagrangian_lower(const Hypergraph& h, const LagrangianConfig& config) {
  const int n = h.vertex_count();
  if (n < 1) throw std::invalid_argument("lagrangian_lower requires n >= 1");
  LagrangianResult result;
  result.maximizer.assign(n, 0.0);
  result.maximizer[0] = 1.0;
  if (h.edges().empty()) {
    result.lower_bound = 0.0;
    result.restarts = 0;
    return result;
  }

  std::vector<std::vector<double>> starts;
  // uniform point
  starts.emplace_back(n, 1.0 / n);
  // uniform on every support (all nonempty subsets at small n, otherwise the
  // supports of the edges themselves)
  if (n <= config.support_start_limit) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<double> x(n, 0.0);
      int size = std::popcount(mask);
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) x[v] = 1.0 / size;
      starts.push_back(std::move(x));
    }
  } else {
    for (const auto& e : h.edges()) {
      std::vector<double> x(n, 0.0);
      e.for_each([&](int v) { x[v] = 1.0 / h.uniformity(); });
      starts.push_back(std::move(x));
    }
  }
  // seeded random interior points
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.restarts; ++i) {
    std::vector<double> x(n);
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
      x[v] = -std::log(1.0 - next_uniform(rng));
      sum += x[v];
    }
    for (int v = 0; v < n; ++v) x[v] /= sum;
    starts.push_back(std::move(x));
  }

  bool have = false;
  for (auto& start : starts) {
    AscentOutcome out = ascend(h.edges(), std::move(start), config);
    result.iterations += out.iterations;
    if (!have || out.value > result.lower_bound ||
        (out.value == result.lower_bound && lex_smaller(out.point, result.maximizer))) {
      result.lower_bound = out.value;
      result.maximizer = std::move(out.point);
      have = true;
    }
  }
  result.restarts = static_cast<int>(starts.size());
  return result;
}

LatticeCertificate lagrangian_upper(const Hypergraph& h, int resolution) {
  const int n = h.vertex_count();
  const int r = h.uniformity();
  LatticeCertificate cert;
  cert.resolution = resolution;
  cert.argmax.assign(std::max(n, 0), 0);
  if (h.edges().empty()) {
    if (n > 0) cert.argmax[0] = resolution;
    return cert;
  }
  if (resolution < r)
    throw std::invalid_argument("resolution too coarse: need at least the uniformity");

  // Guard the integer arithmetic: D^r * |edges| must fit.
  {
    unsigned __int128 cap = 1;
    for (int i = 0; i < r; ++i) cap *= static_cast<unsigned>(resolution);
    cap *= h.edges().size();
    if (cap > static_cast<unsigned __int128>(INT64_MAX))
      throw std::invalid_argument("resolution too large for exact arithmetic");
  }

  LatticeScan scan{h.edges(), n, resolution, -1, {}};
  scan.run();

  long long dr = 1;  // D^r
  for (int i = 0; i < r; ++i) dr *= resolution;
  long long falling = 1;  // D (D-1) ... (D-r+1)
  for (int i = 0; i < r; ++i) falling *= resolution - i;

  cert.lattice_max = Rational(scan.best, dr);
  cert.argmax = scan.best_point;
  cert.moment_bound = Rational(scan.best, falling);
  cert.gradient_bound = gradient_sup_bound(h);
  cert.lipschitz_bound = cert.lattice_max + cert.gradient_bound * Rational(n, resolution);
  cert.upper_bound = std::min(cert.moment_bound, cert.lipschitz_bound);

  if (cert.lattice_max > Rational(0) &&
      cert.upper_bound - cert.lattice_max > cert.lattice_max)
    throw std::invalid_argument("resolution too coarse: correction exceeds lattice maximum");
  return cert;
}

double star_lagrangian_bound(int s) {
  if (s < 3) throw std::invalid_argument("star_lagrangian_bound requires s >= 3");
  return (static_cast<double>(s - 2) / (2.0 * (s - 1))) * (4.0 / 27.0);
}

bool check_blowup_bound(const Hypergraph& pattern, const BlowupSpec& spec,
                        const LagrangianConfig& config) {
  const long long count = blowup_size(pattern, spec);
  long long total = 0;
  for (int t : spec.part_sizes) total += t;

  std::vector<Rational> x;
  x.reserve(spec.part_sizes.size());
  for (int t : spec.part_sizes) x.emplace_back(t, total);
  Rational p = weight_polynomial(pattern, x);

  Rational scale(1);
  for (int i = 0; i < pattern.uniformity(); ++i) scale *= Rational(total);
  if (p * scale != Rational(count)) return false;

  if (pattern.vertex_count() <= 8) {
    LatticeCertificate cert = lagrangian_upper(pattern, 120);
    return p <= cert.upper_bound;
  }
  LagrangianResult lower = lagrangian_lower(pattern, config);
  return to_double(p) <= lower.lower_bound + 1e-9;
}

FiveVertexSweep sweep_five_vertex_bound(const FiveVertexSweepConfig& config) {
  const Hypergraph k53 = make_complete(5, 3);
  const Hypergraph g26 = make_g26();
  const auto& triples = k53.edges();  // 10 triples, lexicographic
  const Rational target = Rational(2, 27) - config.margin;

  struct Partial {
    long long instances = 0, eight = 0, bound_failures = 0, embed_failures = 0;
    double max_lower = -1.0;
    unsigned max_lower_mask = 0;
    Rational max_upper = Rational(0);
    Rational min_gap;
    bool any = false;
  };

  const int total_masks = 1 << 10;
  std::vector<Partial> partials(std::max(chunk_count(total_masks), 1));
  parallel_chunks(total_masks, [&](long long begin, long long end, int chunk) {
    Partial& part = partials[chunk];
    for (long long mask = begin; mask < end; ++mask) {
      int edge_count = std::popcount(static_cast<unsigned>(mask));
      if (edge_count > 8) continue;
      std::vector<VertexSet> edges;
      for (int i = 0; i < 10; ++i)
        if (mask & (1 << i)) edges.push_back(triples[i]);
      Hypergraph instance = Hypergraph::from_masks(3, 5, std::move(edges));

      ++part.instances;
      LatticeCertificate cert = lagrangian_upper(instance, config.resolution);
      if (!(cert.upper_bound < target)) ++part.bound_failures;
      Rational gap = Rational(2, 27) - cert.upper_bound;
      if (!part.any || gap < part.min_gap) part.min_gap = gap;
      if (cert.upper_bound > part.max_upper) part.max_upper = cert.upper_bound;
      part.any = true;

      LagrangianResult lower = lagrangian_lower(instance, config.lower);
      if (lower.lower_bound > part.max_lower) {
        part.max_lower = lower.lower_bound;
        part.max_lower_mask = static_cast<unsigned>(mask);
      }

      if (edge_count == 8) {
        ++part.eight;
        if (!contains_subgraph(instance, g26)) ++part.embed_failures;
      }
    }
  });

  FiveVertexSweep sweep;
  bool any = false;
  for (const auto& part : partials) {
    sweep.instances += part.instances;
    sweep.eight_edge_instances += part.eight;
    sweep.bound_failures += part.bound_failures;
    sweep.embed_failures += part.embed_failures;
    if (part.any) {
      if (!any || part.min_gap < sweep.min_gap) sweep.min_gap = part.min_gap;
      if (part.max_upper > sweep.max_upper) sweep.max_upper = part.max_upper;
      if (part.max_lower > sweep.max_lower_bound ||
          (part.max_lower == sweep.max_lower_bound &&
           part.max_lower_mask < sweep.max_lower_mask)) {
        sweep.max_lower_bound = part.max_lower;
        sweep.max_lower_mask = part.max_lower_mask;
      }
      any = true;
    }
  }
  return sweep;
}

}  // namespace turan
