#pragma once

#include <optional>
#include <vector>

#include "turan/rational.hpp"
#include "turan/vertex_set.hpp"

namespace turan {

/// An r-uniform hypergraph on labeled vertices {0, ..., n-1}.
///
/// Edges are stored as vertex masks, duplicate-free, in lexicographic order
/// of their sorted vertex tuples. Equal values therefore have identical
/// representations and serialize identically. Instances are immutable after
/// construction and safe to share across threads; every operation below is a
/// pure function.
class Hypergraph {
 public:
  /// Empty hypergraph.
  Hypergraph(int uniformity, int vertex_count);

  /// Builds from explicit vertex lists; validates, sorts and deduplicates.
  static Hypergraph from_edges(int uniformity, int vertex_count,
                               const std::vector<std::vector<int>>& edges);

  /// Builds from masks; validates cardinality and range, sorts, deduplicates.
  static Hypergraph from_masks(int uniformity, int vertex_count,
                               std::vector<VertexSet> edges);

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  long long size() const { return static_cast<long long>(edges_.size()); }
  bool has_edge(const VertexSet& e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int r_;
  int n_;
  std::vector<VertexSet> edges_;
};

/// All (r-1)-sets contained in some edge.
Hypergraph shadow(const Hypergraph& h);

/// The (r-1)-graph of co-edges of v. Throws if v is out of range.
Hypergraph link(const Hypergraph& h, int v);

long long degree(const Hypergraph& h, int v);
long long min_degree(const Hypergraph& h);

/// Exact minimum size of a vertex set meeting every edge; 0 for an edgeless
/// hypergraph. Branches on the vertices of an uncovered edge.
int transversal_number(const Hypergraph& h);

/// Vertices outside s that complete s inside some edge.
VertexSet neighborhood(const Hypergraph& h, const VertexSet& s);

/// Some edge contains both u and v.
bool adjacent(const Hypergraph& h, int u, int v);

/// Restriction to s, relabeled to {0, ..., |s|-1} preserving label order.
Hypergraph induced_subgraph(const Hypergraph& h, const VertexSet& s);

/// All r-sets of the ground set not present in h.
Hypergraph complement(const Hypergraph& h);

struct BlowupSpec {
  std::vector<int> part_sizes;  // one entry per pattern vertex, all >= 1
};

/// Replaces pattern vertex i by a block of part_sizes[i] consecutive labels
/// (blocks in pattern-vertex order) and every edge by the complete r-partite
/// bundle across its blocks.
Hypergraph blowup(const Hypergraph& pattern, const BlowupSpec& spec);

/// Edge count of blowup(pattern, spec) without materializing it.
long long blowup_size(const Hypergraph& pattern, const BlowupSpec& spec);

/// pattern vertex -> host vertex.
using VertexMap = std::vector<int>;

/// Injective edge-preserving embedding of pattern into host, or nullopt.
/// Pattern vertices are matched in order of descending degree (ties by
/// label), host candidates in increasing label, so the returned witness is
/// deterministic.
std::optional<VertexMap> contains_subgraph(const Hypergraph& pattern, const Hypergraph& host);

/// Edge-preserving map (not necessarily injective), or nullopt.
std::optional<VertexMap> homomorphism(const Hypergraph& pattern, const Hypergraph& host);

/// Every vertex pair lies in some edge. Vacuously true for n <= 1.
bool is_two_covered(const Hypergraph& h);

/// A vertex common to all edges, smallest first; vertex 0 for an edgeless
/// hypergraph with n >= 1, nullopt for n = 0 or when no center exists.
std::optional<int> star_center(const Hypergraph& h);

/// Nonnegative weights summing to 1 (within 1e-12), one per vertex.
using SimplexPoint = std::vector<double>;

/// p_H(x) = sum over edges of the product of member weights. Throws on
/// dimension mismatch, a negative entry, or a sum away from 1.
double weight_polynomial(const Hypergraph& h, const SimplexPoint& x);

/// Exact evaluation; weights must be nonnegative and sum to exactly 1.
Rational weight_polynomial(const Hypergraph& h, const std::vector<Rational>& x);

}  // namespace turan
