#pragma once

#include <iosfwd>
#include <string>

#include "turan/hypergraph.hpp"

namespace turan {

/// Text interchange format. First line "r n", then one edge per line as r
/// space-separated 0-based vertex indices in increasing order; lines come out
/// in the canonical lexicographic edge order, so serialization is bit-exact.
/// Lines starting with '#' are comments.
std::string to_edge_list(const Hypergraph& h);

void write_edge_list(std::ostream& out, const Hypergraph& h);

/// Parses the format above. Edge lines may appear in any order but vertices
/// within a line must be strictly increasing; duplicate edges are rejected.
/// Errors carry the offending line number.
Hypergraph parse_edge_list(std::istream& in);

Hypergraph parse_edge_list(const std::string& text);

/// Reads from a file path.
Hypergraph read_edge_list_file(const std::string& path);

void write_edge_list_file(const std::string& path, const Hypergraph& h);

}  // namespace turan
