#include "turan/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace turan {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + message);
}

struct MaskHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace

void write_edge_list(std::ostream& out, const Hypergraph& h) {
  out << h.uniformity() << ' ' << h.vertex_count() << '\n';
  for (const auto& e : h.edges()) {
    bool first = true;
    e.for_each([&](int v) {
      if (!first) out << ' ';
      out << v;
      first = false;
    });
    out << '\n';
  }
}

std::string to_edge_list(const Hypergraph& h) {
  std::ostringstream out;
  write_edge_list(out, h);
  return out.str();
}

Hypergraph parse_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int r = -1, n = -1;
  std::vector<VertexSet> masks;
  std::unordered_set<VertexSet, MaskHash> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') continue;

    std::istringstream tokens{std::string(line)};
    if (r < 0) {
      if (!(tokens >> r >> n)) fail(line_no, "expected header 'r n'");
      std::string extra;
      if (tokens >> extra) fail(line_no, "trailing token '" + extra + "' after header");
      if (r < 1) fail(line_no, "uniformity must be positive");
      if (n < 0 || n > VertexSet::kMaxVertices)
        fail(line_no, "vertex count out of range");
      continue;
    }

    std::vector<int> edge;
    int v;
    while (tokens >> v) edge.push_back(v);
    if (!tokens.eof()) fail(line_no, "malformed vertex index");
    if (static_cast<int>(edge.size()) != r)
      fail(line_no, "expected " + std::to_string(r) + " vertices, got " +
                        std::to_string(edge.size()));
    VertexSet m;
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (edge[i] < 0 || edge[i] >= n) fail(line_no, "vertex index out of range");
      if (i > 0 && edge[i] <= edge[i - 1])
        fail(line_no, "vertices must be strictly increasing");
      m.set(edge[i]);
    }
    if (!seen.insert(m).second) fail(line_no, "duplicate edge");
    masks.push_back(m);
  }
  if (r < 0) throw std::runtime_error("empty input: missing 'r n' header");
  return Hypergraph::from_masks(r, n, std::move(masks));
}

Hypergraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Hypergraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return parse_edge_list(in);
  } catch (const std::runtime_error& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
}

void write_edge_list_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, h);
}

}  // namespace turan
