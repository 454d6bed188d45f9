#include "isolab/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "isolab/error.hpp"

namespace isolab {

namespace {

std::string_view strip(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_index(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text, GraphOptions options) {
  std::size_t line_no = 0;
  std::uint64_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = strip(raw);
    if (line.empty()) continue;
    const auto tok = tokens(line);
    if (tok.size() != 2) throw ParseError(line_no, "expected two fields");

    if (!have_header) {
      if (tok[0] != "n") throw ParseError(line_no, "expected header 'n <count>'");
      n = to_index(tok[1], line_no);
      if (n == 0 || n > 0xFFFFFFFFULL) throw ParseError(line_no, "vertex count out of range");
      seen.resize(n);
      have_header = true;
      continue;
    }

    const auto a = to_index(tok[0], line_no);
    const auto b = to_index(tok[1], line_no);
    if (a >= n || b >= n) throw ParseError(line_no, "vertex index out of range");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    auto& bucket = seen[e.u];
    for (Vertex w : bucket) {
      if (w == e.v) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
      }
    }
    bucket.push_back(e.v);
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n <count>'");
  return Graph::from_edges(static_cast<Vertex>(n), edges, options);
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph read_edge_list_file(const std::string& path, GraphOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str(), options);
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << write_edge_list(g);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace isolab
