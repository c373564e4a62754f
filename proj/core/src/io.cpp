#include "pcf/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pcf::io {

namespace {

struct LineReader {
  explicit LineReader(std::istream& stream) : in(stream) {}

  std::istream& in;
  std::string line;
  int number = 0;

  // Next line that is neither blank nor a comment.
  bool next(char comment) {
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == comment) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(number) + ": " + what);
  }
};

long parse_long(const std::string& token, const LineReader& r) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    r.fail("expected an integer, got '" + token + "'");
  }
  if (used != token.size()) r.fail("expected an integer, got '" + token + "'");
  return value;
}

Vertex parse_vertex(const std::string& token, int n, const LineReader& r) {
  const long v = parse_long(token, r);
  if (v < 1 || v > n) r.fail("vertex " + token + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

Color parse_color(const std::string& token, const LineReader& r) {
  const long c = parse_long(token, r);
  if (c < 1 || c > 1'000'000'000L) r.fail("color " + token + " must be a positive integer");
  return static_cast<Color>(c);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

// Per-vertex records "v rest..." with each vertex present exactly once.
template <class Fn>
void read_vertex_records(std::istream& in, int n, Fn&& fn) {
  LineReader r(in);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int count = 0;
  while (r.next('#')) {
    auto parts = tokens(r.line);
    const Vertex v = parse_vertex(parts[0], n, r);
    if (seen[static_cast<std::size_t>(v)]) r.fail("vertex " + parts[0] + " listed twice");
    seen[static_cast<std::size_t>(v)] = 1;
    ++count;
    parts.erase(parts.begin());
    fn(v, parts, r);
  }
  if (count != n) {
    throw ParseError("expected a record for each of " + std::to_string(n) + " vertices, found " +
                     std::to_string(count));
  }
}

template <class T, class Reader>
T load(const std::filesystem::path& path, Reader&& reader) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path.string() + "'");
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader r(in);
  long n = -1, m = -1;
  std::vector<Edge> edges;
  while (r.next('c')) {
    const auto parts = tokens(r.line);
    if (parts[0] == "p") {
      if (n >= 0) r.fail("duplicate 'p' header");
      if (parts.size() != 4 || parts[1] != "edge") r.fail("expected 'p edge <n> <m>'");
      n = parse_long(parts[2], r);
      m = parse_long(parts[3], r);
      if (n < 0 || m < 0) r.fail("negative size in header");
    } else if (parts[0] == "e") {
      if (n < 0) r.fail("edge before 'p edge' header");
      if (parts.size() != 3) r.fail("expected 'e <u> <v>'");
      const Vertex u = parse_vertex(parts[1], static_cast<int>(n), r);
      const Vertex v = parse_vertex(parts[2], static_cast<int>(n), r);
      if (u == v) r.fail("self-loop");
      edges.emplace_back(u, v);
    } else {
      r.fail("unknown record '" + parts[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'p edge' header");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Hypergraph read_hypergraph(std::istream& in, int n) {
  LineReader r(in);
  std::vector<std::vector<Vertex>> edges;
  while (r.next('#')) {
    std::vector<Vertex> e;
    for (const auto& t : tokens(r.line)) e.push_back(parse_vertex(t, n, r));
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i] + 1;
    out << '\n';
  }
}

Coloring read_coloring(std::istream& in, int n) {
  Coloring phi(static_cast<std::size_t>(n), 0);
  read_vertex_records(in, n, [&](Vertex v, const std::vector<std::string>& rest, const LineReader& r) {
    if (rest.size() != 1) r.fail("expected '<vertex> <color>'");
    phi[static_cast<std::size_t>(v)] = parse_color(rest[0], r);
  });
  return phi;
}

void write_coloring(std::ostream& out, const Coloring& phi) {
  for (std::size_t v = 0; v < phi.size(); ++v) out << v + 1 << ' ' << phi[v] << '\n';
}

ListAssignment read_lists(std::istream& in, int n) {
  std::vector<std::vector<Color>> lists(static_cast<std::size_t>(n));
  read_vertex_records(in, n, [&](Vertex v, const std::vector<std::string>& rest, const LineReader& r) {
    if (rest.empty()) r.fail("empty list");
    for (const auto& t : rest) lists[static_cast<std::size_t>(v)].push_back(parse_color(t, r));
  });
  return ListAssignment(std::move(lists));
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  for (int v = 0; v < lists.num_vertices(); ++v) {
    out << v + 1;
    for (Color c : lists[v]) out << ' ' << c;
    out << '\n';
  }
}

SetColoring read_set_coloring(std::istream& in, int n) {
  SetColoring psi;
  psi.sets.resize(static_cast<std::size_t>(n));
  LineReader r(in);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  bool header = false;
  int count = 0;
  while (r.next('#')) {
    auto parts = tokens(r.line);
    if (parts[0] == "p") {
      if (header || count > 0) r.fail("'p ab' header must come first");
      if (parts.size() != 4 || parts[1] != "ab") r.fail("expected 'p ab <a> <b>'");
      psi.a = static_cast<int>(parse_long(parts[2], r));
      psi.b = static_cast<int>(parse_long(parts[3], r));
      header = true;
      continue;
    }
    if (parts.size() != 2) r.fail("expected '<vertex> <c1>,<c2>,...'");
    const Vertex v = parse_vertex(parts[0], n, r);
    if (seen[static_cast<std::size_t>(v)]) r.fail("vertex " + parts[0] + " listed twice");
    seen[static_cast<std::size_t>(v)] = 1;
    ++count;
    std::string item;
    std::istringstream ss(parts[1]);
    auto& set = psi.sets[static_cast<std::size_t>(v)];
    while (std::getline(ss, item, ',')) set.push_back(parse_color(item, r));
    std::sort(set.begin(), set.end());
  }
  if (count != n) {
    throw ParseError("expected a record for each of " + std::to_string(n) + " vertices, found " +
                     std::to_string(count));
  }
  if (!header) {
    for (const auto& set : psi.sets) {
      if (!set.empty()) psi.a = std::max(psi.a, set.back());
    }
    psi.b = n > 0 ? static_cast<int>(psi.sets.front().size()) : 0;
  }
  psi.validate();
  return psi;
}

void write_set_coloring(std::ostream& out, const SetColoring& psi) {
  out << "p ab " << psi.a << ' ' << psi.b << '\n';
  for (std::size_t v = 0; v < psi.sets.size(); ++v) {
    out << v + 1 << ' ';
    for (std::size_t i = 0; i < psi.sets[v].size(); ++i) out << (i ? "," : "") << psi.sets[v][i];
    out << '\n';
  }
}

Graph load_graph(const std::filesystem::path& path) {
  return load<Graph>(path, [](std::istream& in) { return read_graph(in); });
}

Hypergraph load_hypergraph(const std::filesystem::path& path, int n) {
  return load<Hypergraph>(path, [n](std::istream& in) { return read_hypergraph(in, n); });
}

Coloring load_coloring(const std::filesystem::path& path, int n) {
  return load<Coloring>(path, [n](std::istream& in) { return read_coloring(in, n); });
}

ListAssignment load_lists(const std::filesystem::path& path, int n) {
  return load<ListAssignment>(path, [n](std::istream& in) { return read_lists(in, n); });
}

SetColoring load_set_coloring(const std::filesystem::path& path, int n) {
  return load<SetColoring>(path, [n](std::istream& in) { return read_set_coloring(in, n); });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pcf::io
