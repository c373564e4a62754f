#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/numeric.hpp"

namespace pcf::io {

/// Malformed input; the message names the line.
class ParseError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// All files use 1-based vertex ids; in memory vertices are 0-based.

/// "p edge n m" header, "e u v" lines, "c" comment lines.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// One hyperedge per line as whitespace-separated vertex ids. Blank lines
/// and lines starting with '#' are skipped.
Hypergraph read_hypergraph(std::istream& in, int n);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// "vertex color" per line; every vertex exactly once.
Coloring read_coloring(std::istream& in, int n);
void write_coloring(std::ostream& out, const Coloring& phi);

/// "vertex c1 c2 ..." per line; every vertex exactly once.
ListAssignment read_lists(std::istream& in, int n);
void write_lists(std::ostream& out, const ListAssignment& lists);

/// Optional "p ab a b" header, then "vertex c1,c2,...". Without a header, a
/// is the largest color and b the common set size.
SetColoring read_set_coloring(std::istream& in, int n);
void write_set_coloring(std::ostream& out, const SetColoring& psi);

/// File wrappers; open failures throw ParameterError naming the path.
Graph load_graph(const std::filesystem::path& path);
Hypergraph load_hypergraph(const std::filesystem::path& path, int n);
Coloring load_coloring(const std::filesystem::path& path, int n);
ListAssignment load_lists(const std::filesystem::path& path, int n);
SetColoring load_set_coloring(const std::filesystem::path& path, int n);

std::string read_file(const std::filesystem::path& path);
/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace pcf::io
