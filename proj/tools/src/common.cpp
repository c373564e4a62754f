#include "common.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pcf/io.hpp"

namespace pcf::cli {

void add_instance_options(CLI::App* sub, InstanceOptions& o) {
  sub->add_option("--graph", o.graph, "graph file (DIMACS edge format)")->required();
  sub->add_option("--hypergraph", o.hypergraph, "auto-neighborhood, auto-star-linear or a hypergraph file")
      ->capture_default_str();
}

void add_list_options(CLI::App* sub, ListOptions& o) {
  auto* lists = sub->add_option("--lists", o.lists, "list assignment file");
  auto* palette = sub->add_option("--palette", o.palette, "give every vertex the list {1..K}")
                      ->check(CLI::PositiveNumber);
  lists->excludes(palette);
}

json input_entry(const std::string& path) {
  return {{"path", path}, {"fnv1a", io::fnv1a_hex(io::read_file(path))}};
}

Hypergraph derive_hypergraph(const Graph& g, const std::string& spec, json& inputs) {
  if (spec == "auto-neighborhood") return neighborhood_hypergraph(g);
  if (spec == "auto-star-linear") return star_linear_hypergraph(g);
  inputs.push_back(input_entry(spec));
  return io::load_hypergraph(spec, g.num_vertices());
}

ConflictInstance load_instance(const InstanceOptions& o, json& inputs) {
  Graph g = io::load_graph(o.graph);
  inputs.push_back(input_entry(o.graph));
  Hypergraph h = derive_hypergraph(g, o.hypergraph, inputs);
  return ConflictInstance(std::move(g), std::move(h));
}

ListAssignment load_list_option(const ListOptions& o, int n, json& inputs) {
  if (!o.lists.empty()) {
    inputs.push_back(input_entry(o.lists));
    return io::load_lists(o.lists, n);
  }
  if (o.palette > 0) return ListAssignment::uniform(n, o.palette);
  throw UsageError("one of --lists or --palette is required");
}

json record(const std::string& subcommand) {
  json r;
  r["schema"] = 1;
  r["subcommand"] = subcommand;
  r["inputs"] = json::array();
  return r;
}

json rational_json(const Rational& q) { return json::array({q.get_num().get_str(), q.get_den().get_str()}); }

json vertices_json(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

std::string format_real(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", x);
  return buf;
}

std::string format_exp(long double log_value) {
  if (log_value < 11000.0L && log_value > -11000.0L) return format_real(std::exp(log_value));
  return "e^" + format_real(log_value);
}

int jobs_from(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 0;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ParameterError("write to '" + path + "' failed");
}

int emit(Context& ctx, json& rec, const std::string& out_path, Verdict verdict) {
  rec["verdict"] = std::string(to_string(verdict));
  const std::string text = rec.dump(2) + "\n";
  if (out_path.empty()) {
    ctx.out << text;
  } else {
    write_text(out_path, text);
  }
  return verdict == Verdict::pass ? 0 : 1;
}

}  // namespace pcf::cli
