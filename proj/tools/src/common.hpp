#pragma once

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <string>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/numeric.hpp"

namespace pcf::cli {

using json = nlohmann::ordered_json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  int code = 0;
};

/// Thrown for missing or inconsistent flags that CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceOptions {
  std::string graph;
  std::string hypergraph = "auto-neighborhood";
};

struct ListOptions {
  std::string lists;
  int palette = 0;
};

void add_instance_options(CLI::App* sub, InstanceOptions& o);
void add_list_options(CLI::App* sub, ListOptions& o);

/// Hypergraph from "auto-neighborhood", "auto-star-linear" or a file.
Hypergraph derive_hypergraph(const Graph& g, const std::string& spec, json& inputs);
ConflictInstance load_instance(const InstanceOptions& o, json& inputs);
/// Lists from --lists, or {1..palette} for every vertex.
ListAssignment load_list_option(const ListOptions& o, int n, json& inputs);

json input_entry(const std::string& path);
json record(const std::string& subcommand);
json rational_json(const Rational& q);
json vertices_json(const std::vector<Vertex>& vs);
std::string format_real(long double x);
/// exp(log_value) as a decimal, or "e^<log_value>" when out of range.
std::string format_exp(long double log_value);

/// Worker count from --jobs, else the JOBS environment variable, else 0.
int jobs_from(int flag);

/// Writes the record to --out or stdout and maps the verdict to an exit code.
int emit(Context& ctx, json& rec, const std::string& out_path, Verdict verdict);

void write_text(const std::string& path, const std::string& text);

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Registers a subcommand whose options live in a shared Opts block; the
/// runner's exit code lands in ctx.code.
template <class Opts, class Setup, class Run>
CLI::App* add_command(CLI::App& app, Context& ctx, const std::string& name, const std::string& help, Setup&& setup,
                      Run run) {
  auto opts = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(name, help);
  setup(sub, *opts);
  sub->callback([opts, run, &ctx] { ctx.code = run(*opts, ctx); });
  return sub;
}

void register_coloring_commands(CLI::App& app, Context& ctx);
void register_bound_commands(CLI::App& app, Context& ctx);
void register_fractional_commands(CLI::App& app, Context& ctx);
void register_bench_command(CLI::App& app, Context& ctx);

}  // namespace pcf::cli
