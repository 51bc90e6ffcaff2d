#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gallai/errors.hpp"
#include "gallai/generators.hpp"
#include "gallai/io.hpp"
#include "gallai/operators.hpp"
#include "gallai/regularity.hpp"
#include "gallai/report.hpp"
#include "gallai/spectral.hpp"
#include "gallai/theorems.hpp"

namespace gallai::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string file;
  std::vector<std::string> gen;
  std::string format = "graph6";
  bool batch = false;
};

struct LoadedGraph {
  std::string descriptor;
  Graph graph;
};

void add_input_options(CLI::App* sub, InputOptions& opts) {
  auto* in = sub->add_option("--in", opts.file, "Read the graph from a file (default: stdin)");
  auto* gen = sub->add_option("--gen", opts.gen, "Generate the graph: NAME [PARAMS...]")
                  ->expected(1, CLI::detail::expected_max_vector_size);
  in->excludes(gen);
  sub->add_option("--format", opts.format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  sub->add_flag("--batch", opts.batch, "Treat each graph6 line as a separate graph");
}

std::vector<std::int64_t> parse_integers(const std::vector<std::string>& words) {
  std::vector<std::int64_t> values;
  for (const auto& w : words) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      throw UsageError("generator parameter '" + w + "' is not an integer");
    }
    values.push_back(v);
  }
  return values;
}

Graph generate_or_usage(const std::string& name, const std::vector<std::string>& params) {
  const auto values = parse_integers(params);
  try {
    return generate(name, values);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<LoadedGraph> load_graphs(const InputOptions& opts, std::istream& in) {
  if (!opts.gen.empty()) {
    const std::vector<std::string> params(opts.gen.begin() + 1, opts.gen.end());
    std::string descriptor = "gen:" + opts.gen.front();
    for (const auto& p : params) descriptor += " " + p;
    return {{descriptor, generate_or_usage(opts.gen.front(), params)}};
  }

  std::string text;
  std::string descriptor = "stdin";
  if (!opts.file.empty()) {
    std::ifstream file(opts.file, std::ios::binary);
    if (!file) throw InputError("cannot open '" + opts.file + "'");
    text = read_all(file);
    descriptor = opts.file;
  } else {
    text = read_all(in);
  }

  if (opts.format == "edgelist") return {{descriptor, parse_edge_list(text)}};
  if (!opts.batch) return {{descriptor, parse_graph6(text)}};

  std::istringstream lines(text);
  std::vector<LoadedGraph> graphs;
  std::size_t index = 0;
  for (auto& g : parse_graph6_stream(lines)) {
    graphs.push_back({descriptor + "#" + std::to_string(index++), std::move(g)});
  }
  return graphs;
}

void emit(std::ostream& out, const json& j, bool batch) {
  out << (batch ? j.dump() : j.dump(2)) << "\n";
}

Graph transform(const std::string& op, const Graph& g) {
  if (op == "line") return line_graph(g).graph;
  if (op == "gallai") return gallai(g).graph;
  if (op == "antigallai") return anti_gallai(g).graph;
  if (op == "semitotal") return semi_total_point(g);
  if (op == "complement") return complement(g);
  throw UsageError("unknown transform '" + op + "'");
}

Spectrum spectrum_of(const Graph& g, const std::string& closed_form) {
  if (closed_form.empty()) return eigenvalues(g);
  if (closed_form == "srg") {
    const auto r = classify(g);
    if (r.level != RegularityLevel::strongly_regular) {
      throw InputError("closed form 'srg' needs a strongly regular graph");
    }
    return srg_spectrum(r.n, *r.k, *r.lambda, *r.mu);
  }
  // rcn: the input is C_n and the result is the closed-form spectrum of R(C_n).
  const auto r = classify(g);
  if (g.order() < 3 || !is_connected(g) || r.k != 2) {
    throw InputError("closed form 'rcn' needs a cycle C_n as input");
  }
  return rcn_spectrum(r.n);
}

std::vector<double> parse_spectrum_argument(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream file(arg);
    json j;
    try {
      j = json::parse(file);
    } catch (const json::parse_error& e) {
      throw InputError("'" + arg + "' is not valid JSON: " + e.what());
    }
    if (j.is_array()) return j.get<std::vector<double>>();
    return j.at("values").get<std::vector<double>>();
  }
  std::vector<double> values;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw InputError("'" + item + "' is not a number");
    }
    values.push_back(v);
  }
  if (values.empty()) throw InputError("empty spectrum '" + arg + "'");
  return values;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

  void lap(std::map<std::string, double>& timing, const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    if (enabled_) timing[stage] = std::chrono::duration<double>(now - start_).count();
    start_ = now;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Gallai, anti-Gallai and line graph operators on strongly regular graphs", "gallai"};
  app.require_subcommand(1);

  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as graph6");
  std::string gen_name;
  std::vector<std::string> gen_params;
  std::string out_file;
  generate_cmd->add_option("name", gen_name, "Generator name")->required();
  generate_cmd->add_option("params", gen_params, "Integer parameters");
  generate_cmd->add_option("--out", out_file, "Write to a file instead of stdout");

  auto* transform_cmd = app.add_subcommand("transform", "Apply a graph operator");
  std::string op;
  InputOptions transform_in;
  transform_cmd->add_option("operator", op, "line|gallai|antigallai|semitotal|complement")
      ->required()
      ->check(CLI::IsMember({"line", "gallai", "antigallai", "semitotal", "complement"}));
  add_input_options(transform_cmd, transform_in);

  auto* params_cmd = app.add_subcommand("params", "Regularity classification as JSON");
  InputOptions params_in;
  add_input_options(params_cmd, params_in);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum as JSON");
  InputOptions spectrum_in;
  std::string closed_form;
  add_input_options(spectrum_cmd, spectrum_in);
  spectrum_cmd->add_option("--closed-form", closed_form, "srg: from SRG parameters; rcn: R(C_n) of an input cycle")
      ->check(CLI::IsMember({"srg", "rcn"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check theorems on a graph");
  std::string theorem = "all";
  InputOptions verify_in;
  std::string json_file;
  bool timing = false;
  verify_cmd->add_option("theorem", theorem, "Theorem id or 'all'")->required();
  add_input_options(verify_cmd, verify_in);
  verify_cmd->add_option("--json", json_file, "Also write the report to this file");
  verify_cmd->add_flag("--timing", timing, "Record per-stage wall-clock time in the report");

  auto* interlace_cmd = app.add_subcommand("interlace", "Test eigenvalue interlacing");
  std::string inner, outer;
  interlace_cmd->add_option("--inner", inner, "Comma-separated values or a spectrum JSON file")->required();
  interlace_cmd->add_option("--outer", outer, "Comma-separated values or a spectrum JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (generate_cmd->parsed()) {
      const Graph g = generate_or_usage(gen_name, gen_params);
      if (out_file.empty()) {
        out << write_graph6(g) << "\n";
      } else {
        std::ofstream file(out_file);
        if (!file) throw InputError("cannot write '" + out_file + "'");
        file << write_graph6(g) << "\n";
      }
      return kSuccess;
    }

    if (transform_cmd->parsed()) {
      for (const auto& item : load_graphs(transform_in, in)) out << write_graph6(transform(op, item.graph)) << "\n";
      return kSuccess;
    }

    if (params_cmd->parsed()) {
      for (const auto& item : load_graphs(params_in, in)) emit(out, json(classify(item.graph)), params_in.batch);
      return kSuccess;
    }

    if (spectrum_cmd->parsed()) {
      for (const auto& item : load_graphs(spectrum_in, in)) {
        emit(out, json(spectrum_of(item.graph, closed_form)), spectrum_in.batch);
      }
      return kSuccess;
    }

    if (verify_cmd->parsed()) {
      const auto ids = theorem_ids();
      if (theorem != "all" && std::find(ids.begin(), ids.end(), theorem) == ids.end()) {
        throw UsageError("unknown theorem id '" + theorem + "'");
      }
      Stopwatch clock(timing);
      std::map<std::string, double> load_time;
      const auto graphs = load_graphs(verify_in, in);
      clock.lap(load_time, "load");

      bool failed = false;
      std::ofstream json_out;
      if (!json_file.empty()) {
        json_out.open(json_file);
        if (!json_out) throw InputError("cannot write '" + json_file + "'");
      }
      for (const auto& item : graphs) {
        Report report;
        report.input = item.descriptor;
        report.timing = load_time;
        report.regularity = classify(item.graph);
        clock.lap(report.timing, "classify");
        report.spectra.push_back({"input", eigenvalues(item.graph)});
        clock.lap(report.timing, "spectrum");
        if (theorem == "all") {
          report.verdicts = verify_all(item.graph);
        } else {
          report.verdicts.push_back(verify_by_id(theorem, item.graph));
        }
        clock.lap(report.timing, "verify");
        failed = failed || report.any_failed();
        const json j = report;
        emit(out, j, verify_in.batch);
        if (json_out.is_open()) emit(json_out, j, verify_in.batch);
      }
      return failed ? kVerificationFailure : kSuccess;
    }

    if (interlace_cmd->parsed()) {
      const bool result = interlaces(parse_spectrum_argument(inner), parse_spectrum_argument(outer));
      out << (result ? "true" : "false") << "\n";
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsageError;
}

}  // namespace gallai::cli
