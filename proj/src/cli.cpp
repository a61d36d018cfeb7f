#include "gradvar/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gradvar/analysis.hpp"
#include "gradvar/gvf.hpp"
#include "gradvar/harmonic.hpp"
#include "gradvar/io.hpp"

namespace gradvar::cli {
namespace {

using nlohmann::json;

// Raised for command-line misuse detected after parsing (maps to exit 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Input {
  GraphDomain graph;
  BoundaryData boundary;
  std::optional<GridGraph> grid;
  std::vector<std::optional<double>> values;
  std::string digest;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

Input load_input(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  const bool as_json = format.empty() ? is_json_path(path) : format == "json";
  Input input;
  input.digest = digest(text);
  if (as_json) {
    auto parsed = io::parse_graph_json(text);
    input.graph = std::move(parsed.graph);
    input.boundary = std::move(parsed.boundary);
    input.values.resize(input.graph.vertex_count());
    for (const auto& [v, value] : input.boundary.entries()) input.values[v] = value;
  } else {
    auto parsed = io::parse_grid_csv(text);
    input.graph = parsed.graph.graph;
    input.boundary = std::move(parsed.anchors);
    input.values = std::move(parsed.values);
    input.grid = std::move(parsed.graph);
  }
  return input;
}

// A field file holds one fixed value per vertex. For grid inputs it must have
// the same shape and mask; for graph inputs values are read in row-major order.
ScalarField load_field(const Input& input, const std::string& path, double level_step) {
  const auto model = io::parse_grid_tokens(read_file(path));
  ScalarField field{{}, level_step};
  if (input.grid) {
    if (model.width != input.grid->width || model.height != input.grid->height) {
      throw InvalidInput("field '" + path + "' does not match the input grid dimensions");
    }
    field.values.resize(input.grid->vertex_to_cell.size());
    for (std::size_t i = 0; i < model.tokens.size(); ++i) {
      const auto& token = model.tokens[i];
      const auto vertex = input.grid->cell_to_vertex[i];
      if (vertex.has_value() != (token.kind != io::TokenKind::outside)) {
        throw InvalidInput("field '" + path + "' does not match the input mask");
      }
      if (!vertex) continue;
      if (token.kind != io::TokenKind::fixed) {
        throw InvalidInput("field '" + path + "' has an unknown cell");
      }
      field.values[*vertex] = token.value;
    }
    return field;
  }
  for (const auto& token : model.tokens) {
    if (token.kind != io::TokenKind::fixed) {
      throw InvalidInput("field '" + path + "' must contain only numbers");
    }
    field.values.push_back(token.value);
  }
  if (field.size() != input.graph.vertex_count()) {
    throw InvalidInput("field '" + path + "' has " + std::to_string(field.size()) +
                       " values, expected " + std::to_string(input.graph.vertex_count()));
  }
  return field;
}

std::string format_field(const Input& input, const ScalarField& field) {
  return input.grid ? io::format_field_csv(*input.grid, field) : io::format_field_row(field);
}

void emit_field(const Input& input, const ScalarField& field, const std::string& output,
                const std::string& heatmap, std::ostream& out) {
  if (!heatmap.empty() && !input.grid) throw UsageError("--heatmap needs a grid CSV input");
  if (output.empty()) {
    out << format_field(input, field);
  } else {
    write_file(output, format_field(input, field));
  }
  if (!heatmap.empty()) write_file(heatmap, io::write_pgm(*input.grid, field));
}

Vertex parse_vertex(const Input& input, const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    if (!input.grid) throw UsageError("row:column vertices need a grid CSV input");
    const auto row = static_cast<std::size_t>(std::stoul(text.substr(0, colon)));
    const auto col = static_cast<std::size_t>(std::stoul(text.substr(colon + 1)));
    if (row >= input.grid->height || col >= input.grid->width) {
      throw InvalidInput("cell " + text + " is outside the grid");
    }
    const auto v = input.grid->vertex_at(row, col);
    if (!v) throw InvalidInput("cell " + text + " is outside the domain");
    return *v;
  }
  std::size_t used = 0;
  const auto v = static_cast<Vertex>(std::stoul(text, &used));
  if (used != text.size()) throw InvalidInput("bad vertex '" + text + "'");
  if (!input.graph.contains(v)) throw InvalidInput("vertex " + text + " is not in the domain");
  return v;
}

json report_skeleton(const std::string& command, const std::vector<std::string>& args,
                     const std::optional<std::string>& input_digest) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = command;
  doc["arguments"] = json(std::vector<std::string>(args.begin() + 1, args.end()));
  doc["input_digest"] = input_digest ? json(*input_digest) : json(nullptr);
  doc["results"] = json::object();
  doc["violations"] = json::array();
  doc["assertions"] = json::array();
  return doc;
}

void finish_report(json& doc, int status, const std::string& path) {
  doc["exit_status"] = status;
  if (!path.empty()) write_file(path, doc.dump(2) + "\n");
}

json slope_json(const SlopeResult& slope) {
  return {{"from", slope.from},
          {"to", slope.to},
          {"geodesic_length", slope.geodesic_length},
          {"average_slope", slope.average_slope},
          {"path", slope.witness_path.vertices}};
}

const char* relation_name(cases::Relation relation) {
  switch (relation) {
    case cases::Relation::equal:
      return "equal";
    case cases::Relation::at_most:
      return "at_most";
    case cases::Relation::less_than:
      return "less_than";
    case cases::Relation::greater_than:
      return "greater_than";
  }
  return "equal";
}

json assertion_json(const cases::Assertion& a) {
  return {{"name", a.name},         {"relation", relation_name(a.relation)},
          {"expected", a.expected}, {"actual", a.actual},
          {"tolerance", a.tolerance}, {"passed", a.passed}};
}

SolverMethod parse_method(const std::string& name) {
  if (name == "jacobi") return SolverMethod::jacobi;
  if (name == "gauss-seidel" || name == "gauss_seidel") return SolverMethod::gauss_seidel;
  if (name == "sor") return SolverMethod::sor;
  throw UsageError("unknown method '" + name + "'");
}

ExtensionMode parse_mode(const std::string& name) {
  if (name == "lower") return ExtensionMode::lower;
  if (name == "upper") return ExtensionMode::upper;
  if (name == "midpoint") return ExtensionMode::midpoint;
  throw UsageError("unknown mode '" + name + "'");
}

struct Options {
  std::string input;
  std::string format;
  std::string report;
  std::string output;
  std::string heatmap;
  std::string field;
  std::string from;
  std::string to;
  std::string mode = "lower";
  std::string method = "gauss-seidel";
  std::string case_name;
  double step = 1.0;
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  double omega = 1.5;
  bool exact = false;
};

int run_check(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const auto input = load_input(o.input, o.format);
  auto doc = report_skeleton("check", args, input.digest);
  int status = kExitOk;
  const bool complete = std::all_of(input.values.begin(), input.values.end(),
                                    [](const auto& v) { return v.has_value(); });
  if (complete) {
    ScalarField field{{}, o.step};
    for (const auto& v : input.values) field.values.push_back(*v);
    const auto report = check_gvf(input.graph, field);
    doc["results"] = {{"mode", "field"},
                      {"level_step", o.step},
                      {"gradually_varied", report.gradually_varied()},
                      {"max_adjacent_difference", report.max_adjacent_difference}};
    for (const auto& violation : report.violations) {
      doc["violations"].push_back(
          {{"u", violation.u}, {"v", violation.v}, {"difference", violation.difference}});
      out << "violation: " << violation.u << " - " << violation.v
          << " differ by " << io::format_number(violation.difference) << "\n";
    }
    out << (report.gradually_varied() ? "gradually varied" : "not gradually varied")
        << " (max adjacent difference " << io::format_number(report.max_adjacent_difference)
        << ", step " << io::format_number(o.step) << ")\n";
    if (!report.gradually_varied()) status = kExitCheckFailed;
  } else {
    const auto report = check_feasibility(input.graph, input.boundary, o.step);
    doc["results"] = {{"mode", "boundary"}, {"level_step", o.step}, {"feasible", report.feasible}};
    if (report.witness) {
      const auto& w = *report.witness;
      doc["violations"].push_back(
          {{"p", w.p}, {"q", w.q}, {"difference", w.difference}, {"distance", w.distance}});
      out << "not extendable: |f(" << w.p << ") - f(" << w.q
          << ")| = " << io::format_number(w.difference) << " > step * " << w.distance << "\n";
      status = kExitCheckFailed;
    } else {
      out << "extendable\n";
    }
  }
  finish_report(doc, status, o.report);
  return status;
}

int run_extend(const Options& o, std::ostream& out, std::ostream& err) {
  const auto input = load_input(o.input, o.format);
  try {
    const auto field = extend_gvf(input.graph, input.boundary, o.step, parse_mode(o.mode));
    emit_field(input, field, o.output, o.heatmap, out);
  } catch (const InfeasibleBoundary& e) {
    err << "gvh: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run_harmonic(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const auto input = load_input(o.input, o.format);
  auto doc = report_skeleton("harmonic", args, input.digest);
  int status = kExitOk;
  ScalarField field;
  if (o.exact) {
    field = exact_solve(input.graph, input.boundary);
    doc["results"] = {{"method", "exact"},
                      {"max_residual", residuals(input.graph, field, input.boundary).max_residual}};
  } else {
    SolverConfig config;
    config.method = parse_method(o.method);
    config.tolerance = o.tolerance;
    config.max_iterations = o.max_iterations;
    config.omega = o.omega;
    auto result = solve_dirichlet(input.graph, input.boundary, config);
    doc["results"] = {{"method", o.method},
                      {"iterations", result.iterations},
                      {"final_residual", result.final_residual},
                      {"converged", result.converged},
                      {"tolerance", config.tolerance}};
    if (!result.converged) {
      doc["violations"].push_back({{"reason", "not converged"},
                                   {"final_residual", result.final_residual}});
      status = kExitCheckFailed;
    }
    field = std::move(result.field);
  }
  emit_field(input, field, o.output, o.heatmap, out);
  finish_report(doc, status, o.report);
  return status;
}

int run_slope(const Options& o, std::ostream& out) {
  const auto input = load_input(o.input, o.format);
  const auto field = load_field(input, o.field, 1.0);
  const auto slope = average_slope(input.graph, field, parse_vertex(input, o.from),
                                   parse_vertex(input, o.to));
  out << slope_json(slope).dump(2) << "\n";
  return kExitOk;
}

int run_semipreserve(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  const auto input = load_input(o.input, o.format);
  const auto field = load_field(input, o.field, 1.0);
  const auto anchors = input.boundary.vertices();
  const auto result = semi_preserving_ratio(input.graph, field, anchors);
  json results = {{"numerator", result.numerator},
                  {"denominator", result.denominator},
                  {"ratio", result.ratio ? json(*result.ratio) : json(nullptr)},
                  {"degenerate", result.degenerate()},
                  {"max_boundary_slope", slope_json(result.denominator_witness)}};
  if (result.numerator_witness.edge) {
    results["max_adjacent_edge"] = {result.numerator_witness.edge->first,
                                    result.numerator_witness.edge->second};
  }
  if (input.grid) {
    const double ks[] = {1.0, 2.0};
    json knorm = json::array();
    for (const auto& entry : k_norm_slope_report(*input.grid, field, anchors, ks)) {
      knorm.push_back({{"k", entry.k},
                       {"max_gradient", entry.max_gradient},
                       {"ratio", entry.ratio ? json(*entry.ratio) : json(nullptr)}});
    }
    results["k_norm_diagnostics"] = knorm;
  }
  out << results.dump(2) << "\n";
  auto doc = report_skeleton("semipreserve", args, input.digest);
  doc["results"] = results;
  finish_report(doc, kExitOk, o.report);
  return kExitOk;
}

int run_verify(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> names;
  if (o.case_name == "all") {
    names = cases::list_cases();
  } else {
    const auto& known = cases::list_cases();
    if (std::find(known.begin(), known.end(), o.case_name) == known.end()) {
      throw UsageError("unknown case '" + o.case_name + "'");
    }
    names.push_back(o.case_name);
  }
  auto doc = report_skeleton("verify", args, std::nullopt);
  doc["results"]["cases"] = json::array();
  bool all_passed = true;
  for (const auto& name : names) {
    const auto report = cases::run_case(name);
    std::size_t passed = 0;
    for (const auto& a : report.assertions) {
      passed += a.passed ? 1 : 0;
      auto entry = assertion_json(a);
      entry["case"] = name;
      doc["assertions"].push_back(entry);
    }
    out << (report.passed() ? "PASS " : "FAIL ") << name << " (" << passed << "/"
        << report.assertions.size() << " assertions)\n";
    all_passed = all_passed && report.passed();
    doc["results"]["cases"].push_back(to_json(report));
  }
  const int status = all_passed ? kExitOk : kExitCheckFailed;
  finish_report(doc, status, o.report);
  return status;
}

}  // namespace

std::string digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

json to_json(const cases::CaseReport& report) {
  json doc;
  doc["case"] = report.case_name;
  doc["inputs"] = report.inputs;
  doc["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  doc["values"] = report.values;
  doc["assertions"] = json::array();
  for (const auto& a : report.assertions) doc["assertions"].push_back(assertion_json(a));
  doc["notes"] = report.notes;
  doc["passed"] = report.passed();
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gradually varied extensions and discrete harmonic solves on grids and graphs",
               "gvh"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "grid CSV or graph JSON")->required();
    sub->add_option("--format", o.format, "input format (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* check = app.add_subcommand("check", "check gradual variation or boundary extendability");
  add_input(check);
  check->add_option("--step", o.step, "level step");
  check->add_option("--report", o.report, "write a JSON report");

  auto* extend = app.add_subcommand("extend", "gradually varied extension of boundary data");
  add_input(extend);
  extend->add_option("--mode", o.mode, "lower, upper or midpoint")
      ->check(CLI::IsMember({"lower", "upper", "midpoint"}));
  extend->add_option("--step", o.step, "level step");
  extend->add_option("--output", o.output, "field CSV (default: stdout)");
  extend->add_option("--heatmap", o.heatmap, "PGM heatmap");

  auto* harmonic = app.add_subcommand("harmonic", "solve the discrete Dirichlet problem");
  add_input(harmonic);
  harmonic->add_option("--method", o.method, "jacobi, gauss-seidel or sor")
      ->check(CLI::IsMember({"jacobi", "gauss-seidel", "gauss_seidel", "sor"}));
  harmonic->add_option("--tol", o.tolerance, "max interior residual");
  harmonic->add_option("--max-iter", o.max_iterations, "iteration budget");
  harmonic->add_option("--omega", o.omega, "SOR relaxation factor");
  harmonic->add_flag("--exact", o.exact, "direct solve instead of iterating");
  harmonic->add_option("--output", o.output, "field CSV (default: stdout)");
  harmonic->add_option("--heatmap", o.heatmap, "PGM heatmap");
  harmonic->add_option("--report", o.report, "write a JSON report");

  auto* slope = app.add_subcommand("slope", "average slope along a geodesic");
  add_input(slope);
  slope->add_option("--field", o.field, "field CSV")->required();
  slope->add_option("--from", o.from, "vertex index or row:col")->required();
  slope->add_option("--to", o.to, "vertex index or row:col")->required();

  auto* semi = app.add_subcommand("semipreserve", "max adjacent difference over max boundary slope");
  add_input(semi);
  semi->add_option("--field", o.field, "field CSV")->required();
  semi->add_option("--report", o.report, "write a JSON report");

  auto* verify = app.add_subcommand("verify", "run canned scenarios");
  verify->add_option("case", o.case_name, "case name or 'all'")->required();
  verify->add_option("--report", o.report, "write a JSON report");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gvh: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(o, args, out);
    if (extend->parsed()) return run_extend(o, out, err);
    if (harmonic->parsed()) return run_harmonic(o, args, out);
    if (slope->parsed()) return run_slope(o, out);
    if (semi->parsed()) return run_semipreserve(o, args, out);
    if (verify->parsed()) return run_verify(o, args, out);
  } catch (const std::invalid_argument& e) {
    err << "gvh: bad number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "gvh: number out of range: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "gvh: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gradvar::cli
