#include "gradvar/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace gradvar::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

ParseError::ParseError(std::size_t row, std::size_t column, const std::string& message)
    : InvalidInput("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " +
                   message),
      row_(row),
      column_(column) {}

double parse_number(std::string_view token) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto* end = body.data() + body.size();
  const auto [ptr, ec] = std::from_chars(body.data(), end, value);
  if (body.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw InvalidInput("not a finite number: '" + std::string(token) + "'");
  }
  return value;
}

std::string format_number(double value) {
  char buffer[400];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::fixed);
  if (ec != std::errc{}) throw InvalidInput("value too large to format");
  return std::string(buffer, ptr);
}

GridFileModel parse_grid_tokens(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "grid is empty");

  GridFileModel model;
  model.height = lines.size();
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const auto cells = split(lines[r], ',');
    if (r == 0) {
      model.width = cells.size();
    } else if (cells.size() != model.width) {
      throw ParseError(r + 1, std::min(cells.size(), model.width) + 1,
                       "row has " + std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(model.width));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto token = trim(cells[c]);
      if (token == "#") {
        model.tokens.push_back({TokenKind::outside, 0.0});
      } else if (token.empty() || token == "?") {
        model.tokens.push_back({TokenKind::unknown, 0.0});
      } else {
        try {
          model.tokens.push_back({TokenKind::fixed, parse_number(token)});
        } catch (const InvalidInput&) {
          throw ParseError(r + 1, c + 1, "unreadable token '" + std::string(token) + "'");
        }
      }
    }
  }
  return model;
}

ParsedGrid parse_grid_csv(std::string_view text) {
  const auto model = parse_grid_tokens(text);
  std::vector<bool> mask(model.tokens.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask[i] = model.tokens[i].kind != TokenKind::outside;
  }
  ParsedGrid parsed{build_grid(model.width, model.height, mask), {}, {}, {}};
  parsed.graph = to_graph(parsed.grid);
  parsed.values.resize(parsed.graph.vertex_to_cell.size());
  for (Vertex v = 0; v < parsed.values.size(); ++v) {
    const auto [r, c] = parsed.graph.vertex_to_cell[v];
    const auto& token = model.tokens[r * model.width + c];
    if (token.kind == TokenKind::fixed) {
      parsed.values[v] = token.value;
      parsed.anchors.set(v, token.value);
    }
  }
  return parsed;
}

ParsedGraph parse_graph_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("graph JSON must be an object");

  const auto index = [](const json& node, const char* what) -> std::size_t {
    if (!node.is_number_integer() || node.get<long long>() < 0) {
      throw InvalidInput(std::string(what) + " must be a non-negative integer");
    }
    return node.get<std::size_t>();
  };

  if (!doc.contains("vertices")) throw InvalidInput("graph JSON needs \"vertices\"");
  const std::size_t n = index(doc["vertices"], "\"vertices\"");

  std::vector<std::pair<Vertex, Vertex>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InvalidInput("\"edges\" must be an array");
    for (const auto& edge : doc["edges"]) {
      if (!edge.is_array() || edge.size() != 2) {
        throw InvalidInput("each edge must be a two-element array");
      }
      edges.emplace_back(index(edge[0], "edge endpoint"), index(edge[1], "edge endpoint"));
    }
  }
  ParsedGraph parsed{GraphDomain::from_edges(n, edges), {}};

  if (doc.contains("boundary")) {
    if (!doc["boundary"].is_object()) throw InvalidInput("\"boundary\" must be an object");
    for (const auto& [key, value] : doc["boundary"].items()) {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
      if (key.empty() || ec != std::errc{} || ptr != key.data() + key.size()) {
        throw InvalidInput("boundary key '" + key + "' is not a vertex index");
      }
      if (!value.is_number()) {
        throw InvalidInput("boundary value for vertex " + key + " must be a number");
      }
      parsed.boundary.set(v, value.get<double>());
    }
  }
  parsed.boundary.validate(parsed.graph);
  return parsed;
}

std::string format_field_csv(const GridGraph& graph, const ScalarField& field) {
  if (field.size() != graph.vertex_to_cell.size()) {
    throw InvalidInput("field size does not match the grid");
  }
  std::string out;
  for (std::size_t r = 0; r < graph.height; ++r) {
    for (std::size_t c = 0; c < graph.width; ++c) {
      if (c > 0) out += ',';
      const auto v = graph.vertex_at(r, c);
      out += v ? format_number(field[*v]) : std::string("#");
    }
    out += '\n';
  }
  return out;
}

std::string format_field_row(const ScalarField& field) {
  std::string out;
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(field.values[i]);
  }
  out += '\n';
  return out;
}

std::string write_pgm(const GridGraph& graph, const ScalarField& field) {
  if (field.size() != graph.vertex_to_cell.size()) {
    throw InvalidInput("field size does not match the grid");
  }
  const auto [lo_it, hi_it] = std::minmax_element(field.values.begin(), field.values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  std::ostringstream out;
  out << "P2\n" << graph.width << ' ' << graph.height << "\n255\n";
  for (std::size_t r = 0; r < graph.height; ++r) {
    for (std::size_t c = 0; c < graph.width; ++c) {
      int level = 0;
      if (const auto v = graph.vertex_at(r, c)) {
        level = hi > lo ? static_cast<int>(std::lround(255.0 * (field[*v] - lo) / (hi - lo))) : 128;
      }
      out << (c > 0 ? " " : "") << level;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gradvar::io
