#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradvar/domain.hpp"
#include "gradvar/gvf.hpp"

namespace gradvar::io {

/// Input error tied to a position in a grid CSV (1-based row and column).
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& message);
  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

enum class TokenKind { outside, unknown, fixed };

struct GridToken {
  TokenKind kind = TokenKind::unknown;
  double value = 0.0;
};

/// Raw token matrix of a grid CSV: `#` outside, empty or `?` unknown, a
/// numeric literal fixed. Rows are newline separated, cells comma separated.
struct GridFileModel {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<GridToken> tokens;  // row-major
};

/// Throws ParseError on ragged rows or unreadable tokens.
GridFileModel parse_grid_tokens(std::string_view text);

struct ParsedGrid {
  GridDomain grid;
  GridGraph graph;
  /// Fixed cells, keyed by vertex.
  BoundaryData anchors;
  /// Per vertex: the fixed value, or empty for unknown cells.
  std::vector<std::optional<double>> values;

  bool complete() const { return anchors.size() == values.size(); }
};

ParsedGrid parse_grid_csv(std::string_view text);

struct ParsedGraph {
  GraphDomain graph;
  BoundaryData boundary;
};

/// {"vertices": n, "edges": [[u, v], ...], "boundary": {"v": value, ...}}.
/// Duplicate edges collapse; self-loops and out-of-range indices are errors.
ParsedGraph parse_graph_json(std::string_view text);

/// Decimal literal, optional sign, optional exponent. Throws InvalidInput.
double parse_number(std::string_view token);

/// Shortest fixed-notation text that reads back to the same double.
std::string format_number(double value);

/// Field in the shape of the grid, `#` for outside cells.
std::string format_field_csv(const GridGraph& graph, const ScalarField& field);

/// Field on a bare graph: one CSV row, one value per vertex.
std::string format_field_row(const ScalarField& field);

/// Plain PGM (P2). Inside cells rescale [min, max] linearly onto [0, 255]; a
/// constant field maps to 128; outside cells are 0.
std::string write_pgm(const GridGraph& graph, const ScalarField& field);

}  // namespace gradvar::io
