#pragma once

// Versioned JSON documents:
//   {"format_version": "1", "kind": <kind>, "payload": {...}}
// Rationals are strings in canonical form ("p" or "p/q", reduced, q > 1).
// Integers that index or count things (n, dim, exponents, indicators) are
// JSON integers. Unknown keys are rejected; emitted keys are sorted.

#include "tropcrit/chow/measure.hpp"
#include "tropcrit/cycle/cycle.hpp"
#include "tropcrit/geometry/polytope.hpp"
#include "tropcrit/pl/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace tropcrit {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

/// Syntax or semantic error with a 1-based source position (0 if unknown).
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

enum class Kind { cycle, trop_poly, point_config, measure, polytope, report };
std::string to_string(Kind k);

struct Report {
  Json payload;
  friend bool operator==(const Report&, const Report&) = default;
};

using Value = std::variant<TropicalCycle, TropicalPolynomial, PointConfiguration, MAMeasure, Polytope, Report>;

struct ParseOptions {
  /// Cycles must pass is_balanced unless this is off.
  bool check_balance = true;
};

Value parse_document(std::string_view text, const ParseOptions& options = {});
Kind kind_of(const Value& v);

/// Parses and insists on a given kind.
TropicalCycle parse_cycle(std::string_view text, const ParseOptions& options = {});
TropicalPolynomial parse_trop_poly(std::string_view text);
PointConfiguration parse_point_config(std::string_view text);
MAMeasure parse_measure(std::string_view text);
Polytope parse_polytope(std::string_view text);

/// Payload encodings, also used inside reports.
Json to_json(const TropicalCycle& c);
Json to_json(const TropicalPolynomial& f);
Json to_json(const PointConfiguration& c);
Json to_json(const MAMeasure& m);
Json to_json(const Polytope& p);
Json to_json(const RatVector& v);

/// Canonical document text (two-space indent, trailing newline).
std::string emit(const Value& v);
std::string emit_document(Kind kind, const Json& payload);

/// Plain vertex list: one vertex per line, tab-separated coordinates.
std::string vertex_list(const Polytope& p);

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);
/// Byte offset of the value at a JSON pointer (RFC 6901) inside valid JSON
/// text; nullopt when the path does not exist.
std::optional<std::size_t> locate(std::string_view text, const Json::json_pointer& path);

}  // namespace tropcrit
