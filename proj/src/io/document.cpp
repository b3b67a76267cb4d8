#include "tropcrit/io/document.hpp"

#include "tropcrit/cycle/balancing.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tropcrit {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + message : message),
      line_(line),
      column_(column),
      detail_(message) {}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::cycle: return "cycle";
    case Kind::trop_poly: return "trop_poly";
    case Kind::point_config: return "point_config";
    case Kind::measure: return "measure";
    case Kind::polytope: return "polytope";
    case Kind::report: return "report";
  }
  return "?";
}

namespace {

std::optional<Kind> kind_from(const std::string& s) {
  for (Kind k : {Kind::cycle, Kind::trop_poly, Kind::point_config, Kind::measure, Kind::polytope, Kind::report})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

// Semantic error at a JSON pointer; converted to line:column at the top.
struct SemanticError {
  Json::json_pointer where;
  std::string message;
};

[[noreturn]] void fail(const Json::json_pointer& where, const std::string& message) {
  throw SemanticError{where, message};
}

// Checked view of a JSON node that remembers its path.
class Node {
 public:
  Node(const Json& j, Json::json_pointer path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const Json::json_pointer& path() const { return path_; }

  void expect_object(std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) const {
    if (!j_.is_object()) fail(path_, "expected an object");
    std::set<std::string> allowed;
    for (auto k : required) allowed.insert(k);
    for (auto k : optional) allowed.insert(k);
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!allowed.count(it.key())) fail(path_ / it.key(), "unknown field \"" + it.key() + "\"");
    for (auto k : required)
      if (!j_.contains(k)) fail(path_, std::string("missing field \"") + k + "\"");
  }

  bool has(const char* key) const { return j_.contains(key); }
  Node operator[](const char* key) const { return {j_.at(key), path_ / key}; }
  Node operator[](std::size_t i) const { return {j_.at(i), path_ / i}; }

  std::size_t size_of_array() const {
    if (!j_.is_array()) fail(path_, "expected an array");
    return j_.size();
  }

  Rat rational() const {
    if (!j_.is_string()) fail(path_, "expected a rational as a string such as \"3/4\"");
    try {
      return parse_rat(j_.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path_, e.what());
    }
  }

  Int integer() const {
    if (!j_.is_number_integer()) fail(path_, "expected an integer");
    return j_.is_number_unsigned() ? Int(j_.get<std::uint64_t>()) : Int(j_.get<std::int64_t>());
  }

  std::size_t count() const {
    if (!j_.is_number_unsigned()) fail(path_, "expected a non-negative integer");
    return j_.get<std::size_t>();
  }

  RatVector rationals(std::size_t expected_length) const {
    const std::size_t len = size_of_array();
    if (len != expected_length)
      fail(path_, "expected " + std::to_string(expected_length) + " coordinates, got " + std::to_string(len));
    RatVector v;
    for (std::size_t i = 0; i < len; ++i) v.push_back((*this)[i].rational());
    return v;
  }

  RatMatrix rational_rows(std::size_t expected_length) const {
    RatMatrix rows;
    for (std::size_t i = 0, len = size_of_array(); i < len; ++i) rows.push_back((*this)[i].rationals(expected_length));
    return rows;
  }

 private:
  const Json& j_;
  Json::json_pointer path_;
};

std::size_t projective_n(const Node& p) {
  const std::size_t n = p["n"].count();
  if (n < 1 || n > 7) fail(p["n"].path(), "n must be between 1 and 7");
  return n;
}

TropicalCycle read_cycle(const Node& p, const ParseOptions& options) {
  p.expect_object({"dim", "cells"}, {"n", "factors"});
  std::vector<std::size_t> factors;
  if (p.has("n") == p.has("factors")) fail(p.path(), "give exactly one of \"n\" and \"factors\"");
  if (p.has("n")) {
    factors.push_back(projective_n(p));
  } else {
    const Node f = p["factors"];
    for (std::size_t i = 0, len = f.size_of_array(); i < len; ++i) {
      const std::size_t k = f[i].count();
      if (k < 1) fail(f[i].path(), "factor dimensions must be positive");
      factors.push_back(k);
    }
    if (factors.empty()) fail(f.path(), "need at least one factor");
  }
  std::size_t coordinates = 0, ambient = 0;
  for (auto k : factors) coordinates += k + 1, ambient += k;
  if (ambient > 8) fail(p.path(), "ambient dimension " + std::to_string(ambient) + " exceeds 8");
  const std::size_t dim = p["dim"].count();
  if (dim > ambient) fail(p["dim"].path(), "dim exceeds the ambient dimension");

  const Node cells = p["cells"];
  std::vector<QuotientCell> out;
  for (std::size_t i = 0, len = cells.size_of_array(); i < len; ++i) {
    const Node c = cells[i];
    c.expect_object({"vertices", "weight"}, {"rays", "lineality"});
    QuotientCell q;
    q.vertices = c["vertices"].rational_rows(coordinates);
    if (q.vertices.empty()) fail(c["vertices"].path(), "a cell needs at least one vertex");
    if (c.has("rays")) q.rays = c["rays"].rational_rows(coordinates);
    if (c.has("lineality")) q.lineality = c["lineality"].rational_rows(coordinates);
    q.weight = c["weight"].rational();
    try {
      cycle_from_quotient(factors, static_cast<int>(dim), {q});
    } catch (const std::invalid_argument& e) {
      fail(c.path(), e.what());
    }
    out.push_back(std::move(q));
  }
  TropicalCycle cycle = cycle_from_quotient(factors, static_cast<int>(dim), out);
  if (options.check_balance) {
    BalanceReport r;
    try {
      r = is_balanced(cycle);
    } catch (const StructuralError& e) {
      fail(cells.path(), e.what());
    }
    if (!r.balanced)
      fail(cells.path(), "cycle is not balanced; defect " + to_string(r.defect_quotient) + " at " +
                             to_string(*r.face) + " (pass --skip-balance to accept it)");
  }
  return cycle;
}

TropicalPolynomial read_trop_poly(const Node& p) {
  p.expect_object({"n", "terms"});
  const std::size_t n = projective_n(p);
  const Node terms = p["terms"];
  std::vector<Term> out;
  for (std::size_t i = 0, len = terms.size_of_array(); i < len; ++i) {
    const Node t = terms[i];
    t.expect_object({"exponent", "valuation"});
    const Node e = t["exponent"];
    if (e.size_of_array() != n + 1) fail(e.path(), "expected " + std::to_string(n + 1) + " exponents");
    IntVector exponent;
    for (std::size_t k = 0; k <= n; ++k) exponent.push_back(e[k].integer());
    out.push_back({std::move(exponent), t["valuation"].rational()});
  }
  if (out.empty()) fail(terms.path(), "a tropical polynomial needs at least one term");
  return TropicalPolynomial(n, std::move(out));
}

PointConfiguration read_point_config(const Node& p) {
  p.expect_object({"n", "points"});
  PointConfiguration c;
  c.n = projective_n(p);
  const Node points = p["points"];
  for (std::size_t i = 0, len = points.size_of_array(); i < len; ++i) {
    const Node q = points[i];
    q.expect_object({"valuations", "multiplicity"});
    ConfigPoint cp{q["valuations"].rationals(c.n + 1), q["multiplicity"].rational()};
    if (cp.multiplicity <= 0) fail(q["multiplicity"].path(), "multiplicities must be positive");
    c.points.push_back(std::move(cp));
  }
  if (c.points.empty()) fail(points.path(), "a configuration needs at least one point");
  return c;
}

MAMeasure read_measure(const Node& p) {
  p.expect_object({"n", "dim", "atoms"});
  const std::size_t n = projective_n(p);
  const std::size_t dim = p["dim"].count();
  if (dim + 1 > n) fail(p["dim"].path(), "dim must be at most n-1");
  const Node atoms = p["atoms"];
  std::vector<MAAtom> out;
  for (std::size_t i = 0, len = atoms.size_of_array(); i < len; ++i) {
    const Node a = atoms[i];
    a.expect_object({"point", "mass", "indicator"});
    QuotientVector point = canonical_rep(a["point"].rationals(n + 1));
    const Rat mass = a["mass"].rational();
    if (mass <= 0) fail(a["mass"].path(), "masses must be positive");
    const Node ind = a["indicator"];
    Indicator indicator;
    for (std::size_t k = 0, m = ind.size_of_array(); k < m; ++k) {
      const std::size_t idx = ind[k].count();
      if (idx > n) fail(ind[k].path(), "index out of range");
      if (!indicator.empty() && idx <= indicator.back()) fail(ind[k].path(), "indices must be strictly increasing");
      indicator.push_back(idx);
    }
    if (indicator != argmin_set(point))
      fail(ind.path(), "indicator " + to_string(indicator) + " is not the argmin set " + to_string(argmin_set(point)) +
                           " of the point");
    out.push_back({std::move(point), mass, std::move(indicator)});
  }
  return MAMeasure(n, dim, std::move(out));
}

Polytope read_polytope(const Node& p) {
  p.expect_object({"coordinates", "quotient", "vertices"});
  const std::size_t coordinates = p["coordinates"].count();
  if (coordinates < 1 || coordinates > 9) fail(p["coordinates"].path(), "coordinates must be between 1 and 9");
  if (!p["quotient"].json().is_boolean()) fail(p["quotient"].path(), "expected true or false");
  const bool quotient = p["quotient"].json().get<bool>();
  if (quotient && coordinates < 2) fail(p["coordinates"].path(), "quotient polytopes need at least 2 coordinates");
  return convex_hull(p["vertices"].rational_rows(coordinates), coordinates, quotient);
}

Json rows_json(const RatMatrix& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

Json indicator_json(const Indicator& ind) {
  Json a = Json::array();
  for (auto i : ind) a.push_back(i);
  return a;
}

}  // namespace

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line, column = 1;
    else ++column;
  }
  return {line, column};
}

namespace {

// Minimal scanner over text that is already known to be valid JSON.
class Scanner {
 public:
  explicit Scanner(std::string_view t) : t_(t) {}

  void ws() {
    while (i_ < t_.size() && (t_[i_] == ' ' || t_[i_] == '\t' || t_[i_] == '\n' || t_[i_] == '\r')) ++i_;
  }

  std::string string() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < t_.size() && t_[i_] != '"') {
      if (t_[i_] == '\\') {
        out += t_[i_ + 1] == 'u' ? std::string(t_.substr(i_, 6)) : std::string(1, t_[i_ + 1]);
        i_ += t_[i_ + 1] == 'u' ? 6 : 2;
      } else {
        out += t_[i_++];
      }
    }
    ++i_;
    return out;
  }

  void skip() {
    ws();
    if (i_ >= t_.size()) return;
    const char c = t_[i_];
    if (c == '"') {
      string();
    } else if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++i_;
      ws();
      if (t_[i_] == close) {
        ++i_;
        return;
      }
      for (;;) {
        if (c == '{') {
          ws();
          string();
          ws();
          ++i_;  // colon
        }
        skip();
        ws();
        if (t_[i_++] == close) return;
      }
    } else {
      while (i_ < t_.size() && std::string_view(",]} \t\r\n").find(t_[i_]) == std::string_view::npos) ++i_;
    }
  }

  std::optional<std::size_t> find(const std::vector<std::string>& tokens, std::size_t depth) {
    ws();
    if (depth == tokens.size()) return i_;
    const std::string& want = tokens[depth];
    if (t_[i_] == '{') {
      ++i_;
      ws();
      if (t_[i_] == '}') return std::nullopt;
      for (;;) {
        ws();
        const std::string key = string();
        ws();
        ++i_;
        if (key == want) return find(tokens, depth + 1);
        skip();
        ws();
        if (t_[i_++] == '}') return std::nullopt;
      }
    }
    if (t_[i_] == '[') {
      std::size_t target = 0;
      try {
        target = std::stoul(want);
      } catch (...) {
        return std::nullopt;
      }
      ++i_;
      ws();
      if (t_[i_] == ']') return std::nullopt;
      for (std::size_t k = 0;; ++k) {
        if (k == target) return find(tokens, depth + 1);
        skip();
        ws();
        if (t_[i_++] == ']') return std::nullopt;
      }
    }
    return std::nullopt;
  }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

std::vector<std::string> pointer_tokens(const Json::json_pointer& path) {
  std::vector<std::string> tokens;
  Json::json_pointer p = path;
  while (!p.empty()) {
    tokens.push_back(p.back());
    p.pop_back();
  }
  std::reverse(tokens.begin(), tokens.end());
  return tokens;
}

}  // namespace

std::optional<std::size_t> locate(std::string_view text, const Json::json_pointer& path) {
  Scanner s(text);
  return s.find(pointer_tokens(path), 0);
}

Value parse_document(std::string_view text, const ParseOptions& options) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw ParseError(line, column, cut == std::string::npos ? what : what.substr(cut));
  }
  try {
    const Node root(j, Json::json_pointer());
    root.expect_object({"format_version", "kind", "payload"});
    const Node version = root["format_version"];
    if (!version.json().is_string() || version.json().get<std::string>() != kFormatVersion)
      fail(version.path(), std::string("unsupported format_version; expected \"") + kFormatVersion + "\"");
    const Node kind_node = root["kind"];
    const std::optional<Kind> kind = kind_node.json().is_string() ? kind_from(kind_node.json().get<std::string>())
                                                                  : std::nullopt;
    if (!kind)
      fail(kind_node.path(), "kind must be one of cycle, trop_poly, point_config, measure, polytope, report");
    const Node payload = root["payload"];
    if (!payload.json().is_object()) fail(payload.path(), "payload must be an object");
    try {
      switch (*kind) {
        case Kind::cycle: return read_cycle(payload, options);
        case Kind::trop_poly: return read_trop_poly(payload);
        case Kind::point_config: return read_point_config(payload);
        case Kind::measure: return read_measure(payload);
        case Kind::polytope: return read_polytope(payload);
        case Kind::report: return Report{payload.json()};
      }
    } catch (const std::invalid_argument& e) {
      fail(payload.path(), e.what());
    }
  } catch (const SemanticError& e) {
    const auto offset = locate(text, e.where);
    const auto [line, column] = offset ? line_column(text, *offset) : std::pair<std::size_t, std::size_t>{0, 0};
    const std::string at = e.where.to_string();
    throw ParseError(line, column, (at.empty() ? std::string() : at + ": ") + e.message);
  }
  throw ParseError(0, 0, "unreachable");
}

Kind kind_of(const Value& v) {
  return static_cast<Kind>(v.index());
}

namespace {

template <class T>
T expect_kind(Value v, Kind k) {
  if (kind_of(v) != k) throw ParseError(0, 0, "expected a " + to_string(k) + " document, got " + to_string(kind_of(v)));
  return std::get<T>(std::move(v));
}

}  // namespace

TropicalCycle parse_cycle(std::string_view text, const ParseOptions& options) {
  return expect_kind<TropicalCycle>(parse_document(text, options), Kind::cycle);
}
TropicalPolynomial parse_trop_poly(std::string_view text) {
  return expect_kind<TropicalPolynomial>(parse_document(text), Kind::trop_poly);
}
PointConfiguration parse_point_config(std::string_view text) {
  return expect_kind<PointConfiguration>(parse_document(text), Kind::point_config);
}
MAMeasure parse_measure(std::string_view text) {
  return expect_kind<MAMeasure>(parse_document(text), Kind::measure);
}
Polytope parse_polytope(std::string_view text) {
  return expect_kind<Polytope>(parse_document(text), Kind::polytope);
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const TropicalCycle& c) {
  Json p;
  if (c.factors().size() == 1) p["n"] = c.factors().front();
  else p["factors"] = c.factors();
  p["dim"] = c.dim();
  p["cells"] = Json::array();
  for (const auto& q : quotient_cells(c)) {
    Json cell;
    cell["vertices"] = rows_json(q.vertices);
    cell["rays"] = rows_json(q.rays);
    cell["lineality"] = rows_json(q.lineality);
    cell["weight"] = to_string(q.weight);
    p["cells"].push_back(std::move(cell));
  }
  return p;
}

Json to_json(const TropicalPolynomial& f) {
  Json p;
  p["n"] = f.n();
  p["terms"] = Json::array();
  for (const auto& t : f.terms()) {
    Json e = Json::array();
    for (const auto& x : t.exponent) {
      if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::out_of_range("emit: exponent does not fit in 64 bits");
      e.push_back(x.convert_to<std::int64_t>());
    }
    p["terms"].push_back({{"exponent", std::move(e)}, {"valuation", to_string(t.valuation)}});
  }
  return p;
}

Json to_json(const PointConfiguration& c) {
  Json p;
  p["n"] = c.n;
  p["points"] = Json::array();
  for (const auto& q : c.points)
    p["points"].push_back({{"valuations", to_json(q.valuations)}, {"multiplicity", to_string(q.multiplicity)}});
  return p;
}

Json to_json(const MAMeasure& m) {
  Json p;
  p["n"] = m.n();
  p["dim"] = m.dim();
  p["atoms"] = Json::array();
  for (const auto& a : m.atoms())
    p["atoms"].push_back(
        {{"point", to_json(a.point.coords())}, {"mass", to_string(a.mass)}, {"indicator", indicator_json(a.indicator)}});
  return p;
}

Json to_json(const Polytope& p) {
  Json j;
  j["coordinates"] = p.coordinates();
  j["quotient"] = p.is_quotient();
  j["vertices"] = rows_json(p.vertices());
  return j;
}

namespace {

// Two-space indentation; arrays of scalars stay on one line.
void write_pretty(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + Json(it.key()).dump() + ": ";
      write_pretty(it.value(), indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      write_pretty(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string emit_document(Kind kind, const Json& payload) {
  const Json doc = {{"format_version", kFormatVersion}, {"kind", to_string(kind)}, {"payload", payload}};
  std::string out;
  write_pretty(doc, 0, out);
  return out + "\n";
}

std::string emit(const Value& v) {
  const Json payload = std::visit(
      [](const auto& x) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Report>) return x.payload;
        else return to_json(x);
      },
      v);
  return emit_document(kind_of(v), payload);
}

std::string vertex_list(const Polytope& p) {
  std::string out;
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "\t" : "") + to_string(v[i]);
    out += "\n";
  }
  return out;
}

}  // namespace tropcrit
