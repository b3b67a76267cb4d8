#include "tropcrit/geometry/rational.hpp"

#include <stdexcept>

namespace tropcrit {

std::string to_string(const Int& z) { return z.str(); }

std::string to_string(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Unsigned decimal without superfluous leading zeros.
bool is_canonical_natural(std::string_view s) {
  return is_digits(s) && (s.size() == 1 || s.front() != '0');
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string shown(text);
  auto fail = [&](const std::string& why) -> Rat {
    throw std::invalid_argument("invalid rational \"" + shown + "\": " + why);
  };
  if (text.empty()) return fail("empty string");

  std::string_view num_part = text;
  std::string_view den_part;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.empty()) return fail("missing denominator");
  }

  bool negative = false;
  std::string_view magnitude = num_part;
  if (!magnitude.empty() && magnitude.front() == '-') {
    negative = true;
    magnitude.remove_prefix(1);
  }
  if (!is_digits(magnitude))
    return fail("numerator must be an optionally signed decimal integer");
  if (!is_canonical_natural(magnitude)) return fail("leading zeros");
  if (negative && magnitude == "0") return fail("negative zero; write 0");

  Int num{std::string(magnitude)};
  if (negative) num = -num;
  if (den_part.empty()) return Rat(num);

  if (!is_digits(den_part))
    return fail("denominator must be a positive decimal integer");
  if (!is_canonical_natural(den_part)) return fail("leading zeros in denominator");
  const Int den{std::string(den_part)};
  if (den == 0) return fail("zero denominator");

  const Rat value(num, den);
  if (den == 1) return fail("unit denominator; write " + to_string(value));
  if (gcd(abs(num), den) != 1)
    return fail("not reduced; write " + to_string(value));
  return value;
}

Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }
bool is_integer(const Rat& r) { return denominator(r) == 1; }

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return Int(0);
  return boost::multiprecision::lcm(a, b);
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scaled(const RatVector& v, const Rat& c) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

RatVector negated(const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVector zeros(std::size_t n) { return RatVector(n, Rat(0)); }

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

RatVector primitive_direction(const RatVector& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, denominator(x));
  Int g = 0;
  IntVector ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i] * den);
    g = gcd(g, abs(ints[i]));
  }
  if (g == 0) return v;
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

IntVector to_int_vector(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i]))
      throw std::invalid_argument("expected an integer vector, got " + to_string(v));
    r[i] = numerator(v[i]);
  }
  return r;
}

RatVector to_rat_vector(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tropcrit
