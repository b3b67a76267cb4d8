#pragma once

// Exact rational scalars and dense rational vectors.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tropcrit {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

/// Canonical text form: "p" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Strict parser for the canonical text form. Rejects "3/6", "2/1", "+1",
/// "-0", leading zeros, whitespace and negative denominators. The exception
/// message carries a fix-it suggestion when the value is well formed but not
/// canonical.
Rat parse_rat(std::string_view text);

Int numerator(const Rat& r);
Int denominator(const Rat& r);
bool is_integer(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Rat dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& v, const Rat& c);
RatVector negated(const RatVector& v);
bool is_zero(const RatVector& v);
RatVector zeros(std::size_t n);
RatVector unit_vector(std::size_t n, std::size_t i);

/// Positive multiple of `v` with coprime integer entries. Zero stays zero.
RatVector primitive_direction(const RatVector& v);

/// Integer entries of a vector known to be integral.
IntVector to_int_vector(const RatVector& v);
RatVector to_rat_vector(const IntVector& v);

std::string to_string(const RatVector& v);

}  // namespace tropcrit
