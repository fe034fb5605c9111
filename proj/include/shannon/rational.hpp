#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shannon {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Formats as "num/den", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "a/b" or a plain integer. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Divides by the gcd of all entries (no-op for the zero vector).
void make_primitive(IntVector& v);

/// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive_integer(std::span<const Rational> v);

RatVector to_rational(std::span<const Integer> v);

}  // namespace shannon
