#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gkm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" form: q > 0, gcd(p, q) = 1. Integers keep the "/1" suffix.
std::string to_string(const Rational& r);

/// Human-oriented form: integers print without the denominator.
std::string to_display(const Rational& r);

/// Accepts "p/q", "p" and optional leading sign; normalizes non-reduced input.
/// Throws InputError on anything else (including q = 0).
Rational parse_rational(std::string_view text);

/// An element of g or g*, in coordinates.
using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const Rational& s);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

/// True iff a and b are linearly dependent (either is zero, or they are parallel).
bool parallel(const Vec& a, const Vec& b);

/// Scales v so its first nonzero coordinate is 1. v must be nonzero.
Vec normalized_first_one(const Vec& v);

/// Primitive integer representative: integer coordinates with gcd 1 and
/// first nonzero coordinate positive. v must be nonzero.
Vec primitive(const Vec& v);

/// Lexicographic comparison of equal-length vectors.
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const;
};

std::string to_string(const Vec& v);

/// Parses "a,b,c" (each entry a rational).
Vec parse_vec(std::string_view csv);

}  // namespace gkm
