#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace trop {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: gcd(num, den) = 1, den > 0
using Vec = std::vector<Rational>;
using IntVec = std::vector<long long>;

// Accepts "p", "-p", "p/q". Throws ValidationError on anything else or q = 0.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

Vec to_rational(const IntVec& v);
bool is_zero(const IntVec& v);
bool is_zero(const Vec& v);
// gcd of the absolute values of the entries; 0 for the zero vector
long long content(const IntVec& v);
bool is_primitive(const IntVec& v);
IntVec negate(const IntVec& v);

// If v is a nonzero rational vector, returns (primitive integer u, positive
// rational c) with v = c * u.
std::pair<IntVec, Rational> primitive_part(const Vec& v);

Rational dot(const Vec& a, const Vec& b);
Rational dot(const Vec& a, const IntVec& b);
Rational pow(const Rational& base, long exponent);

}  // namespace trop
