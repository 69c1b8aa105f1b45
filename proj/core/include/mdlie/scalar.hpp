#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mdlie {

/// Exact rational number. GMP keeps results of arithmetic in canonical form
/// (positive denominator, coprime parts).
using Scalar = mpq_class;

/// Coordinate vector over the rationals.
using Vector = std::vector<Scalar>;

/// Parses "p" or "p/q" (decimal, optional leading '-', q > 0) into canonical form.
/// Throws InputError on anything else.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" or "p" rendering; the inverse of parse_scalar.
std::string format_scalar(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& c, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);

/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);

Scalar dot(const Vector& a, const Vector& b);

/// Scales v by a positive rational so that the entries are coprime integers.
Vector primitive(const Vector& v);

}  // namespace mdlie
