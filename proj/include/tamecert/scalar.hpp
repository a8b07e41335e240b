#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tamecert {

/// Exact rational number; GMP keeps it in canonical reduced form.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& x);

double to_double(const Scalar& x);

/// Exact value of a finite double.
Scalar from_double(double x);

/// Closest rational to x with denominator at most max_denominator (continued-fraction
/// convergents and semiconvergents).
Scalar limit_denominator(const Scalar& x, const mpz_class& max_denominator);

// Vector helpers. All vectors involved must share a length.
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
std::vector<double> to_doubles(const Vector& v);
std::string to_string(const Vector& v);

}  // namespace tamecert
