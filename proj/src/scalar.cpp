#include "tamecert/scalar.hpp"

#include <cmath>
#include <sstream>

#include "tamecert/errors.hpp"

namespace tamecert {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("", "empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) start = 1;
    if (start == t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  mpz_class num, den = 1;
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw ParseError("", "malformed rational '" + s + "'");
    num.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  } else {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n, true) || !valid_int(d, false))
      throw ParseError("", "malformed rational '" + s + "'");
    num.set_str(n[0] == '+' ? n.substr(1) : n, 10);
    den.set_str(d, 10);
    if (den == 0) throw ParseError("", "zero denominator in '" + s + "'");
  }
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) {
  Scalar c = x;
  c.canonicalize();
  return c.get_str();
}

double to_double(const Scalar& x) { return x.get_d(); }

Scalar from_double(double x) {
  if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
  Scalar q(x);
  q.canonicalize();
  return q;
}

Scalar limit_denominator(const Scalar& x, const mpz_class& max_denominator) {
  if (x.get_den() <= max_denominator) return x;
  // Convergents p0/q0 -> p1/q1 of the continued fraction of x.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(max_denominator - q0).get_mpz_t(), q1.get_mpz_t());
  Scalar bound1(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
  Scalar bound2(p1, q1);
  bound1.canonicalize();
  bound2.canonicalize();
  return abs(bound2 - x) <= abs(bound1 - x) ? bound2 : bound1;
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a);
  for (auto& x : r) x = -x;
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.get_d());
  return r;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace tamecert
