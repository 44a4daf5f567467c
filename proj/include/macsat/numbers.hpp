// Exact scalar types: rationals, Gaussian rationals, and the quadratic
// extension Q(i)(sqrt(tau)) used for exact character evaluation.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace macsat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using QVec = std::vector<Rational>;
using IVec = std::vector<long long>;

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// q-vector helpers (ambient realization / lattice coordinates)
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const Rational& c, const QVec& a);
bool is_zero(const QVec& a);
Rational dot(const QVec& a, const QVec& b);

inline IVec to_ivec(const QVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (denominator(a[i]) != 1) throw std::runtime_error("non-integral coordinate where integer expected");
    r[i] = numerator(a[i]).convert_to<long long>();
  }
  return r;
}

inline QVec to_qvec(const IVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

// Complex rational a + b*i.
struct GaussianRational {
  Rational re, im;
  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("inverse of zero Gaussian rational");
    return {re / n, -im / n};
  }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// a + b*sqrt(tau) over the Gaussian rationals; tau is a fixed positive rational.
struct TauQuad {
  GaussianRational a, b;
  Rational tau;

  explicit TauQuad(Rational t) : a(Rational(0)), b(Rational(0)), tau(std::move(t)) {}
  TauQuad(GaussianRational x, GaussianRational y, Rational t)
      : a(std::move(x)), b(std::move(y)), tau(std::move(t)) {}

  static TauQuad one(const Rational& t) { return {GaussianRational(Rational(1)), GaussianRational(Rational(0)), t}; }

  TauQuad operator+(const TauQuad& o) const { return {a + o.a, b + o.b, tau}; }
  TauQuad operator-(const TauQuad& o) const { return {a - o.a, b - o.b, tau}; }
  TauQuad operator*(const TauQuad& o) const {
    return {a * o.a + (b * o.b) * GaussianRational(tau), a * o.b + b * o.a, tau};
  }
  bool operator==(const TauQuad& o) const { return a == o.a && b == o.b; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  TauQuad inverse() const {
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 tau)
    GaussianRational n = a * a - (b * b) * GaussianRational(tau);
    if (n.is_zero()) throw std::domain_error("inverse of zero in Q(i, sqrt(tau))");
    GaussianRational ni = n.inverse();
    return {a * ni, (GaussianRational(Rational(0)) - b) * ni, tau};
  }

  // tau^(h/2) as an element: integer part exact, odd half contributes sqrt(tau)
  static TauQuad tau_halfpow(const Rational& t, long long halfexp);

  std::complex<double> to_complex() const {
    return a.to_complex() + b.to_complex() * std::sqrt(to_double(tau));
  }
};

}  // namespace macsat
