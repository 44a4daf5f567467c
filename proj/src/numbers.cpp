#include "macsat/numbers.hpp"

#include <cassert>

namespace macsat {

QVec operator+(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator*(const Rational& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Rational dot(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

TauQuad TauQuad::tau_halfpow(const Rational& t, long long halfexp) {
  long long q = halfexp >= 0 ? halfexp / 2 : -((-halfexp + 1) / 2);
  int rem = (int)(halfexp - 2 * q);  // 0 or 1
  Rational ip = 1;
  if (q >= 0)
    for (long long k = 0; k < q; ++k) ip *= t;
  else
    for (long long k = 0; k < -q; ++k) ip /= t;
  TauQuad r(t);
  if (rem == 0)
    r.a = GaussianRational(ip);
  else
    r.b = GaussianRational(ip);
  return r;
}

}  // namespace macsat
