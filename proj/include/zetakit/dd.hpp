#pragma once

// Double-double arithmetic (~31 significant decimal digits), used by the
// zeta engine where Euler-Maclaurin continuation left of the critical line
// cancels far more digits than plain doubles carry. Algorithms are the
// classic error-free transformations (Dekker, Knuth) and the exp/log/sincos
// reductions of the QD library.

#include <cmath>
#include <cstdint>

#include "zetakit/errors.hpp"

namespace zetakit::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  dd(double h) : hi(h), lo(0.0) {}
  dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline dd quick_two_sum(double a, double b) {
  // requires |a| >= |b|
  double s = a + b;
  return dd(s, b - (s - a));
}

inline dd two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return dd(s, (a - (s - v)) + (b - v));
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return dd(p, std::fma(a, b, -p));
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return dd(-a.hi, -a.lo); }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * dd(q1);
  double q2 = r.hi / b.hi;
  r = r - b * dd(q2);
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline dd ldexp_dd(dd a, int n) { return dd(std::ldexp(a.hi, n), std::ldexp(a.lo, n)); }
inline dd abs_dd(dd a) { return a.hi < 0.0 ? -a : a; }

inline const dd kDdLn2(6.931471805599452862e-01, 2.319046813846299558e-17);
inline const dd kDdPi(3.141592653589793116e+00, 1.224646799147353207e-16);
inline const dd kDdPiHalf(1.570796326794896558e+00, 6.123233995736766036e-17);
inline const dd kDdTwoPi(6.283185307179586232e+00, 2.449293598294706414e-16);

inline dd exp_dd(dd a) {
  if (a.hi > 709.0) throw OverflowError("exp_dd: argument overflows");
  if (a.hi < -709.0) return dd(0.0);
  double m = std::floor(a.hi / kDdLn2.hi + 0.5);
  dd r = ldexp_dd(a - kDdLn2 * dd(m), -9);  // |r| <= ln2/1024
  // expm1 by Taylor, then nine doublings: e^{2x}-1 = 2(e^x-1) + (e^x-1)^2
  dd p = r;
  dd term = r;
  for (int k = 2; k < 16; ++k) {
    term = term * r / dd(static_cast<double>(k));
    p += term;
    if (std::abs(term.hi) < 1e-40 * std::abs(p.hi)) break;
  }
  for (int i = 0; i < 9; ++i) p = ldexp_dd(p, 1) + p * p;
  return ldexp_dd(p + dd(1.0), static_cast<int>(m));
}

inline dd log_dd(dd a) {
  if (!(a.hi > 0.0)) throw DomainError("log_dd: nonpositive argument");
  // one Newton step on exp(x) = a from the double seed
  dd x(std::log(a.hi));
  x = x + a * exp_dd(-x) - dd(1.0);
  return x;
}

inline void sincos_taylor(dd r, dd& s, dd& c) {
  // |r| <= pi/4 + eps
  dd r2 = r * r;
  dd term = r;
  s = r;
  for (int k = 3; k < 40; k += 2) {
    term = -(term * r2) / dd(static_cast<double>(k * (k - 1)));
    s += term;
    if (std::abs(term.hi) < 1e-40) break;
  }
  term = dd(1.0);
  c = dd(1.0);
  for (int k = 2; k < 40; k += 2) {
    term = -(term * r2) / dd(static_cast<double>(k * (k - 1)));
    c += term;
    if (std::abs(term.hi) < 1e-40) break;
  }
}

inline void sincos_dd(dd a, dd& sin_out, dd& cos_out) {
  double q = std::floor(a.hi / kDdPiHalf.hi + 0.5);
  dd r = a - kDdPiHalf * dd(q);
  dd s, c;
  sincos_taylor(r, s, c);
  long j = static_cast<long>(q) & 3;  // two's complement & gives residue mod 4
  switch (j) {
    case 0: sin_out = s;  cos_out = c;  break;
    case 1: sin_out = c;  cos_out = -s; break;
    case 2: sin_out = -s; cos_out = -c; break;
    default: sin_out = -c; cos_out = s; break;
  }
}

/// exp(w) for a positive real base b, w = y*log(b): helper for b^y.
inline dd pow_dd(dd base, dd y) { return exp_dd(y * log_dd(base)); }

// ---------------------------------------------------------------------------
// Complex double-double, just the operations the zeta kernel needs.

struct cdd {
  dd re, im;

  cdd() = default;
  cdd(dd r, dd i) : re(r), im(i) {}
  cdd(double r, double i = 0.0) : re(r), im(i) {}
};

inline cdd operator+(cdd a, cdd b) { return cdd(a.re + b.re, a.im + b.im); }
inline cdd operator-(cdd a, cdd b) { return cdd(a.re - b.re, a.im - b.im); }
inline cdd operator-(cdd a) { return cdd(-a.re, -a.im); }
inline cdd operator*(cdd a, cdd b) {
  return cdd(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline cdd operator*(cdd a, dd b) { return cdd(a.re * b, a.im * b); }
inline cdd operator/(cdd a, cdd b) {
  dd den = b.re * b.re + b.im * b.im;
  return cdd((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den);
}
inline cdd& operator+=(cdd& a, cdd b) { a = a + b; return a; }
inline cdd& operator*=(cdd& a, cdd b) { a = a * b; return a; }

/// exp(z) for complex double-double z.
inline cdd exp_cdd(cdd z) {
  dd mag = exp_dd(z.re);
  dd s, c;
  sincos_dd(z.im, s, c);
  return cdd(mag * c, mag * s);
}

/// b^w for real b > 0 and complex w.
inline cdd pow_base_cdd(dd base, cdd w) {
  dd lb = log_dd(base);
  return exp_cdd(cdd(w.re * lb, w.im * lb));
}

}  // namespace zetakit::detail
