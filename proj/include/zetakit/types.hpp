#pragma once

#include <cmath>
#include <complex>

#include "zetakit/errors.hpp"

namespace zetakit {

/// Complex values are plain double pairs; every operation in the library
/// promises finite components and throws OverflowError instead of
/// producing infinities.
using Cplx = std::complex<double>;

inline bool is_finite(const Cplx& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Tuning knobs shared by the series, quadrature and zeta kernels.
struct PrecisionConfig {
  int em_cutoff = 25;             // Euler-Maclaurin direct-sum length
  int bernoulli_terms = 14;       // correction terms in the EM tail
  double quad_rel_tol = 1e-10;    // target relative error for quadrature
  double series_rel_tol = 1e-12;  // target relative error for truncated series

  void validate() const {
    if (em_cutoff < 10)
      throw DomainError("PrecisionConfig: em_cutoff must be >= 10");
    if (bernoulli_terms < 2 || bernoulli_terms > 30)
      throw DomainError("PrecisionConfig: bernoulli_terms must be in [2, 30]");
    if (!(quad_rel_tol > 0.0) || quad_rel_tol > 1e-3)
      throw DomainError("PrecisionConfig: quad_rel_tol must be in (0, 1e-3]");
    if (!(series_rel_tol > 0.0) || series_rel_tol > 1e-3)
      throw DomainError("PrecisionConfig: series_rel_tol must be in (0, 1e-3]");
  }
};

namespace detail {

/// Neumaier compensated accumulator. Adding in any order keeps the
/// rounding error of the total at a few ulp of the exact sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace detail
}  // namespace zetakit
