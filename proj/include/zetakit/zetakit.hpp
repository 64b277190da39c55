#pragma once

// Umbrella header: the full zetakit library.
//
// zetakit numerically verifies the chain of identities leading to the
// zeta-regularized product over all primes, prod_p p = pi e^mu = 4 pi^2:
// prime-counting functions and their partial-summation identities, an
// Euler-Maclaurin zeta/zeta' engine with the Riemann xi function, the
// prime zeta function P(s) and its regularized derivative at 0, sums over
// the nontrivial zeros, and the explicit formula for psi0.

#include "zetakit/errors.hpp"
#include "zetakit/types.hpp"
#include "zetakit/gamma.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/report.hpp"
#include "zetakit/primes.hpp"
#include "zetakit/zeta.hpp"
#include "zetakit/primezeta.hpp"
#include "zetakit/zeros.hpp"
#include "zetakit/verify.hpp"
