#pragma once

#include <cstddef>
#include <vector>

#include "hadamard/germ.hpp"

namespace hadamard {

// Rational approximant p/q of type (L, M) with q(0) = 1.  `defect` is the
// relative residual norm of the linear solve for the denominator; exact
// rational data drives it to rounding level.
struct PadeApproximant {
    std::vector<Complex> numerator;    // degree <= L
    std::vector<Complex> denominator;  // degree <= M, constant term 1
    double defect = 0.0;
};

// Solves the Toeplitz system matching coefficients L+1 .. L+M by dense
// Gaussian elimination with full pivoting (degrees stay desk-scale, so a
// dense solve is the simplest trustworthy choice).  The elimination stops at
// the numerical rank and zeroes the free unknowns, so degenerate and
// ill-conditioned entries return their identifiable part with the residual
// recorded in `defect`; entries whose truncated solution misses its own
// defining equations by more than 1e-6 have no usable monic denominator and
// throw SingularSystem.  Requires L+M+1 <= order(f).
PadeApproximant pade(const TruncatedGerm& f, std::size_t l, std::size_t m);

// All roots of a complex polynomial (lowest degree first) by Durand-Kerner
// simultaneous iteration with a Newton polish; throws NonConvergence after
// 500 sweeps.  Coefficients below 1e-14 of the largest are trimmed off the
// top, so near-degenerate leading terms do not manufacture huge roots.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& poly);

// A denominator root with its backward-error certificate
// |q(r)| / sum_k |q_k| |r|^k and a spuriousness flag: poles pairing with a
// numerator root within 1e-8 are Froissart doublets, artifacts of the
// approximation rather than the germ.
struct PadePole {
    Complex location;
    double certificate;
    bool spurious;
};
std::vector<PadePole> pade_poles(const PadeApproximant& approx);

}  // namespace hadamard
