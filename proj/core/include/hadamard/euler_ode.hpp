#pragma once

#include <vector>

#include "hadamard/catalog.hpp"
#include "hadamard/germ.hpp"

namespace hadamard {

// Euler-type operator sum_k c_k X^k (d/dX)^k acting on power series in X.
// Applied to X^n it multiplies by the characteristic polynomial
//   P(n) = sum_k c_k n(n-1)...(n-k+1).
struct EulerOperator {
    Complex omega;
    std::vector<Complex> coeffs;  // c_0 .. c_{M-1}; top coefficient nonzero

    EulerOperator(Complex omega_, std::vector<Complex> coeffs_);

    std::size_t order() const { return coeffs.size() - 1; }
};

// For a pure-pole germ F(z) = sum_j a_j/(omega-z)^j, the termwise inverse G
// satisfies sum_k c_k X^k G^(k)(X) = 1/(1 - omega X) with
//   c_k = sum_{j=k+1}^{M} a_j * omega^(-j) * binom(j-1, k) / k!.
// Refuses germs with a polynomial part (strip it via entire_correction
// first).
EulerOperator build_euler_operator(const RationalGerm& f);

// P(n); n is a double so asymptotic probes can go far beyond the truncation.
Complex characteristic_value(const EulerOperator& op, double n);

// Relative residuals |P(n) b_n / omega^n - 1| for n < order, with
// b_n = 1/coefficient_n(F).  Far beyond desk scale (n >= 10^4 or when the
// powers leave double range) the identical normalized form
// |P(n)/(omega^n F_n) - 1| is used to dodge overflow.
std::vector<double> verify_recurrence(const EulerOperator& op, const RationalGerm& f,
                                      std::size_t order);

// Series solution b_n = omega^n / P(n) of the operator equation with
// right-hand side 1/(1 - omega X).
TruncatedGerm solve_ode_series(const EulerOperator& op, std::size_t order);

// Singular points of the operator equation in the solution's plane:
// {1/omega} for order 0, {0, 1/omega} otherwise.
std::vector<Complex> singular_points(const EulerOperator& op);

}  // namespace hadamard
