#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hadamard/errors.hpp"

namespace hadamard {

using Complex = std::complex<double>;

// A holomorphic germ at 0 known through its first N Taylor coefficients.
// Truncation order N >= 1; coefficients must be finite.
class TruncatedGerm {
  public:
    explicit TruncatedGerm(std::vector<Complex> coeffs);

    std::size_t order() const { return coeffs_.size(); }
    const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

  private:
    std::vector<Complex> coeffs_;
};

// Unit for the termwise product: the geometric series 1/(1-z), all
// coefficients 1.
TruncatedGerm delta(std::size_t order);

// Termwise (Hadamard) product.  Mixed orders truncate to the shorter operand.
TruncatedGerm hadamard_product(const TruncatedGerm& f, const TruncatedGerm& g);

// Termwise reciprocal.  Exists iff no coefficient vanishes; magnitudes below
// zero_tol are treated as zero.
TruncatedGerm hadamard_inverse(const TruncatedGerm& f, double zero_tol = 1e-300);

// Ordinary product of power series, truncated to the shorter operand.
TruncatedGerm cauchy_product(const TruncatedGerm& f, const TruncatedGerm& g);

// s-th derivative: coefficient n of the result is (n+s)!/n! * f_{n+s}.
// Output order shrinks by s.
TruncatedGerm derivative(const TruncatedGerm& f, std::size_t s);

// Index shift: coefficient n of the result is f_{n+s}.  Output order shrinks
// by s.
TruncatedGerm coefficient_shift(const TruncatedGerm& f, std::size_t s);

// Diagonal scaling (d/dz)^s (z^s g): coefficient n becomes (n+s)!/n! * g_n.
// Order is unchanged.
TruncatedGerm theta_power(const TruncatedGerm& g, std::size_t s);

// Pointwise sum/difference/scaling, truncating to the shorter operand.
TruncatedGerm operator+(const TruncatedGerm& f, const TruncatedGerm& g);
TruncatedGerm operator-(const TruncatedGerm& f, const TruncatedGerm& g);
TruncatedGerm operator*(Complex scale, const TruncatedGerm& f);

// Horner evaluation of the truncated polynomial at z.
Complex partial_sum(const TruncatedGerm& f, Complex z);

// (n+s)!/n! as a double; exact at desk scale.
double rising_length(std::size_t n, std::size_t s);

}  // namespace hadamard
