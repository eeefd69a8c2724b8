#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hadamard/evaluator.hpp"
#include "hadamard/germ.hpp"

namespace hadamard {

// A germ meromorphic at a single point: poly(z) + sum_j a_j / (omega - z)^j.
// pole_coeffs[j-1] holds a_j; the top coefficient must be nonzero.
struct RationalGerm {
    Complex omega;
    std::vector<Complex> pole_coeffs;
    std::vector<Complex> poly_part;

    RationalGerm(Complex omega_, std::vector<Complex> pole_coeffs_,
                 std::vector<Complex> poly_part_ = {});

    std::size_t pole_order() const { return pole_coeffs.size(); }
};

// Taylor coefficients of 1/(omega - z)^j at 0:
//   coeff_n = binom(n+j-1, j-1) * omega^(-n-j).
TruncatedGerm pole_coefficients(Complex omega, std::size_t j, std::size_t order);

// Taylor expansion of a RationalGerm at 0 (pole terms plus polynomial part).
TruncatedGerm expand(const RationalGerm& r, std::size_t order);

// -log(1-z)/z: coefficient n is 1/(n+1).
TruncatedGerm log_over_zeta_coefficients(std::size_t order);

// (-log(1-z) - sum_{m<k} z^m/m)/z^k: coefficient n is 1/(n+k).
TruncatedGerm shifted_log_coefficients(std::size_t k, std::size_t order);

// Termwise inverse of the two-pole ladder 1 + 1/(1-z) - 2/(2-z):
// coefficient 0 is 1, coefficient n is 1/(1 - 2^-n).
TruncatedGerm geometric_ladder_inverse(std::size_t order);

// 1/(1 - q p^n) with |q| < 1 and p on the unit circle, not a root of unity
// (checked up to order 10^6).  Natural boundary on the unit circle.
TruncatedGerm borel_mayer_coefficients(Complex q, Complex p, std::size_t order);

// Termwise-inverse correction for an entire perturbation: given b (the
// inverse's coefficients) and h (the perturbation's), the inverse of the
// perturbed germ is b_n - corr_n with
//   corr_n = h_n b_n^2 / (1 + h_n b_n).
// Superexponentially small when h is entire and b has geometric growth.
TruncatedGerm entire_correction(const TruncatedGerm& b, const TruncatedGerm& h);

// Closed form for the termwise product of two pure-pole germs, f0 with pole
// at 1 and g0 with pole at omega.  The result is a pure-pole germ at omega of
// order M+N-1, produced by an exact binomial re-expansion; both inputs must
// have empty polynomial parts.
RationalGerm pole_hadamard_pole(const RationalGerm& f0, const RationalGerm& g0);

// Named catalog germs with an exact coefficient rule and a principal-sheet
// point evaluator.
class CatalogGerm {
  public:
    static CatalogGerm delta_germ();
    static CatalogGerm pole(Complex omega, std::size_t j);
    static CatalogGerm log_over_zeta();
    static CatalogGerm shifted_log(std::size_t k);
    static CatalogGerm ladder_f();           // 1 + 1/(1-z) - 2/(2-z)
    static CatalogGerm geometric_ladder();   // termwise inverse of ladder_f
    static CatalogGerm borel_mayer(Complex q, Complex p);
    static CatalogGerm polynomial(std::vector<Complex> coeffs);
    static CatalogGerm from_rational(RationalGerm r, std::string name = "rational");

    TruncatedGerm coefficients(std::size_t order) const;
    PointEvaluator evaluator() const;
    const std::string& name() const { return name_; }

  private:
    enum class Kind { delta, pole, log_over_zeta, shifted_log, ladder_f,
                      geometric_ladder, borel_mayer, polynomial, rational };

    Kind kind_;
    std::string name_;
    Complex omega_{1.0, 0.0};
    std::size_t j_ = 1;
    Complex q_{0.0, 0.0};
    Complex p_{1.0, 0.0};
    std::vector<Complex> poly_;
    std::vector<Complex> rational_pole_coeffs_;

    explicit CatalogGerm(Kind kind) : kind_(kind) {}
};

// p = exp(2*pi*i*phi) for the golden rotation phi = (sqrt(5)-1)/2.
Complex golden_rotation();

// Parses the CLI germ mini-language "name:key=value,...".  Recognized names:
//   delta, example1, example2, ladder, ladder-F, bm92, log, shifted-log, pole.
// Unknown names and unknown keys are rejected.
CatalogGerm parse_germ_spec(const std::string& spec);

// Point evaluator for a RationalGerm (singular at its pole only).
PointEvaluator rational_evaluator(const RationalGerm& r);

}  // namespace hadamard
