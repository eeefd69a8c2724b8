#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hadamard/catalog.hpp"
#include "hadamard/evaluator.hpp"
#include "hadamard/germ.hpp"

namespace hadamard {

// Circle contour for the trapezoid rule.  The rule is spectrally accurate for
// integrands analytic near the circle, which the margin checks enforce:
// contours must stay 0.05*radius away from every declared singular or
// induced point.
struct QuadratureSpec {
    Complex center{0.0, 0.0};
    double radius = 0.5;
    std::size_t nodes = 256;
    bool clockwise = false;
};

// Termwise product via the inner-circle integral
//   (1/2 pi i) \oint f(zeta/z) g(z) dz/z
// on a circle enclosing 0 and zeta, with g's singular points outside and the
// induced points zeta/s (s singular for f) inside.
Complex hadamard_on_i(const PointEvaluator& f, const PointEvaluator& g, Complex zeta,
                      const QuadratureSpec& spec);

// Same product via the swapped integral (1/2 pi i) \oint f(z) g(zeta/z) dz/z
// on a circle with f's singular points outside and g's induced points inside.
Complex hadamard_on_c(const PointEvaluator& f, const PointEvaluator& g, Complex zeta,
                      const QuadratureSpec& spec);

// Splitting of the swapped integral for a single-pole rational f: a large
// anticlockwise circle K (the entire part) plus a small clockwise circle J
// around the pole (the polar part).  k_part + j_part equals hadamard_on_c
// on any admissible contour.
struct KjParts {
    Complex k_part;
    Complex j_part;
    Complex sum() const { return k_part + j_part; }
};
KjParts hadamard_on_kj(const RationalGerm& f, const PointEvaluator& g, Complex zeta,
                       const QuadratureSpec& k_spec, const QuadratureSpec& j_spec);

// Doubles the node count until successive values differ by less than tol or
// max_nodes is reached; reports the final difference.
struct RefinedValue {
    Complex value;
    std::size_t nodes;
    double cauchy_diff;
};
RefinedValue refine_nodes(const std::function<Complex(std::size_t)>& evaluate,
                          std::size_t start = 256, std::size_t max_nodes = 8192,
                          double tol = 1e-10);

// Radial limit probe: samples (zeta - omega)^power * value along the ray
// zeta = omega (1 - offset * direction), offset = 2^-k.
struct ProbeConfig {
    int k_min = 8;
    int k_max = 20;
    Complex direction{1.0, 0.0};
};
struct ProbeSample {
    double offset;
    Complex value;
    Complex scaled;
};
std::vector<ProbeSample> limit_probe(const PointEvaluator& product, Complex omega, int power,
                                     const ProbeConfig& config);
// Partial-sum variant for products known only through coefficients.
std::vector<ProbeSample> limit_probe(const TruncatedGerm& product, Complex omega, int power,
                                     const ProbeConfig& config);

// Empirical radius of convergence of k_part as a function of zeta, from a
// trapezoid extraction of its Taylor coefficients on |zeta| = rho.  Tail
// coefficients at the noise floor count as zero, so genuinely entire data
// reports a huge radius.
double k_part_radius_estimate(const RationalGerm& f, const PointEvaluator& g,
                              const QuadratureSpec& k_spec, double rho,
                              std::size_t samples = 64);

}  // namespace hadamard
