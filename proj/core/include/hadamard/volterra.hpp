#pragma once

#include <optional>
#include <vector>

#include "hadamard/contour.hpp"
#include "hadamard/germ.hpp"

namespace hadamard {

// Taylor jet at 1 of an entire function, used as the kernel factor f1.
// Truncations shorter than a requested order are zero-extended, so
// polynomials are represented exactly.
struct EntireFunctionJet {
    TruncatedGerm taylor_at_1;

    explicit EntireFunctionJet(TruncatedGerm t) : taylor_at_1(std::move(t)) {}
    Complex coeff(std::size_t n) const {
        return n < taylor_at_1.order() ? taylor_at_1[n] : Complex(0.0, 0.0);
    }
};

// Local model of a simple singularity at base:
//   residue/(base - zeta) + log_jet(x) log(base - zeta)/(2 pi i) + regular_jet(x)
// with x = zeta - base.  The two jets are truncated to a common order.
struct SingularJet {
    Complex base;
    Complex residue;
    TruncatedGerm log_jet;
    TruncatedGerm regular_jet;

    SingularJet(Complex base_, Complex residue_, TruncatedGerm log_jet_,
                TruncatedGerm regular_jet_);

    std::size_t order() const { return log_jet.order(); }
};

// Strictly lower-triangular matrix mapping the jet of g1 to the jet of
//   h1(zeta) = -(1/2 pi i) \int_omega^zeta f1(zeta/u) g1(u) du/u,
// computed by the substitution u = omega + tau*x: the integrand expands into
// a series in x whose coefficients are polynomials in tau, integrated
// exactly term by term.  Row n only reads g1 entries below n, and row 0 is empty, so
// h1(omega) = 0 identically.
std::vector<std::vector<Complex>> volterra_kernel(const EntireFunctionJet& f1, Complex omega,
                                                  std::size_t order);

// h1 as a jet in x (order entries, entry 0 exactly zero).  g1 jets shorter
// than order are zero-extended.
TruncatedGerm compute_h1(const EntireFunctionJet& f1, const TruncatedGerm& g1_jet, Complex omega,
                         std::size_t order);

// Forward-substitution solve of A g1 + B f1 + h1[g1] = 0 for the jet of g1.
// Requires A != 0; order 0 gives g1(omega) = -B f1(1) / A.
TruncatedGerm solve_g1(Complex a, Complex b, const EntireFunctionJet& f1, Complex omega,
                       std::size_t order);

// The homogeneous system A phi + h1[phi] = 0 forces phi = 0; the certificate
// carries the recurrence diagonal and the solved (zero) jet.  The
// conditioning flag trips when |A| is small against the kernel data.
struct UniquenessCertificate {
    std::vector<Complex> diagonal;
    std::vector<Complex> solution;
    double conditioning;  // max|f1| / |A|
    bool conditioning_warning;
};
UniquenessCertificate homogeneous_uniqueness(Complex a, const EntireFunctionJet& f1, Complex omega,
                                             std::size_t order);

// Residuals of the inverse conditions for F = A/(base-zeta) + f1 log/(2 pi i)
// against G's local data: (i) A*B - 1, (ii) the jet of A g1 + B f1 + h1[g1],
// (iii) optionally A g2 + h2 when the regular-part jet h2 is supplied.
struct ConditionReport {
    double unit_residual;
    double variation_residual;
    std::optional<double> regular_residual;
    bool passed;
};
ConditionReport check_inverse_conditions(const SingularJet& f, const SingularJet& g,
                                         const EntireFunctionJet& f1, double tol,
                                         const std::optional<TruncatedGerm>& h2 = std::nullopt);

// Numerical shadow of the polar growth bounds: scaled samples
// (zeta-base)^power (F.g)(zeta) along a ray into the singular point, where
// power is the pole order for a pure-pole factor and 1 for a log-type factor.
// `decays` records whether the scaled magnitudes fall monotonically; a
// genuine simple pole instead drives them to the nonzero product of leading
// coefficients.
enum class SingularKind { pole_of_order_m, log_type };
struct PolarBoundReport {
    int power;
    std::vector<ProbeSample> samples;
    bool decays;
    double final_scaled_abs;
    Complex final_scaled;
};
PolarBoundReport polar_order_bound_check(SingularKind f_kind, int pole_order, const SingularJet& g,
                                         const TruncatedGerm& product, const ProbeConfig& config);

}  // namespace hadamard
