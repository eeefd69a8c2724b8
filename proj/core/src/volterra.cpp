#include "hadamard/volterra.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hadamard {

namespace {

constexpr double kZeroTol = 1e-300;

// truncated series in x whose coefficients are polynomials in tau
using TauPoly = std::vector<Complex>;
using XSeries = std::vector<TauPoly>;

XSeries xseries_zero(std::size_t order) { return XSeries(order); }

void add_term(TauPoly& p, std::size_t deg, Complex v) {
    if (p.size() <= deg) p.resize(deg + 1, Complex(0.0, 0.0));
    p[deg] += v;
}

XSeries multiply(const XSeries& a, const XSeries& b) {
    XSeries c = xseries_zero(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) {
            if (b[j].empty()) continue;
            TauPoly& out = c[i + j];
            for (std::size_t di = 0; di < a[i].size(); ++di) {
                if (a[i][di] == Complex(0.0, 0.0)) continue;
                for (std::size_t dj = 0; dj < b[j].size(); ++dj)
                    add_term(out, di + dj, a[i][di] * b[j][dj]);
            }
        }
    }
    return c;
}

void add_scalar(XSeries& a, Complex v) {
    if (!a.empty()) add_term(a[0], 0, v);
}

// 1/(omega + tau x) = sum_m (-1)^m omega^(-m-1) tau^m x^m
XSeries inverse_u(Complex omega, std::size_t order) {
    XSeries s = xseries_zero(order);
    Complex c = 1.0 / omega;
    for (std::size_t m = 0; m < order; ++m) {
        add_term(s[m], m, c);
        c *= -1.0 / omega;
    }
    return s;
}

}  // namespace

SingularJet::SingularJet(Complex base_, Complex residue_, TruncatedGerm log_jet_,
                         TruncatedGerm regular_jet_)
    : base(base_), residue(residue_), log_jet(std::move(log_jet_)),
      regular_jet(std::move(regular_jet_)) {
    if (std::abs(base) < kZeroTol)
        throw InvalidParameters("volterra: jet base must be nonzero");
    // keep the two jets at a common truncation order
    std::size_t common = std::min(log_jet.order(), regular_jet.order());
    if (log_jet.order() != common)
        log_jet = TruncatedGerm(
            std::vector<Complex>(log_jet.coeffs().begin(), log_jet.coeffs().begin() + common));
    if (regular_jet.order() != common)
        regular_jet = TruncatedGerm(std::vector<Complex>(regular_jet.coeffs().begin(),
                                                         regular_jet.coeffs().begin() + common));
}

std::vector<std::vector<Complex>> volterra_kernel(const EntireFunctionJet& f1, Complex omega,
                                                  std::size_t order) {
    if (order == 0) throw InvalidParameters("volterra: kernel needs order >= 1");
    if (std::abs(omega) < kZeroTol)
        throw InvalidParameters("volterra: base point must be nonzero");

    // kernel argument (omega+x)/(omega+tau x) = 1 + y,
    // y = x (1-tau) / (omega + tau x)
    XSeries inv_u = inverse_u(omega, order);
    XSeries y = xseries_zero(order);
    for (std::size_t m = 0; m + 1 < order; ++m) {
        for (std::size_t d = 0; d < inv_u[m].size(); ++d) {
            if (inv_u[m][d] == Complex(0.0, 0.0)) continue;
            add_term(y[m + 1], d, inv_u[m][d]);
            add_term(y[m + 1], d + 1, -inv_u[m][d]);
        }
    }

    // f1(1+y) by Horner; y has no constant term, so truncation is stable
    XSeries k = xseries_zero(order);
    add_scalar(k, f1.coeff(order - 1));
    for (std::size_t i = order - 1; i-- > 0;) {
        k = multiply(k, y);
        add_scalar(k, f1.coeff(i));
    }
    k = multiply(k, inv_u);

    // h1 = -(x / 2 pi i) \int_0^1 K(x,tau) g1(omega + tau x) dtau, and
    // g1(omega + tau x) contributes tau^j x^j, so
    //   T[n][j] = -(1/2 pi i) sum_d K_{n-1-j,d} / (d + j + 1).
    const Complex front(0.0, 1.0 / (2.0 * std::numbers::pi));  // -(1/2 pi i)
    std::vector<std::vector<Complex>> t(order);
    for (std::size_t n = 0; n < order; ++n) {
        t[n].assign(n, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < n; ++j) {
            const TauPoly& poly = k[n - 1 - j];
            Complex acc(0.0, 0.0);
            for (std::size_t d = 0; d < poly.size(); ++d)
                acc += poly[d] / double(d + j + 1);
            t[n][j] = front * acc;
        }
    }
    return t;
}

TruncatedGerm compute_h1(const EntireFunctionJet& f1, const TruncatedGerm& g1_jet, Complex omega,
                         std::size_t order) {
    auto t = volterra_kernel(f1, omega, order);
    std::vector<Complex> h1(order, Complex(0.0, 0.0));
    for (std::size_t n = 1; n < order; ++n)
        for (std::size_t j = 0; j < n && j < g1_jet.order(); ++j) h1[n] += t[n][j] * g1_jet[j];
    return TruncatedGerm(std::move(h1));
}

TruncatedGerm solve_g1(Complex a, Complex b, const EntireFunctionJet& f1, Complex omega,
                       std::size_t order) {
    if (std::abs(a) < kZeroTol)
        throw ZeroResidue("volterra: leading coefficient A vanishes, recurrence is unsolvable");
    auto t = volterra_kernel(f1, omega, order);
    std::vector<Complex> g1(order);
    for (std::size_t n = 0; n < order; ++n) {
        Complex rhs = -b * f1.coeff(n);
        for (std::size_t j = 0; j < n; ++j) rhs -= t[n][j] * g1[j];
        g1[n] = rhs / a;
    }
    return TruncatedGerm(std::move(g1));
}

UniquenessCertificate homogeneous_uniqueness(Complex a, const EntireFunctionJet& f1, Complex omega,
                                             std::size_t order) {
    if (std::abs(a) < kZeroTol)
        throw ZeroResidue("volterra: leading coefficient A vanishes, recurrence is unsolvable");
    auto t = volterra_kernel(f1, omega, order);
    UniquenessCertificate cert;
    cert.diagonal.assign(order, a);
    cert.solution.assign(order, Complex(0.0, 0.0));
    // forward substitution with zero right-hand side: every step divides an
    // exactly-zero accumulator by A
    for (std::size_t n = 0; n < order; ++n) {
        Complex rhs(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) rhs -= t[n][j] * cert.solution[j];
        cert.solution[n] = rhs / a;
    }
    double f1_max = 0.0;
    for (std::size_t i = 0; i < f1.taylor_at_1.order(); ++i)
        f1_max = std::max(f1_max, std::abs(f1.taylor_at_1[i]));
    cert.conditioning = f1_max / std::abs(a);
    cert.conditioning_warning = std::abs(a) < 1e-6 * f1_max;
    return cert;
}

ConditionReport check_inverse_conditions(const SingularJet& f, const SingularJet& g,
                                         const EntireFunctionJet& f1, double tol,
                                         const std::optional<TruncatedGerm>& h2) {
    if (std::abs(f.base - g.base) > 1e-12 * std::max(1.0, std::abs(f.base)))
        throw BaseMismatch("volterra: jets are anchored at different points");

    const std::size_t order = std::min(f.order(), g.order());
    const Complex a = f.residue;
    const Complex b = g.residue;

    ConditionReport report;
    report.unit_residual = std::abs(a * b - Complex(1.0, 0.0));

    TruncatedGerm h1 = compute_h1(f1, g.log_jet, g.base, order);
    double variation = 0.0;
    for (std::size_t n = 0; n < order; ++n)
        variation = std::max(variation, std::abs(a * g.log_jet[n] + b * f1.coeff(n) + h1[n]));
    report.variation_residual = variation;

    if (h2) {
        double regular = 0.0;
        for (std::size_t n = 0; n < std::min(order, h2->order()); ++n)
            regular = std::max(regular, std::abs(a * g.regular_jet[n] + (*h2)[n]));
        report.regular_residual = regular;
    }

    report.passed = report.unit_residual <= tol && report.variation_residual <= tol &&
                    (!report.regular_residual || *report.regular_residual <= tol);
    return report;
}

PolarBoundReport polar_order_bound_check(SingularKind f_kind, int pole_order, const SingularJet& g,
                                         const TruncatedGerm& product, const ProbeConfig& config) {
    if (f_kind == SingularKind::pole_of_order_m && pole_order < 1)
        throw InvalidParameters("volterra: pole order must be at least 1");
    PolarBoundReport report;
    report.power = f_kind == SingularKind::pole_of_order_m ? pole_order : 1;
    report.samples = limit_probe(product, g.base, report.power, config);
    report.decays = true;
    for (std::size_t i = 1; i < report.samples.size(); ++i)
        if (std::abs(report.samples[i].scaled) >= std::abs(report.samples[i - 1].scaled))
            report.decays = false;
    report.final_scaled = report.samples.back().scaled;
    report.final_scaled_abs = std::abs(report.final_scaled);
    return report;
}

}  // namespace hadamard
