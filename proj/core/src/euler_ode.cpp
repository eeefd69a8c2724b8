#include "hadamard/euler_ode.hpp"

#include <cmath>
#include <utility>

namespace hadamard {

namespace {

constexpr double kZeroTol = 1e-300;

double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

Complex int_pow(Complex z, std::size_t e) {
    Complex r(1.0, 0.0);
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

// binom(n+j-1, j-1) as a double for possibly huge n
double binom_shifted(double n, std::size_t j) {
    double r = 1.0;
    for (std::size_t i = 1; i < j; ++i) r = r * (n + double(i)) / double(i);
    return r;
}

}  // namespace

EulerOperator::EulerOperator(Complex omega_, std::vector<Complex> coeffs_)
    : omega(omega_), coeffs(std::move(coeffs_)) {
    if (std::abs(omega) < kZeroTol)
        throw InvalidParameters("euler_ode: operator needs a nonzero omega");
    if (coeffs.empty())
        throw InvalidParameters("euler_ode: operator needs at least one coefficient");
    if (std::abs(coeffs.back()) < kZeroTol)
        throw InvalidParameters("euler_ode: operator has a vanishing top coefficient");
}

EulerOperator build_euler_operator(const RationalGerm& f) {
    if (!f.poly_part.empty())
        throw InvalidParameters(
            "euler_ode: germ has a polynomial part; remove it first "
            "(entire_correction handles entire perturbations)");
    const std::size_t m = f.pole_order();
    std::vector<Complex> c(m, Complex(0.0, 0.0));
    const Complex inv_omega = 1.0 / f.omega;
    double kfact = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0) kfact *= double(k);
        for (std::size_t j = k + 1; j <= m; ++j)
            c[k] += f.pole_coeffs[j - 1] * int_pow(inv_omega, j) * (binom(j - 1, k) / kfact);
    }
    return EulerOperator(f.omega, std::move(c));
}

Complex characteristic_value(const EulerOperator& op, double n) {
    Complex acc(0.0, 0.0);
    double falling = 1.0;  // n(n-1)...(n-k+1)
    for (std::size_t k = 0; k < op.coeffs.size(); ++k) {
        if (k > 0) falling *= n - double(k - 1);
        acc += op.coeffs[k] * falling;
    }
    return acc;
}

std::vector<double> verify_recurrence(const EulerOperator& op, const RationalGerm& f,
                                      std::size_t order) {
    if (order == 0) throw InvalidParameters("euler_ode: check needs order >= 1");
    std::vector<double> residuals(order);

    const double log2_omega = std::log2(std::abs(f.omega));
    const bool literal_ok = order < 10000 && std::abs(double(order) * log2_omega) < 900.0;

    if (literal_ok) {
        TruncatedGerm b = hadamard_inverse(expand(f, order));
        Complex omega_n(1.0, 0.0);
        for (std::size_t n = 0; n < order; ++n) {
            residuals[n] = std::abs(characteristic_value(op, double(n)) * b[n] / omega_n - 1.0);
            omega_n *= f.omega;
        }
        return residuals;
    }

    // normalized form: omega^n F_n = sum_j a_j binom(n+j-1, j-1) omega^(-j)
    const Complex inv_omega = 1.0 / f.omega;
    for (std::size_t n = 0; n < order; ++n) {
        Complex q(0.0, 0.0);
        for (std::size_t j = 1; j <= f.pole_order(); ++j)
            q += f.pole_coeffs[j - 1] * binom_shifted(double(n), j) * int_pow(inv_omega, j);
        if (std::abs(q) < kZeroTol) throw ZeroCoefficient("euler_ode", n);
        residuals[n] = std::abs(characteristic_value(op, double(n)) / q - 1.0);
    }
    return residuals;
}

TruncatedGerm solve_ode_series(const EulerOperator& op, std::size_t order) {
    if (order == 0) throw InvalidParameters("euler_ode: solution needs order >= 1");
    std::vector<Complex> b(order);
    Complex omega_n(1.0, 0.0);
    for (std::size_t n = 0; n < order; ++n) {
        Complex p = characteristic_value(op, double(n));
        if (std::abs(p) < kZeroTol) throw CharacteristicRoot("euler_ode", n);
        b[n] = omega_n / p;
        omega_n *= op.omega;
    }
    return TruncatedGerm(std::move(b));
}

std::vector<Complex> singular_points(const EulerOperator& op) {
    if (op.order() == 0) return {1.0 / op.omega};
    return {Complex(0.0, 0.0), 1.0 / op.omega};
}

}  // namespace hadamard
