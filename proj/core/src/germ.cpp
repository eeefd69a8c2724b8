#include "hadamard/germ.hpp"

#include <cmath>
#include <utility>

namespace hadamard {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::size_t common_order(const TruncatedGerm& f, const TruncatedGerm& g) {
    return std::min(f.order(), g.order());
}

}  // namespace

TruncatedGerm::TruncatedGerm(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidParameters("germ: truncation order must be at least 1");
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (!finite(coeffs_[n]))
            throw InvalidParameters("germ: coefficient " + std::to_string(n) + " is not finite");
}

double rising_length(std::size_t n, std::size_t s) {
    double r = 1.0;
    for (std::size_t i = 1; i <= s; ++i) r *= double(n + i);
    return r;
}

TruncatedGerm delta(std::size_t order) {
    if (order == 0) throw InvalidParameters("germ: truncation order must be at least 1");
    return TruncatedGerm(std::vector<Complex>(order, Complex(1.0, 0.0)));
}

TruncatedGerm hadamard_product(const TruncatedGerm& f, const TruncatedGerm& g) {
    std::size_t n = common_order(f, g);
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = f[k] * g[k];
    return TruncatedGerm(std::move(out));
}

TruncatedGerm hadamard_inverse(const TruncatedGerm& f, double zero_tol) {
    std::vector<Complex> out(f.order());
    for (std::size_t k = 0; k < f.order(); ++k) {
        if (std::abs(f[k]) < zero_tol) throw ZeroCoefficient("germ", k);
        out[k] = 1.0 / f[k];
    }
    return TruncatedGerm(std::move(out));
}

TruncatedGerm cauchy_product(const TruncatedGerm& f, const TruncatedGerm& g) {
    std::size_t n = common_order(f, g);
    std::vector<Complex> out(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n && j < g.order(); ++j) out[i + j] += f[i] * g[j];
    return TruncatedGerm(std::move(out));
}

TruncatedGerm derivative(const TruncatedGerm& f, std::size_t s) {
    if (s >= f.order()) throw OrderUnderflow("germ");
    std::vector<Complex> out(f.order() - s);
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = rising_length(n, s) * f[n + s];
    return TruncatedGerm(std::move(out));
}

TruncatedGerm coefficient_shift(const TruncatedGerm& f, std::size_t s) {
    if (s >= f.order()) throw OrderUnderflow("germ");
    std::vector<Complex> out(f.coeffs().begin() + std::ptrdiff_t(s), f.coeffs().end());
    return TruncatedGerm(std::move(out));
}

TruncatedGerm theta_power(const TruncatedGerm& g, std::size_t s) {
    std::vector<Complex> out(g.order());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = rising_length(n, s) * g[n];
    return TruncatedGerm(std::move(out));
}

TruncatedGerm operator+(const TruncatedGerm& f, const TruncatedGerm& g) {
    std::size_t n = common_order(f, g);
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = f[k] + g[k];
    return TruncatedGerm(std::move(out));
}

TruncatedGerm operator-(const TruncatedGerm& f, const TruncatedGerm& g) {
    std::size_t n = common_order(f, g);
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = f[k] - g[k];
    return TruncatedGerm(std::move(out));
}

TruncatedGerm operator*(Complex scale, const TruncatedGerm& f) {
    std::vector<Complex> out(f.order());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = scale * f[k];
    return TruncatedGerm(std::move(out));
}

Complex partial_sum(const TruncatedGerm& f, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = f.order(); k-- > 0;) acc = acc * z + f[k];
    return acc;
}

}  // namespace hadamard
