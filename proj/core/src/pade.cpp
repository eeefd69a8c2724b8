#include "hadamard/pade.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hadamard {

namespace {

constexpr double kRankTol = 1e-10;

Complex horner(const std::vector<Complex>& poly, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = poly.size(); k-- > 0;) acc = acc * z + poly[k];
    return acc;
}

// Dense solve with full pivoting, truncated at the numerical rank: pivots
// below tolerance end the elimination and the free unknowns stay zero.  On
// ill-conditioned but solvable systems this returns the identifiable part of
// the solution; the caller judges the entry by its residual.
std::vector<Complex> solve_full_pivot(std::vector<std::vector<Complex>> a,
                                      std::vector<Complex> b) {
    const std::size_t n = b.size();
    std::vector<std::size_t> col_of(n);
    for (std::size_t i = 0; i < n; ++i) col_of[i] = i;

    double scale = 0.0;
    for (const auto& row : a)
        for (Complex v : row) scale = std::max(scale, std::abs(v));
    const double pivot_tol = kRankTol * std::max(scale, 1e-300);

    std::size_t rank = n;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pr = step, pc = step;
        double best = 0.0;
        for (std::size_t r = step; r < n; ++r)
            for (std::size_t c = step; c < n; ++c)
                if (std::abs(a[r][c]) > best) {
                    best = std::abs(a[r][c]);
                    pr = r;
                    pc = c;
                }
        if (best < pivot_tol) {
            rank = step;
            break;
        }
        std::swap(a[step], a[pr]);
        std::swap(b[step], b[pr]);
        if (pc != step) {
            for (std::size_t r = 0; r < n; ++r) std::swap(a[r][step], a[r][pc]);
            std::swap(col_of[step], col_of[pc]);
        }
        for (std::size_t r = step + 1; r < n; ++r) {
            Complex factor = a[r][step] / a[step][step];
            if (factor == Complex(0.0, 0.0)) continue;
            a[r][step] = Complex(0.0, 0.0);
            for (std::size_t c = step + 1; c < n; ++c) a[r][c] -= factor * a[step][c];
            b[r] -= factor * b[step];
        }
    }

    std::vector<Complex> permuted(n, Complex(0.0, 0.0));
    for (std::size_t i = rank; i-- > 0;) {
        Complex acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * permuted[c];
        permuted[i] = acc / a[i][i];
    }
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) x[col_of[i]] = permuted[i];
    return x;
}

}  // namespace

PadeApproximant pade(const TruncatedGerm& f, std::size_t l, std::size_t m) {
    if (l + m + 1 > f.order())
        throw InvalidParameters("pade: need L+M+1 coefficients, have " +
                                std::to_string(f.order()));

    PadeApproximant result;
    result.denominator.assign(m + 1, Complex(0.0, 0.0));
    result.denominator[0] = Complex(1.0, 0.0);

    if (m > 0) {
        auto coeff = [&](std::ptrdiff_t i) {
            return i < 0 ? Complex(0.0, 0.0) : f[std::size_t(i)];
        };
        std::vector<std::vector<Complex>> a(m, std::vector<Complex>(m));
        std::vector<Complex> b(m);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t k = 1; k <= m; ++k)
                a[r][k - 1] = coeff(std::ptrdiff_t(l + r + 1) - std::ptrdiff_t(k));
            b[r] = -coeff(std::ptrdiff_t(l + r + 1));
        }
        std::vector<Complex> q = solve_full_pivot(a, b);
        for (std::size_t k = 1; k <= m; ++k) result.denominator[k] = q[k - 1];

        // residual against the untouched rows (solve_full_pivot works on copies)
        double num = 0.0, den = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            Complex acc = -b[r];
            for (std::size_t k = 1; k <= m; ++k) acc += a[r][k - 1] * q[k - 1];
            num += std::norm(acc);
            den += std::norm(b[r]);
        }
        result.defect = std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
        // a solution this far from its own defining equations marks a
        // degenerate table entry with no monic-denominator representative
        if (result.defect > 1e-6)
            throw SingularSystem("pade: denominator system is rank-deficient and inconsistent");
    }

    result.numerator.assign(l + 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i <= l; ++i) {
        Complex acc = f[i];
        for (std::size_t k = 1; k <= std::min(i, m); ++k)
            acc += result.denominator[k] * f[i - k];
        result.numerator[i] = acc;
    }
    return result;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& poly) {
    double peak = 0.0;
    for (Complex c : poly) peak = std::max(peak, std::abs(c));
    if (peak == 0.0) return {};
    std::size_t degree = poly.size() - 1;
    while (degree > 0 && std::abs(poly[degree]) <= 1e-14 * peak) --degree;
    if (degree == 0) return {};

    std::vector<Complex> monic(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) monic[k] = poly[k] / poly[degree];

    if (degree == 1) return {-monic[0]};

    double cauchy = 0.0;
    for (std::size_t k = 0; k < degree; ++k) cauchy = std::max(cauchy, std::abs(monic[k]));
    const double r0 = 0.5 * (1.0 + cauchy);
    std::vector<Complex> z(degree);
    for (std::size_t k = 0; k < degree; ++k)
        z[k] = Complex(0.4, 0.9) *
               std::polar(r0, 2.0 * std::numbers::pi * double(k) / double(degree));

    bool converged = false;
    for (int sweep = 0; sweep < 500 && !converged; ++sweep) {
        double worst = 0.0;
        for (std::size_t k = 0; k < degree; ++k) {
            Complex denom(1.0, 0.0);
            for (std::size_t j = 0; j < degree; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == Complex(0.0, 0.0)) {
                z[k] += Complex(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            Complex delta = horner(monic, z[k]) / denom;
            z[k] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[k])));
        }
        converged = worst < 1e-13;
        if (!converged) {
            // steps can dither in the last ulp while every residual already
            // sits at rounding scale; accept on backward error instead
            bool settled = true;
            for (std::size_t k = 0; k < degree && settled; ++k) {
                double scale = 0.0, power = 1.0;
                for (const Complex& c : monic) {
                    scale += std::abs(c) * power;
                    power *= std::abs(z[k]);
                }
                settled = std::abs(horner(monic, z[k])) <= 1e-14 * scale;
            }
            converged = settled;
        }
    }
    if (!converged) throw NonConvergence("pade: root iteration exceeded 500 sweeps");

    // Newton polish sharpens the certificate
    for (std::size_t k = 0; k < degree; ++k) {
        for (int it = 0; it < 3; ++it) {
            Complex p = horner(monic, z[k]);
            Complex dp(0.0, 0.0);
            for (std::size_t c = degree; c-- > 0;)
                dp = dp * z[k] + double(c + 1) * monic[c + 1];
            if (std::abs(dp) < 1e-300) break;
            z[k] -= p / dp;
        }
    }
    return z;
}

std::vector<PadePole> pade_poles(const PadeApproximant& approx) {
    std::vector<Complex> roots = polynomial_roots(approx.denominator);
    std::vector<Complex> zeros = polynomial_roots(approx.numerator);

    std::vector<PadePole> poles;
    poles.reserve(roots.size());
    for (Complex r : roots) {
        // backward-error certificate: residual against the norm the
        // evaluation actually sees, so roots far outside the unit disk are
        // judged at their own scale
        double weighted = 0.0;
        double power = 1.0;
        for (Complex c : approx.denominator) {
            weighted += std::abs(c) * power;
            power *= std::abs(r);
        }
        PadePole p;
        p.location = r;
        p.certificate = std::abs(horner(approx.denominator, r)) / std::max(weighted, 1e-300);
        p.spurious = false;
        for (Complex zero : zeros)
            if (std::abs(zero - r) < 1e-8) p.spurious = true;
        poles.push_back(p);
    }
    return poles;
}

}  // namespace hadamard
