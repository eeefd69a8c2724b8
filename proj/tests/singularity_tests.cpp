#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hadamard/catalog.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/germ.hpp"
#include "hadamard/pade.hpp"
#include "hadamard/singularity.hpp"

using namespace hadamard;

namespace {

double nearest_nonspurious(const std::vector<PadePole>& poles, Complex target) {
    double best = 1e18;
    for (const PadePole& p : poles)
        if (!p.spurious) best = std::min(best, std::abs(p.location - target));
    return best;
}

double nearest_stable(const ScanReport& report, Complex target) {
    double best = 1e18;
    for (const StablePole& p : report.stable_poles)
        best = std::min(best, std::abs(p.location - target));
    return best;
}

}  // namespace

TEST_SUITE("singularity_scope") {

TEST_CASE("ratios of the log germ extrapolate to its branch point") {
    SingularityEstimate est = ratio_estimate(log_over_zeta_coefficients(512), {256, 512});
    REQUIRE(est.locations.size() == 1);
    CHECK(std::abs(est.locations[0] - Complex(1, 0)) < 1e-4);
    CHECK(est.residuals[0] < 1e-6);
    CHECK(!est.oscillatory);
}

TEST_CASE("geometric coefficients give their ratio exactly") {
    SingularityEstimate est = ratio_estimate(pole_coefficients(Complex(2, 0), 1, 64), {32, 64});
    CHECK(std::abs(est.locations[0] - Complex(2, 0)) < 1e-14);
    CHECK(est.residuals[0] < 1e-14);
}

TEST_CASE("a rotating boundary germ trips the oscillation flag") {
    TruncatedGerm f = borel_mayer_coefficients(Complex(0.5, 0), golden_rotation(), 128);
    SingularityEstimate est = ratio_estimate(f, {64, 128});
    CHECK(est.oscillatory);
}

TEST_CASE("ratio windows are validated") {
    TruncatedGerm f({Complex(1, 0), Complex(2, 0), Complex(0, 0), Complex(4, 0), Complex(5, 0),
                     Complex(6, 0), Complex(1, 0), Complex(1, 0), Complex(1, 0)});
    CHECK_THROWS_AS(ratio_estimate(f, {4, 100}), InvalidParameters);
    CHECK_THROWS_AS(ratio_estimate(f, {2, 4}), InvalidParameters);
    try {
        ratio_estimate(f, {0, 6});
        FAIL("expected ZeroCoefficient");
    } catch (const ZeroCoefficient& e) {
        CHECK(e.index == 2);
    }
}

TEST_CASE("the unit germ is its own approximant") {
    PadeApproximant ap = pade(delta(8), 0, 1);
    REQUIRE(ap.denominator.size() == 2);
    CHECK(std::abs(ap.denominator[0] - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(ap.denominator[1] - Complex(-1, 0)) < 1e-14);
    REQUIRE(ap.numerator.size() == 1);
    CHECK(std::abs(ap.numerator[0] - Complex(1, 0)) < 1e-14);
    CHECK(ap.defect < 1e-14);
}

TEST_CASE("the counting germ needs a squared denominator") {
    std::vector<Complex> c(8);
    for (std::size_t n = 0; n < 8; ++n) c[n] = Complex(double(n + 1), 0);
    PadeApproximant ap = pade(TruncatedGerm(c), 0, 2);
    REQUIRE(ap.denominator.size() == 3);
    CHECK(std::abs(ap.denominator[1] - Complex(-2, 0)) < 1e-12);
    CHECK(std::abs(ap.denominator[2] - Complex(1, 0)) < 1e-12);
    CHECK(ap.defect < 1e-12);
}

TEST_CASE("excess denominator degree truncates to the identifiable part") {
    PadeApproximant ap = pade(delta(8), 0, 2);
    REQUIRE(ap.denominator.size() == 3);
    CHECK(std::abs(ap.denominator[1] - Complex(-1, 0)) < 1e-12);
    CHECK(std::abs(ap.denominator[2]) < 1e-12);
    CHECK(ap.defect < 1e-12);
}

TEST_CASE("a truncated solution that misses its own equations is refused") {
    std::vector<Complex> c(8, Complex(1, 0));
    c[0] = Complex(0, 0);
    CHECK_THROWS_AS(pade(TruncatedGerm(c), 0, 2), SingularSystem);
}

TEST_CASE("approximants demand enough coefficients") {
    CHECK_THROWS_AS(pade(delta(8), 4, 4), InvalidParameters);
}

TEST_CASE("an exact two-pole germ is recovered to rounding level") {
    std::vector<Complex> c(16);
    for (std::size_t n = 0; n < 16; ++n)
        c[n] = Complex(3.0 * std::ldexp(1.0, -int(n)) - 2.0 * std::pow(3.0, -double(n)), 0);
    PadeApproximant ap = pade(TruncatedGerm(c), 0, 2);
    CHECK(std::abs(ap.denominator[1] - Complex(-5.0 / 6.0, 0)) < 1e-12);
    CHECK(std::abs(ap.denominator[2] - Complex(1.0 / 6.0, 0)) < 1e-12);

    std::vector<PadePole> poles = pade_poles(ap);
    REQUIRE(poles.size() == 2);
    CHECK(nearest_nonspurious(poles, Complex(2, 0)) < 1e-12);
    CHECK(nearest_nonspurious(poles, Complex(3, 0)) < 1e-12);
    for (const PadePole& p : poles) {
        CHECK(!p.spurious);
        CHECK(p.certificate < 1e-10);
    }
}

TEST_CASE("a pole shadowed by a numerator zero is marked spurious") {
    double ghost = 1.5 + 5e-9;
    PadeApproximant ap;
    ap.numerator = {Complex(1, 0), Complex(-1.0 / 1.5, 0)};
    ap.denominator = {Complex(1, 0), Complex(-(1.0 / ghost + 0.5), 0),
                      Complex(0.5 / ghost, 0)};
    std::vector<PadePole> poles = pade_poles(ap);
    REQUIRE(poles.size() == 2);
    for (const PadePole& p : poles) {
        if (std::abs(p.location - Complex(2, 0)) < 1e-6)
            CHECK(!p.spurious);
        else
            CHECK(p.spurious);
    }
}

TEST_CASE("branch cut approximants park their poles along the cut") {
    std::vector<PadePole> poles = pade_poles(pade(log_over_zeta_coefficients(17), 8, 8));
    double nearest = 1e18;
    std::size_t on_ray = 0, genuine = 0;
    for (const PadePole& p : poles) {
        if (p.spurious) continue;
        ++genuine;
        nearest = std::min(nearest, std::abs(p.location - Complex(1, 0)));
        if (std::abs(std::arg(p.location - Complex(1, 0))) < 0.2) ++on_ray;
        CHECK(p.certificate < 1e-10);
    }
    REQUIRE(genuine > 0);
    CHECK(nearest < 2.5e-2);
    CHECK(on_ray == genuine);

    std::vector<PadePole> shifted = pade_poles(pade(shifted_log_coefficients(2, 17), 8, 8));
    CHECK(nearest_nonspurious(shifted, Complex(1, 0)) < 2.5e-2);
}

TEST_CASE("the ladder germ resolves its first three pole rungs") {
    std::vector<PadePole> poles = pade_poles(pade(geometric_ladder_inverse(256), 12, 12));
    CHECK(nearest_nonspurious(poles, Complex(1, 0)) < 1e-3);
    CHECK(nearest_nonspurious(poles, Complex(2, 0)) < 1e-2);
    CHECK(nearest_nonspurious(poles, Complex(4, 0)) < 1e-1);
}

TEST_CASE("pole locations are stable under order refinement") {
    TruncatedGerm f = expand(RationalGerm(Complex(1.3, 0), {Complex(0.5, 0), Complex(1, 0)}), 64);
    std::vector<PadePole> coarse = pade_poles(pade(f, 4, 4));
    std::vector<PadePole> fine = pade_poles(pade(f, 8, 8));
    CHECK(nearest_nonspurious(coarse, Complex(1.3, 0)) < 1e-3);
    CHECK(nearest_nonspurious(fine, Complex(1.3, 0)) < 1e-3);
}

TEST_CASE("geometric growth reads off the radius") {
    TruncatedGerm f = pole_coefficients(Complex(2, 0), 1, 64);
    CHECK(root_test_growth(f) == doctest::Approx(0.5).epsilon(0.03));
    CHECK(root_test_radius(f) == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("polynomials report an infinite radius") {
    std::vector<Complex> c(64, Complex(0, 0));
    c[0] = Complex(1, 0);
    c[1] = Complex(2, 0);
    c[2] = Complex(3, 0);
    TruncatedGerm f(c);
    CHECK(root_test_growth(f) == 0.0);
    CHECK(std::isinf(root_test_radius(f)));
}

TEST_CASE("a rotating boundary germ crowds the unit annulus") {
    TruncatedGerm f = borel_mayer_coefficients(Complex(0.5, 0), golden_rotation(), 128);
    double score = natural_boundary_score(f, {{20, 20}, {30, 30}, {40, 40}}, {0.9, 1.1});
    CHECK(score >= 0.8);
}

TEST_CASE("an isolated pole stays out of a closed annulus") {
    double score = natural_boundary_score(delta(64), {{4, 4}}, {0.9, 0.99});
    CHECK(score == 0.0);
}

TEST_CASE("the ladder germ puts one rung of six in the annulus") {
    TruncatedGerm ladder = geometric_ladder_inverse(256);
    double one = natural_boundary_score(ladder, {{12, 12}}, {0.9, 1.1});
    double pooled = natural_boundary_score(ladder, {{12, 12}, {16, 16}, {20, 20}}, {0.9, 1.1});
    CHECK(one > 0.12);
    CHECK(one < 0.22);
    CHECK(pooled > 0.12);
    CHECK(pooled < 0.22);
}

TEST_CASE("boundary scores validate their inputs") {
    CHECK_THROWS_AS(natural_boundary_score(delta(64), {}, {0.9, 1.1}), InvalidParameters);
    CHECK_THROWS_AS(natural_boundary_score(delta(64), {{4, 4}}, {1.1, 0.9}), InvalidParameters);
}

TEST_CASE("the scan pins the log branch point and nothing else") {
    ScanReport report = scan_report(log_over_zeta_coefficients(256));
    REQUIRE(report.ratio_ok);
    CHECK(std::abs(report.ratio.locations[0] - Complex(1, 0)) < 1e-3);
    REQUIRE(report.stable_poles.size() == 1);
    CHECK(std::abs(report.stable_poles[0].location - Complex(1, 0)) < 1e-2);
    CHECK(report.stable_poles[0].certificate < 1e-10);
    CHECK(report.boundary_score <= 0.5);
    CHECK(report.radius == doctest::Approx(1.0).epsilon(0.05));
    for (const PoleSweep& sweep : report.sweeps) CHECK(sweep.error.empty());
}

TEST_CASE("the scan resolves the ladder rungs in modulus order") {
    ScanReport report = scan_report(geometric_ladder_inverse(256));
    REQUIRE(report.stable_poles.size() >= 3);
    CHECK(nearest_stable(report, Complex(1, 0)) < 1e-3);
    CHECK(nearest_stable(report, Complex(2, 0)) < 1e-2);
    CHECK(nearest_stable(report, Complex(4, 0)) < 1e-1);
    for (std::size_t i = 1; i < report.stable_poles.size(); ++i)
        CHECK(std::abs(report.stable_poles[i - 1].location) <=
              std::abs(report.stable_poles[i].location) + 1e-12);
}

TEST_CASE("ratio and approximant estimates corroborate each other") {
    std::vector<TruncatedGerm> germs = {
        log_over_zeta_coefficients(256), shifted_log_coefficients(2, 256),
        expand(RationalGerm(Complex(1.3, 0), {Complex(0.5, 0), Complex(1, 0)}), 256),
        pole_coefficients(Complex(2, 0), 1, 256)};
    for (const TruncatedGerm& f : germs) {
        SingularityEstimate ratio = ratio_estimate(f, {128, 256});
        std::vector<PadePole> poles = pade_poles(pade(f, 20, 20));
        CHECK(nearest_nonspurious(poles, ratio.locations[0]) < 1e-2);
    }
}

TEST_CASE("infeasible sweep orders are recorded rather than thrown") {
    ScanConfig config;
    config.orders = {{6, 6}, {20, 20}};
    ScanReport report = scan_report(log_over_zeta_coefficients(16), config);
    REQUIRE(report.sweeps.size() == 2);
    CHECK(report.sweeps[0].error.empty());
    CHECK(!report.sweeps[1].error.empty());
    CHECK(!report.stable_poles.empty());
}

}  // TEST_SUITE
