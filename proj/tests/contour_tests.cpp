#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hadamard/catalog.hpp"
#include "hadamard/contour.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/evaluator.hpp"
#include "hadamard/germ.hpp"

using namespace hadamard;

namespace {

QuadratureSpec circle(double radius, std::size_t nodes = 256) {
    QuadratureSpec spec;
    spec.radius = radius;
    spec.nodes = nodes;
    return spec;
}

// termwise reference for evaluator pairs whose coefficient rules are known
Complex termwise(const TruncatedGerm& f, const TruncatedGerm& g, Complex zeta) {
    return partial_sum(hadamard_product(f, g), zeta);
}

}  // namespace

TEST_SUITE("contour_quadrature") {

TEST_CASE("the unit pairs with itself to itself") {
    Complex v = hadamard_on_i(delta_evaluator(), delta_evaluator(), Complex(0.3, 0), circle(0.6));
    CHECK(std::abs(v - Complex(1.0 / 0.7, 0.0)) < 1e-9);
}

TEST_CASE("the counting germ pairs with the log germ to the unit") {
    PointEvaluator f = rational_evaluator(RationalGerm(Complex(1, 0), {Complex(0, 0), Complex(1, 0)}));
    PointEvaluator g = CatalogGerm::log_over_zeta().evaluator();
    Complex zeta(0.3, 0);

    Complex on_i = hadamard_on_i(f, g, zeta, circle(0.6));
    Complex on_c = hadamard_on_c(f, g, zeta, circle(0.6));
    CHECK(std::abs(on_i - Complex(1.0 / 0.7, 0.0)) < 1e-9);
    CHECK(std::abs(on_c - Complex(1.0 / 0.7, 0.0)) < 1e-9);
    CHECK(std::abs(on_i - on_c) < 1e-9);

    // swapping the factors swaps the integrals but not the value
    Complex swapped = hadamard_on_i(g, f, zeta, circle(0.6));
    CHECK(std::abs(swapped - on_i) < 1e-9);
}

TEST_CASE("quadrature matches the series for a boundary-limited factor") {
    CatalogGerm bm = CatalogGerm::borel_mayer(Complex(0.3, 0), golden_rotation());
    PointEvaluator f = CatalogGerm::pole(Complex(1, 0), 2).evaluator();
    Complex zeta(0.25, 0);

    Complex reference =
        termwise(CatalogGerm::pole(Complex(1, 0), 2).coefficients(64), bm.coefficients(64), zeta);
    Complex on_i = hadamard_on_i(f, bm.evaluator(), zeta, circle(0.6));
    CHECK(std::abs(on_i - reference) < 1e-8);
    CHECK(std::abs(hadamard_on_c(f, bm.evaluator(), zeta, circle(0.6)) - on_i) < 1e-9);
}

TEST_CASE("the value does not depend on the admissible radius") {
    PointEvaluator f = rational_evaluator(RationalGerm(Complex(1, 0), {Complex(0, 0), Complex(1, 0)}));
    PointEvaluator g = CatalogGerm::log_over_zeta().evaluator();
    Complex zeta(0.3, 0);
    Complex narrow = hadamard_on_i(f, g, zeta, circle(0.55));
    Complex wide = hadamard_on_i(f, g, zeta, circle(0.7));
    CHECK(std::abs(narrow - wide) < 1e-9);
}

TEST_CASE("node doubling is already converged at desk scale") {
    CatalogGerm bm = CatalogGerm::borel_mayer(Complex(0.3, 0), golden_rotation());
    PointEvaluator f = CatalogGerm::pole(Complex(1, 0), 2).evaluator();
    Complex zeta(0.25, 0);
    Complex coarse = hadamard_on_i(f, bm.evaluator(), zeta, circle(0.6, 256));
    Complex fine = hadamard_on_i(f, bm.evaluator(), zeta, circle(0.6, 512));
    CHECK(std::abs(coarse - fine) < 1e-10);
}

TEST_CASE("the split recovers the swapped integral and isolates the polar part") {
    RationalGerm f(Complex(1.25, 0), {Complex(2, 0)});
    PointEvaluator g = CatalogGerm::log_over_zeta().evaluator();
    Complex zeta(0.3, 0);

    QuadratureSpec k_spec = circle(1.6 * 1.25);
    QuadratureSpec j_spec;
    j_spec.center = f.omega;
    j_spec.radius = 0.15 * 1.25;
    j_spec.clockwise = true;

    KjParts parts = hadamard_on_kj(f, g, zeta, k_spec, j_spec);
    Complex on_c = hadamard_on_c(rational_evaluator(f), g, zeta, circle(0.6));
    CHECK(std::abs(parts.sum() - on_c) < 1e-9);

    // a simple pole A/(omega - z) contributes A g(zeta/omega)/omega, all of it
    // through the pole circle; the outer circle carries only the entire part
    Complex residue_value = Complex(2, 0) * g(zeta / f.omega) / f.omega;
    CHECK(std::abs(parts.j_part - residue_value) < 1e-9);
    CHECK(std::abs(parts.k_part) < 1e-12);
}

TEST_CASE("a pure pole against the unit has no entire part at all") {
    RationalGerm f(Complex(1, 0), {Complex(0, 0), Complex(1, 0)});
    QuadratureSpec j_spec;
    j_spec.center = f.omega;
    j_spec.radius = 0.15;
    j_spec.clockwise = true;
    KjParts parts = hadamard_on_kj(f, delta_evaluator(), Complex(0.3, 0), circle(1.6), j_spec);
    CHECK(std::abs(parts.k_part) < 1e-12);
    // (n+1) against all-ones sums to 1/(1-zeta)^2
    CHECK(std::abs(parts.sum() - Complex(1.0 / 0.49, 0.0)) < 1e-9);
}

TEST_CASE("contours that fail to enclose the data are refused") {
    CHECK_THROWS_AS(
        hadamard_on_i(delta_evaluator(), delta_evaluator(), Complex(0.8, 0), circle(0.6)),
        NonEnclosing);
}

TEST_CASE("contours passing near a singular point are refused") {
    CHECK_THROWS_AS(
        hadamard_on_i(delta_evaluator(), delta_evaluator(), Complex(0.3, 0), circle(0.97)),
        DomainViolation);
}

TEST_CASE("the split checks its orientations") {
    RationalGerm f(Complex(1, 0), {Complex(1, 0)});
    QuadratureSpec j_spec;
    j_spec.center = f.omega;
    j_spec.radius = 0.15;
    j_spec.clockwise = false;  // wrong way round
    CHECK_THROWS_AS(hadamard_on_kj(f, delta_evaluator(), Complex(0.3, 0), circle(1.6), j_spec),
                    InvalidParameters);

    QuadratureSpec k_spec = circle(1.6);
    k_spec.clockwise = true;
    QuadratureSpec j_ok = j_spec;
    j_ok.clockwise = true;
    CHECK_THROWS_AS(hadamard_on_kj(f, delta_evaluator(), Complex(0.3, 0), k_spec, j_ok),
                    InvalidParameters);
}

TEST_CASE("the radial probe of the unit germ scales to its residue") {
    std::vector<ProbeSample> samples = limit_probe(delta_evaluator(), Complex(1, 0), 1, ProbeConfig{});
    REQUIRE(samples.size() == 13);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(samples[i].offset == doctest::Approx(std::ldexp(1.0, -int(8 + i))).epsilon(1e-15));
        CHECK(std::abs(samples[i].scaled - Complex(-1, 0)) < 1e-6);
    }
}

TEST_CASE("the coefficient probe approaches the same limit") {
    TruncatedGerm ones(std::vector<Complex>(4096, Complex(1, 0)));
    ProbeConfig config;
    config.k_min = 4;
    config.k_max = 8;
    std::vector<ProbeSample> samples = limit_probe(ones, Complex(1, 0), 1, config);
    REQUIRE(samples.size() == 5);
    for (const ProbeSample& s : samples) CHECK(std::abs(s.scaled - Complex(-1, 0)) < 1e-6);
}

TEST_CASE("node refinement reports a converged value") {
    CatalogGerm bm = CatalogGerm::borel_mayer(Complex(0.3, 0), golden_rotation());
    PointEvaluator f = CatalogGerm::pole(Complex(1, 0), 2).evaluator();
    Complex zeta(0.25, 0);
    Complex reference =
        termwise(CatalogGerm::pole(Complex(1, 0), 2).coefficients(64), bm.coefficients(64), zeta);

    RefinedValue refined = refine_nodes(
        [&](std::size_t nodes) {
            return hadamard_on_i(f, bm.evaluator(), zeta, circle(0.6, nodes));
        },
        32, 8192, 1e-10);
    CHECK(refined.cauchy_diff < 1e-10);
    CHECK(refined.nodes <= 8192);
    CHECK(std::abs(refined.value - reference) < 1e-8);
}

TEST_CASE("the entire part reaches far beyond the naive disc") {
    RationalGerm ex1(Complex(1, 0), {Complex(0, 0), Complex(1, 0)});
    double with_log = k_part_radius_estimate(ex1, CatalogGerm::log_over_zeta().evaluator(),
                                             circle(1.6), 0.5, 64);
    double with_unit = k_part_radius_estimate(ex1, delta_evaluator(), circle(1.6), 0.5, 64);
    CHECK(with_log > 0.625);
    CHECK(with_unit > 0.625);
}

}  // TEST_SUITE
