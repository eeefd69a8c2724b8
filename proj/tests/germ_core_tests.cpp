#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/germ.hpp"

using namespace hadamard;

namespace {

TruncatedGerm random_germ(std::mt19937_64& rng, std::size_t order) {
    auto unit = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
    std::vector<Complex> c(order);
    for (std::size_t n = 0; n < order; ++n) c[n] = Complex(unit() * 2 - 1, unit() * 2 - 1);
    return TruncatedGerm(std::move(c));
}

double max_abs_diff(const TruncatedGerm& f, const TruncatedGerm& g) {
    REQUIRE(f.order() == g.order());
    double worst = 0.0;
    for (std::size_t n = 0; n < f.order(); ++n) worst = std::max(worst, std::abs(f[n] - g[n]));
    return worst;
}

}  // namespace

TEST_SUITE("germ_core") {

TEST_CASE("delta is the all-ones series") {
    TruncatedGerm one = delta(1);
    CHECK(one.order() == 1);
    CHECK(one[0] == Complex(1.0, 0.0));

    TruncatedGerm four = delta(4);
    CHECK(four.order() == 4);
    for (std::size_t n = 0; n < 4; ++n) CHECK(four[n] == Complex(1.0, 0.0));

    CHECK_THROWS_AS(delta(0), InvalidParameters);
}

TEST_CASE("delta is the unit of the termwise product") {
    std::mt19937_64 rng(41);
    TruncatedGerm f = random_germ(rng, 33);
    TruncatedGerm lhs = hadamard_product(delta(33), f);
    for (std::size_t n = 0; n < 33; ++n) CHECK(lhs[n] == f[n]);
}

TEST_CASE("termwise product multiplies coefficients pointwise") {
    std::vector<Complex> up(48), down(48);
    for (std::size_t n = 0; n < 48; ++n) {
        up[n] = Complex(double(n + 1), 0.0);
        down[n] = Complex(1.0 / double(n + 1), 0.0);
    }
    TruncatedGerm prod = hadamard_product(TruncatedGerm(up), TruncatedGerm(down));
    for (std::size_t n = 0; n < 48; ++n) CHECK(prod[n] == Complex(1.0, 0.0));
}

TEST_CASE("termwise product truncates to the shorter operand") {
    std::mt19937_64 rng(42);
    TruncatedGerm f = random_germ(rng, 5);
    TruncatedGerm g = random_germ(rng, 9);
    CHECK(hadamard_product(f, g).order() == 5);
    CHECK(hadamard_product(g, f).order() == 5);
}

TEST_CASE("termwise product is commutative exactly and associative to rounding") {
    std::mt19937_64 rng(43);
    TruncatedGerm f = random_germ(rng, 64);
    TruncatedGerm g = random_germ(rng, 64);
    TruncatedGerm h = random_germ(rng, 64);
    CHECK(max_abs_diff(hadamard_product(f, g), hadamard_product(g, f)) == 0.0);
    // complex multiplication regroups with one rounding step
    CHECK(max_abs_diff(hadamard_product(hadamard_product(f, g), h),
                       hadamard_product(f, hadamard_product(g, h))) < 1e-14);
}

TEST_CASE("termwise inverse takes reciprocal coefficients") {
    std::vector<Complex> f(32);
    for (std::size_t n = 0; n < 32; ++n) f[n] = Complex(double((n + 1) * (n + 3)), 0.0);
    TruncatedGerm g = hadamard_inverse(TruncatedGerm(f));
    for (std::size_t n = 0; n < 32; ++n)
        CHECK(g[n].real() == doctest::Approx(1.0 / double((n + 1) * (n + 3))).epsilon(1e-15));
}

TEST_CASE("the unit is its own termwise inverse") {
    TruncatedGerm g = hadamard_inverse(delta(16));
    for (std::size_t n = 0; n < 16; ++n) CHECK(g[n] == Complex(1.0, 0.0));
}

TEST_CASE("termwise inverse reports the index of a vanishing coefficient") {
    TruncatedGerm f({Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(0.0, 0.0), Complex(4.0, 0.0)});
    try {
        hadamard_inverse(f);
        FAIL("expected ZeroCoefficient");
    } catch (const ZeroCoefficient& e) {
        CHECK(e.index == 2);
    }
}

TEST_CASE("inverse law holds at rounding level for random nonzero germs") {
    std::mt19937_64 rng(44);
    auto unit = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
    std::vector<Complex> c(128);
    for (std::size_t n = 0; n < 128; ++n)
        c[n] = std::polar(0.25 + unit(), 6.283185307179586 * unit());
    TruncatedGerm f(c);
    TruncatedGerm fg = hadamard_product(f, hadamard_inverse(f));
    for (std::size_t n = 0; n < 128; ++n)
        CHECK(std::abs(fg[n] - Complex(1.0, 0.0)) < 4e-16);
}

TEST_CASE("convolution matches the double-loop oracle") {
    std::mt19937_64 rng(45);
    TruncatedGerm f = random_germ(rng, 40);
    TruncatedGerm g = random_germ(rng, 40);
    TruncatedGerm fg = cauchy_product(f, g);
    for (std::size_t n = 0; n < 40; ++n) {
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k <= n; ++k) acc += f[k] * g[n - k];
        CHECK(std::abs(fg[n] - acc) < 1e-13);
    }
}

TEST_CASE("convolution square of the unit counts the terms") {
    TruncatedGerm sq = cauchy_product(delta(24), delta(24));
    for (std::size_t n = 0; n < 24; ++n) CHECK(sq[n] == Complex(double(n + 1), 0.0));
}

TEST_CASE("convolution unit is the monomial one") {
    std::mt19937_64 rng(46);
    TruncatedGerm f = random_germ(rng, 16);
    std::vector<Complex> e(16, Complex(0.0, 0.0));
    e[0] = Complex(1.0, 0.0);
    CHECK(max_abs_diff(cauchy_product(f, TruncatedGerm(e)), f) == 0.0);
}

TEST_CASE("derivative of the unit counts the terms") {
    TruncatedGerm d = derivative(delta(20), 1);
    CHECK(d.order() == 19);
    for (std::size_t n = 0; n < 19; ++n) CHECK(d[n] == Complex(double(n + 1), 0.0));
}

TEST_CASE("zeroth derivative is the identity") {
    std::mt19937_64 rng(47);
    TruncatedGerm f = random_germ(rng, 12);
    CHECK(max_abs_diff(derivative(f, 0), f) == 0.0);
}

TEST_CASE("second derivative matches direct index arithmetic") {
    std::mt19937_64 rng(48);
    TruncatedGerm f = random_germ(rng, 30);
    TruncatedGerm d = derivative(f, 2);
    CHECK(d.order() == 28);
    for (std::size_t n = 0; n < 28; ++n) {
        Complex expect = double((n + 2) * (n + 1)) * f[n + 2];
        CHECK(std::abs(d[n] - expect) < 1e-12);
    }
}

TEST_CASE("derivative refuses to drop the whole germ") {
    CHECK_THROWS_AS(derivative(delta(3), 3), OrderUnderflow);
    CHECK_THROWS_AS(derivative(delta(3), 5), OrderUnderflow);
}

TEST_CASE("index shift drops leading coefficients") {
    TruncatedGerm f({Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0)});
    TruncatedGerm s = coefficient_shift(f, 2);
    CHECK(s.order() == 2);
    CHECK(s[0] == Complex(3.0, 0.0));
    CHECK(s[1] == Complex(4.0, 0.0));
    CHECK(max_abs_diff(coefficient_shift(f, 0), f) == 0.0);
    CHECK_THROWS_AS(coefficient_shift(f, 4), OrderUnderflow);
}

TEST_CASE("shifts compose additively") {
    std::mt19937_64 rng(49);
    TruncatedGerm f = random_germ(rng, 24);
    TruncatedGerm twice = coefficient_shift(coefficient_shift(f, 3), 2);
    TruncatedGerm once = coefficient_shift(f, 5);
    CHECK(max_abs_diff(twice, once) == 0.0);
}

TEST_CASE("diagonal scaling matches the rising-factorial rule") {
    TruncatedGerm t = theta_power(delta(16), 1);
    CHECK(t.order() == 16);
    for (std::size_t n = 0; n < 16; ++n) CHECK(t[n] == Complex(double(n + 1), 0.0));

    std::mt19937_64 rng(50);
    TruncatedGerm g = random_germ(rng, 10);
    CHECK(max_abs_diff(theta_power(g, 0), g) == 0.0);
}

TEST_CASE("derivative against shift-and-scale identity on random germs") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 24; ++trial) {
        std::size_t order = 8 + rng() % 249;
        std::size_t s = 1 + rng() % 5;
        if (s >= order) s = order - 1;
        TruncatedGerm f = random_germ(rng, order);
        TruncatedGerm g = random_germ(rng, order);
        TruncatedGerm lhs = hadamard_product(derivative(f, s), g);
        TruncatedGerm rhs = hadamard_product(coefficient_shift(f, s), theta_power(g, s));
        REQUIRE(lhs.order() == rhs.order());
        for (std::size_t n = 0; n < lhs.order(); ++n) {
            double scale = std::max(1.0, std::abs(lhs[n]));
            CHECK(std::abs(lhs[n] - rhs[n]) <= 1e-13 * scale);
        }
    }
}

TEST_CASE("construction rejects empty and non-finite data") {
    CHECK_THROWS_AS(TruncatedGerm(std::vector<Complex>{}), InvalidParameters);
    CHECK_THROWS_AS(TruncatedGerm({Complex(1.0, 0.0), Complex(std::nan(""), 0.0)}),
                    InvalidParameters);
    CHECK_THROWS_AS(TruncatedGerm({Complex(HUGE_VAL, 0.0)}), InvalidParameters);
}

TEST_CASE("partial sums evaluate the truncated polynomial") {
    TruncatedGerm f({Complex(1, 0), Complex(2, 0), Complex(3, 0)});
    Complex z(0.5, 0.0);
    CHECK(std::abs(partial_sum(f, z) - Complex(1.0 + 1.0 + 0.75, 0.0)) < 1e-15);
}

}  // TEST_SUITE
