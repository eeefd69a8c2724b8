#include "hadamard/contour.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hadamard {

namespace {

constexpr double kMarginFactor = 0.05;

void validate_spec(const QuadratureSpec& spec, const char* which) {
    if (!(spec.radius > 0.0))
        throw InvalidParameters(std::string("contour: ") + which + " needs a positive radius");
    if (spec.nodes < 16)
        throw InvalidParameters(std::string("contour: ") + which + " needs at least 16 nodes");
}

double contour_distance(const QuadratureSpec& spec, Complex p) {
    return std::abs(std::abs(p - spec.center) - spec.radius);
}

bool strictly_inside(const QuadratureSpec& spec, Complex p, double margin) {
    return std::abs(p - spec.center) <= spec.radius - margin;
}

bool strictly_outside(const QuadratureSpec& spec, Complex p, double margin) {
    return std::abs(p - spec.center) >= spec.radius + margin;
}

void require_inside(const QuadratureSpec& spec, Complex p, double margin, const char* what) {
    if (contour_distance(spec, p) < margin)
        throw DomainViolation(std::string("contour: circle passes within margin of ") + what);
    if (!strictly_inside(spec, p, margin))
        throw NonEnclosing(std::string("contour: circle does not enclose ") + what);
}

void require_outside(const QuadratureSpec& spec, Complex p, double margin, const char* what) {
    if (contour_distance(spec, p) < margin)
        throw DomainViolation(std::string("contour: circle passes within margin of ") + what);
    if (!strictly_outside(spec, p, margin))
        throw NonEnclosing(std::string("contour: circle wrongly encloses ") + what);
}

// (1/2 pi i) \oint integrand(z) dz by the trapezoid rule on the circle.
Complex circle_integral(const QuadratureSpec& spec,
                        const std::function<Complex(Complex)>& integrand) {
    Complex acc(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / double(spec.nodes);
    for (std::size_t m = 0; m < spec.nodes; ++m) {
        Complex offset = std::polar(spec.radius, step * double(m));
        acc += integrand(spec.center + offset) * offset;
    }
    acc /= double(spec.nodes);
    return spec.clockwise ? -acc : acc;
}

constexpr double kPointTol = 1e-300;

}  // namespace

Complex hadamard_on_i(const PointEvaluator& f, const PointEvaluator& g, Complex zeta,
                      const QuadratureSpec& spec) {
    validate_spec(spec, "inner circle");
    const double margin = kMarginFactor * spec.radius;
    require_inside(spec, Complex(0.0, 0.0), margin, "the origin");
    require_inside(spec, zeta, margin, "zeta");
    for (Complex s : g.singular) require_outside(spec, s, margin, "a singular point of g");
    for (Complex s : f.singular) {
        if (std::abs(s) < kPointTol) continue;  // induced point escapes to infinity
        require_inside(spec, zeta / s, margin, "an induced point of f");
    }
    return circle_integral(spec, [&](Complex z) {
        Complex w = zeta / z;
        if (!g.in_domain(z) || !f.in_domain(w))
            throw DomainViolation("contour: node outside an evaluator's validity domain");
        return f(w) * g(z) / z;
    });
}

Complex hadamard_on_c(const PointEvaluator& f, const PointEvaluator& g, Complex zeta,
                      const QuadratureSpec& spec) {
    validate_spec(spec, "swapped circle");
    const double margin = kMarginFactor * spec.radius;
    require_inside(spec, Complex(0.0, 0.0), margin, "the origin");
    require_inside(spec, zeta, margin, "zeta");
    for (Complex s : f.singular) require_outside(spec, s, margin, "a singular point of f");
    for (Complex s : g.singular) {
        if (std::abs(s) < kPointTol) continue;
        require_inside(spec, zeta / s, margin, "an induced point of g");
    }
    return circle_integral(spec, [&](Complex z) {
        Complex w = zeta / z;
        if (!f.in_domain(z) || !g.in_domain(w))
            throw DomainViolation("contour: node outside an evaluator's validity domain");
        return f(z) * g(w) / z;
    });
}

KjParts hadamard_on_kj(const RationalGerm& f, const PointEvaluator& g, Complex zeta,
                       const QuadratureSpec& k_spec, const QuadratureSpec& j_spec) {
    validate_spec(k_spec, "outer circle");
    validate_spec(j_spec, "pole circle");
    if (k_spec.clockwise)
        throw InvalidParameters("contour: the outer circle must run anticlockwise");
    if (!j_spec.clockwise)
        throw InvalidParameters("contour: the pole circle must run clockwise");

    const double k_margin = kMarginFactor * k_spec.radius;
    const double j_margin = kMarginFactor * j_spec.radius;

    require_inside(k_spec, Complex(0.0, 0.0), k_margin, "the origin");
    require_inside(k_spec, zeta, k_margin, "zeta");
    require_inside(k_spec, f.omega, k_margin, "the pole of f");
    require_inside(j_spec, f.omega, j_margin, "the pole of f");
    require_outside(j_spec, Complex(0.0, 0.0), j_margin, "the origin");
    // the pole circle must sit strictly inside the outer one
    if (std::abs(j_spec.center - k_spec.center) + j_spec.radius > k_spec.radius - k_margin)
        throw NonEnclosing("contour: the pole circle is not strictly inside the outer circle");
    for (Complex s : g.singular) {
        if (std::abs(s) < kPointTol) continue;
        require_inside(k_spec, zeta / s, k_margin, "an induced point of g");
        require_outside(j_spec, zeta / s, j_margin, "an induced point of g");
    }

    PointEvaluator fe = rational_evaluator(f);
    auto integrand = [&](Complex z) {
        Complex w = zeta / z;
        if (!g.in_domain(w))
            throw DomainViolation("contour: node outside an evaluator's validity domain");
        return fe(z) * g(w) / z;
    };
    KjParts parts;
    parts.k_part = circle_integral(k_spec, integrand);
    parts.j_part = circle_integral(j_spec, integrand);
    return parts;
}

RefinedValue refine_nodes(const std::function<Complex(std::size_t)>& evaluate, std::size_t start,
                          std::size_t max_nodes, double tol) {
    if (start < 16) throw InvalidParameters("contour: refinement needs at least 16 nodes");
    RefinedValue r;
    r.nodes = start;
    r.value = evaluate(start);
    r.cauchy_diff = std::numeric_limits<double>::infinity();
    while (r.nodes * 2 <= max_nodes) {
        Complex next = evaluate(r.nodes * 2);
        r.cauchy_diff = std::abs(next - r.value);
        r.value = next;
        r.nodes *= 2;
        if (r.cauchy_diff < tol) break;
    }
    return r;
}

namespace {

std::vector<ProbeSample> probe_impl(const std::function<Complex(Complex)>& value_at, Complex omega,
                                    int power, const ProbeConfig& config) {
    if (config.k_min > config.k_max)
        throw InvalidParameters("contour: probe needs k_min <= k_max");
    if (power < 1) throw InvalidParameters("contour: probe power must be at least 1");
    double dir_norm = std::abs(config.direction);
    if (dir_norm < kPointTol)
        throw InvalidParameters("contour: probe direction must be nonzero");
    Complex dir = config.direction / dir_norm;

    std::vector<ProbeSample> samples;
    samples.reserve(std::size_t(config.k_max - config.k_min + 1));
    for (int k = config.k_min; k <= config.k_max; ++k) {
        ProbeSample s;
        s.offset = std::ldexp(1.0, -k);
        Complex zeta = omega * (Complex(1.0, 0.0) - s.offset * dir);
        s.value = value_at(zeta);
        Complex factor(1.0, 0.0);
        for (int i = 0; i < power; ++i) factor *= zeta - omega;
        s.scaled = factor * s.value;
        samples.push_back(s);
    }
    return samples;
}

}  // namespace

std::vector<ProbeSample> limit_probe(const PointEvaluator& product, Complex omega, int power,
                                     const ProbeConfig& config) {
    return probe_impl(
        [&](Complex zeta) {
            if (!product.in_domain(zeta))
                throw DomainViolation("contour: probe point outside the validity domain");
            return product(zeta);
        },
        omega, power, config);
}

std::vector<ProbeSample> limit_probe(const TruncatedGerm& product, Complex omega, int power,
                                     const ProbeConfig& config) {
    return probe_impl([&](Complex zeta) { return partial_sum(product, zeta); }, omega, power,
                      config);
}

double k_part_radius_estimate(const RationalGerm& f, const PointEvaluator& g,
                              const QuadratureSpec& k_spec, double rho, std::size_t samples) {
    if (!(rho > 0.0)) throw InvalidParameters("contour: sampling radius must be positive");
    if (samples < 16) throw InvalidParameters("contour: need at least 16 samples");

    PointEvaluator fe = rational_evaluator(f);
    auto k_part_at = [&](Complex zeta) {
        return circle_integral(k_spec, [&](Complex z) {
            Complex w = zeta / z;
            if (!g.in_domain(w))
                throw DomainViolation("contour: node outside an evaluator's validity domain");
            return fe(z) * g(w) / z;
        });
    };

    std::vector<Complex> values(samples);
    const double step = 2.0 * std::numbers::pi / double(samples);
    for (std::size_t j = 0; j < samples; ++j) values[j] = k_part_at(std::polar(rho, step * double(j)));

    // trapezoid extraction of Taylor coefficients c_t on |zeta| = rho
    double best = 0.0;  // largest |c_t|^(1/t) over the probed tail
    double peak = 0.0;
    std::vector<double> mags(samples / 2, 0.0);
    for (std::size_t t = 1; t < samples / 2; ++t) {
        Complex c(0.0, 0.0);
        for (std::size_t j = 0; j < samples; ++j)
            c += values[j] * std::polar(1.0, -step * double(j) * double(t));
        c /= double(samples) * std::pow(rho, double(t));
        mags[t] = std::abs(c);
        peak = std::max(peak, mags[t]);
    }
    for (std::size_t t = samples / 4; t < samples / 2; ++t) {
        if (mags[t] <= 1e-13 * std::max(peak, 1.0)) continue;  // noise floor: treat as zero
        best = std::max(best, std::pow(mags[t], 1.0 / double(t)));
    }
    if (best == 0.0) return 1e9;  // all tail coefficients at the floor: entire to working precision
    return 1.0 / best;
}

}  // namespace hadamard
