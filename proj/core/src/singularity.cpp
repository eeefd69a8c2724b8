#include "hadamard/singularity.hpp"

#include <algorithm>
#include <cmath>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

constexpr double kOscillatorySpread = 5e-2;
constexpr std::size_t kSpreadWindow = 10;

Complex tail_mean(const std::vector<Complex>& xs, std::size_t count) {
    std::size_t first = xs.size() > count ? xs.size() - count : 0;
    Complex acc(0.0, 0.0);
    for (std::size_t i = first; i < xs.size(); ++i) acc += xs[i];
    return acc / double(xs.size() - first);
}

double tail_spread(const std::vector<Complex>& xs, std::size_t count, Complex center) {
    std::size_t first = xs.size() > count ? xs.size() - count : 0;
    double spread = 0.0;
    for (std::size_t i = first; i < xs.size(); ++i)
        spread = std::max(spread, std::abs(xs[i] - center));
    return spread;
}

}  // namespace

SingularityEstimate ratio_estimate(const TruncatedGerm& f, IndexRange window) {
    if (window.last > f.order())
        throw InvalidParameters("ratio_estimate: window exceeds the truncation");
    if (window.first + 3 > window.last)
        throw InvalidParameters("ratio_estimate: window needs at least three indices");
    for (std::size_t n = window.first; n < window.last; ++n)
        if (std::abs(f[n]) < 1e-300) throw ZeroCoefficient("ratio_estimate", n);

    std::vector<Complex> ratios;
    ratios.reserve(window.last - window.first - 1);
    for (std::size_t n = window.first; n + 1 < window.last; ++n)
        ratios.push_back(f[n] / f[n + 1]);

    // n r_n - (n-1) r_{n-1} cancels the 1/n tail of algebraic singularities
    std::vector<Complex> extrapolated;
    extrapolated.reserve(ratios.size() - 1);
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        double n = double(window.first + i);
        extrapolated.push_back(n * ratios[i] - (n - 1.0) * ratios[i - 1]);
    }

    SingularityEstimate estimate;
    estimate.method = SingularityMethod::RatioTest;
    Complex location = tail_mean(extrapolated, kSpreadWindow);
    estimate.locations.push_back(location);
    estimate.residuals.push_back(tail_spread(extrapolated, kSpreadWindow, location));

    Complex raw_center = tail_mean(ratios, kSpreadWindow);
    double raw_spread = tail_spread(ratios, kSpreadWindow, raw_center);
    estimate.oscillatory = raw_spread > kOscillatorySpread * std::max(std::abs(raw_center), 1e-300);
    return estimate;
}

double root_test_growth(const TruncatedGerm& f) {
    std::size_t first = std::max<std::size_t>(1, f.order() / 2);
    double growth = 0.0;
    for (std::size_t n = first; n < f.order(); ++n) {
        double a = std::abs(f[n]);
        if (a > 0.0) growth = std::max(growth, std::pow(a, 1.0 / double(n)));
    }
    return growth;
}

double root_test_radius(const TruncatedGerm& f) {
    double growth = root_test_growth(f);
    return growth > 0.0 ? 1.0 / growth : HUGE_VAL;
}

double natural_boundary_score(const TruncatedGerm& f,
                              const std::vector<PadeOrder>& orders,
                              std::pair<double, double> annulus) {
    if (orders.empty())
        throw InvalidParameters("natural_boundary_score: no orders given");
    if (annulus.first <= 0.0 || annulus.second <= annulus.first)
        throw InvalidParameters("natural_boundary_score: need 0 < r_in < r_out");

    double radius = root_test_radius(f);
    double scale = std::isfinite(radius) && radius > 0.0 ? radius : 1.0;
    double log_scale = std::log(scale);
    std::vector<Complex> scaled(f.order(), Complex(0.0, 0.0));
    for (std::size_t n = 0; n < f.order(); ++n) {
        if (f[n] == Complex(0.0, 0.0)) continue;
        double mag = std::abs(f[n]);
        // factor through logs so the scale power never overflows on its own
        scaled[n] = (f[n] / mag) * std::exp(double(n) * log_scale + std::log(mag));
    }
    TruncatedGerm g(scaled);

    std::size_t inside = 0, total = 0;
    for (auto [l, m] : orders) {
        for (const auto& pole : pade_poles(pade(g, l, m))) {
            if (pole.spurious) continue;
            ++total;
            double r = std::abs(pole.location);
            if (r > annulus.first && r < annulus.second) ++inside;
        }
    }
    return total == 0 ? 0.0 : double(inside) / double(total);
}

ScanReport scan_report(const TruncatedGerm& f, const ScanConfig& config) {
    ScanReport report;
    report.note =
        "coefficient methods resolve the principal sheet only; the expansion "
        "point itself is never reported";
    report.radius = root_test_radius(f);

    IndexRange window = config.ratio_window;
    if (window.last <= window.first) {
        window.last = f.order();
        window.first = window.last > 128 ? window.last - 128 : window.last / 2;
    }
    try {
        report.ratio = ratio_estimate(f, window);
        report.ratio_ok = true;
    } catch (const Error& e) {
        report.ratio_error = e.what();
    }

    for (auto [l, m] : config.orders) {
        PoleSweep sweep;
        sweep.order_l = l;
        sweep.order_m = m;
        try {
            if (l + m + 1 > f.order())
                throw InvalidParameters("scan: order exceeds the truncation");
            sweep.poles = pade_poles(pade(f, l, m));
        } catch (const Error& e) {
            sweep.error = e.what();
        }
        report.sweeps.push_back(std::move(sweep));
    }

    const PoleSweep* top = nullptr;
    for (const auto& sweep : report.sweeps)
        if (sweep.error.empty()) top = &sweep;
    if (top != nullptr) {
        for (const auto& pole : top->poles) {
            if (pole.spurious) continue;
            double tol = config.match_tol * std::max(1.0, std::abs(pole.location));
            bool everywhere = true;
            for (const auto& sweep : report.sweeps) {
                if (&sweep == top || !sweep.error.empty()) continue;
                bool found = false;
                for (const auto& other : sweep.poles)
                    if (!other.spurious &&
                        std::abs(other.location - pole.location) <= tol) {
                        found = true;
                        break;
                    }
                if (!found) {
                    everywhere = false;
                    break;
                }
            }
            if (everywhere)
                report.stable_poles.push_back(
                    {pole.location, pole.certificate, top->order_l, top->order_m});
        }
        std::sort(report.stable_poles.begin(), report.stable_poles.end(),
                  [](const StablePole& x, const StablePole& y) {
                      return std::abs(x.location) < std::abs(y.location);
                  });
    }

    try {
        std::vector<PadeOrder> feasible;
        for (auto [l, m] : config.orders)
            if (l + m + 1 <= f.order()) feasible.emplace_back(l, m);
        if (feasible.empty())
            throw InvalidParameters("scan: no feasible orders for the boundary score");
        report.boundary_score = natural_boundary_score(f, feasible, config.annulus);
    } catch (const Error& e) {
        report.boundary_error = e.what();
    }
    return report;
}

}  // namespace hadamard
