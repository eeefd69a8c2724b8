#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hadamard/germ.hpp"
#include "hadamard/pade.hpp"

namespace hadamard {

enum class SingularityMethod { RatioTest, DombSykes, PadePoles, RootTest };

struct SingularityEstimate {
    SingularityMethod method = SingularityMethod::RatioTest;
    std::vector<Complex> locations;
    std::vector<double> residuals;
    double boundary_score = 0.0;
    // ratios failed the Cauchy criterion: conjugate pairs and natural
    // boundaries land here.  A flag, not a failure.
    bool oscillatory = false;
};

// half-open index window [first, last)
struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0;
};

// Dominant singularity from the ratios f_n/f_{n+1} with one Richardson
// extrapolation step.  Location is the mean of the last ten extrapolated
// values, residual their largest deviation from it.
SingularityEstimate ratio_estimate(const TruncatedGerm& f, IndexRange window);

// limsup |f_n|^{1/n} over the tail half of the truncation.
double root_test_growth(const TruncatedGerm& f);

// Reciprocal growth; HUGE_VAL when the tail is identically zero.
double root_test_radius(const TruncatedGerm& f);

using PadeOrder = std::pair<std::size_t, std::size_t>;

// Fraction of non-spurious approximant poles, pooled over the listed
// orders, lying inside the annulus.  The germ is radius-normalized with
// the root test first so the annulus is always read at radius 1.
double natural_boundary_score(const TruncatedGerm& f,
                              const std::vector<PadeOrder>& orders,
                              std::pair<double, double> annulus);

struct StablePole {
    Complex location;
    double certificate = 0.0;
    std::size_t order_l = 0;
    std::size_t order_m = 0;
};

struct PoleSweep {
    std::size_t order_l = 0;
    std::size_t order_m = 0;
    std::vector<PadePole> poles;
    std::string error;  // nonempty when the solve failed
};

struct ScanConfig {
    std::vector<PadeOrder> orders = {{12, 12}, {16, 16}, {20, 20}};
    std::pair<double, double> annulus = {0.9, 1.1};
    // relative matching tolerance across orders, scaled by max(1, |pole|)
    double match_tol = 0.01;
    IndexRange ratio_window;  // empty selects the tail automatically
};

struct ScanReport {
    SingularityEstimate ratio;
    bool ratio_ok = false;
    std::string ratio_error;
    std::vector<PoleSweep> sweeps;
    std::vector<StablePole> stable_poles;
    double boundary_score = 0.0;
    std::string boundary_error;
    double radius = 0.0;
    std::string note;
};

// Ratio estimate, approximant pole sweep, and boundary score in one pass.
// Component failures are recorded in the report, never thrown.  A pole is
// stable when every successful sweep resolves it within
// match_tol * max(1, |pole|); the last successful sweep supplies the
// reported location, so list orders ascending.
ScanReport scan_report(const TruncatedGerm& f, const ScanConfig& config = {});

}  // namespace hadamard
