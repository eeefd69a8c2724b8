#pragma once

#include <functional>
#include <vector>

#include "hadamard/germ.hpp"

namespace hadamard {

// A function handle for analytic continuation on the principal sheet: a point
// evaluator plus the declared singular points and a validity predicate.
// Quadrature routines keep contours away from `singular` and refuse points
// where `in_domain` is false (branch cuts, natural boundaries).
struct PointEvaluator {
    std::function<Complex(Complex)> eval;
    std::vector<Complex> singular;
    std::function<bool(Complex)> in_domain = [](Complex) { return true; };

    Complex operator()(Complex z) const { return eval(z); }
};

// Evaluator for the truncated polynomial itself (entire, no singular points).
PointEvaluator partial_sum_evaluator(TruncatedGerm f);

// 1/(1-z), the termwise unit, singular at 1.
PointEvaluator delta_evaluator();

}  // namespace hadamard
