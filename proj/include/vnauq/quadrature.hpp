#pragma once

#include <functional>
#include <vector>

namespace vnauq {

/// Adaptive Simpson integration of f over [a, b] to the given absolute
/// tolerance. Recursion depth is capped; at the cap the best available
/// estimate is returned, which bounds the work when the request is below
/// what double precision can resolve.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 36);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

} // namespace vnauq
