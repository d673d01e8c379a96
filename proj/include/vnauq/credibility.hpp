#pragma once

#include <array>

#include "vnauq/skew_family.hpp"
#include "vnauq/stats.hpp"

namespace vnauq {

/// Intermediate quantities of the linear-Bayes (credibility) moment blend,
/// one slot per moment order k = 1, 2, 3 (index k-1):
///   prior_raw_moment     mu_k     = E[X^k], marginal over the skew prior
///   prior_raw_moment_2k  mu_2k    = E[X^2k]
///   tau_sq               tau_k^2  = mu_k^2 + Var_theta[E(X^k|theta)]
///   weight               beta_k   = n(tau_k^2 - mu_k^2) /
///                                   (n(tau_k^2 - mu_k^2) + mu_2k - tau_k^2)
///   blended_moment       muhat_k  = beta_k * mean(x^k) + (1-beta_k) * mu_k
struct CredibilityWorkspace {
    std::array<double, 3> prior_raw_moment{};
    std::array<double, 3> prior_raw_moment_2k{};
    std::array<double, 3> tau_sq{};
    std::array<double, 3> weight{};
    std::array<double, 3> blended_moment{};
    std::array<double, 3> sample_raw_moment{};
    std::size_t sample_count = 0;
};

/// Blends prior and sample raw moments for k = 1..3. The skewed prior model
/// keeps the location and scale of the base fit while the undetermined shape
/// theta varies: its implied moment skewness is normally distributed around
/// prior.skewness with width prior.skew_std_error, truncated to the
/// attainable range. The marginalization runs over a deterministic 64-node
/// quadrature grid spanning +-5 standard errors, each node's conditional
/// moments evaluated by inner quadrature. Requires samples.n >= 3 and a prior
/// acceptable to fit_skew_family.
CredibilityWorkspace credibility_moments(const PriorSummary& prior, const SampleSet& samples);

/// Skewness of the blended moments,
///   (muhat_3 - 3*muhat_2*muhat_1 + 2*muhat_1^3) / (muhat_2 - muhat_1^2)^(3/2).
/// Requires a positive blended variance.
double posterior_skewness(const CredibilityWorkspace& workspace);

} // namespace vnauq
