#pragma once

#include <array>

#include "vnauq/errors.hpp"
#include "vnauq/stats.hpp"

namespace vnauq {

/// Distribution characteristics extracted from a Monte Carlo run, used as the
/// second-tier prior: mean, std, skewness coefficient and its standard error.
struct PriorSummary {
    double mean = 0.0;
    double std = 1.0;
    double skewness = 0.0;
    double skew_std_error = 0.0;

    void validate() const {
        if (!(std > 0.0))
            throw DomainError("PriorSummary: std must be > 0");
        if (skew_std_error < 0.0)
            throw DomainError("PriorSummary: skew_std_error must be >= 0");
    }
};

/// Largest moment skewness a skew-normal can attain, (4-pi)/2 * b^3 /
/// (1 - b^2)^(3/2) with b = sqrt(2/pi), rounded to the range enforced here.
inline constexpr double kMaxFamilySkewness = 0.9952717;

/// Three-parameter skewed distribution: a skew-normal with location, scale
/// and shape (the undetermined skew coefficient of the prior model).
struct SkewFamily {
    double location = 0.0;
    double scale = 1.0;
    double shape = 0.0;

    double mean() const;
    double variance() const;
    double skewness() const;

    /// Density at x: (2/scale) * phi(z) * Phi(shape*z), z = (x-location)/scale.
    double pdf(double x) const;
};

/// Method-of-moments fit: returns the family member whose first three moments
/// match (mean, std^2, skewness) of the summary. Shape comes from the
/// closed-form skewness-delta relation, then scale, then location.
/// Throws DomainError when |skewness| >= kMaxFamilySkewness (hard error, no
/// clamping: a clamped fit would silently bias the second tier).
SkewFamily fit_skew_family(const PriorSummary& prior);

/// Fit from mean/std/skewness directly.
SkewFamily fit_skew_family(double mean, double std, double skewness);

/// Shape parameter whose standardized skew-normal has the given moment
/// skewness (closed-form inversion of the skewness-delta relation).
/// Requires |skewness| < kMaxFamilySkewness.
double shape_for_skewness(double skewness);

/// Conditional raw moment E[X^k | family], 1 <= k <= 6, by deterministic
/// numeric quadrature. The standardized moments E[Z^j] are integrated to an
/// absolute tolerance of 1e-12 and the raw moment assembled by binomial
/// expansion, so the result holds near-full relative precision at any
/// location/scale (and easily meets 1e-10 absolute for order-one moments).
double conditional_raw_moment(const SkewFamily& family, int k);

/// Conditional variance Var[X^k | family] = E[X^2k] - E[X^k]^2, 1 <= k <= 3,
/// assembled from the same standardized moments. Used by the credibility
/// estimator.
double conditional_power_variance(const SkewFamily& family, int k);

/// All of E[X^j | family] for j = 0..6 from one set of standardized-moment
/// integrations; index j holds the j-th raw moment.
std::array<double, 7> conditional_raw_moments_upto6(const SkewFamily& family);

} // namespace vnauq
