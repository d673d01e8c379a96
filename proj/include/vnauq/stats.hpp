#pragma once

#include <cstddef>
#include <vector>

#include "vnauq/errors.hpp"

namespace vnauq {

/// Normal belief about a scalar uncertainty source, prior or posterior.
/// Units are those of the underlying source (farads, metres, dimensionless).
struct GaussianBelief {
    double mean = 0.0;
    double std = 1.0;

    void validate() const {
        if (!(std > 0.0))
            throw DomainError("GaussianBelief: std must be > 0");
    }
};

/// An ordered batch of scalar observations.
struct SampleSet {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }

    double mean() const;

    /// Sample standard deviation with divisor n-1. Requires n >= 2.
    double sample_std() const;

    /// Mean of k-th powers, (1/n) * sum x_i^k.
    double raw_moment(unsigned k) const;
};

/// Result of the conjugate normal update.
struct PosteriorNormal {
    double mean = 0.0;
    double variance = 0.0;
};

/// Conjugate normal fusion of a prior belief with observed samples.
/// The likelihood width is the sample standard deviation, so the posterior is
///   mean = (n*xbar/s^2 + mu0/sigma0^2) / (n/s^2 + 1/sigma0^2)
///   variance = 1 / (n/s^2 + 1/sigma0^2).
/// Throws DomainError when n < 2 or the samples are degenerate (s == 0).
PosteriorNormal posterior_normal(const GaussianBelief& prior, const SampleSet& samples);

/// Skewness of discrete sample data,
///   sqrt(n) * sum (x_i - xbar)^3 / [sum (x_i - xbar)^2]^(3/2).
/// Requires n >= 3 and a nonzero spread.
double sample_skewness(const SampleSet& samples);

/// Skewness from raw moments m_k = E[X^k],
///   (m3 - 3*m2*m1 + 2*m1^3) / (m2 - m1^2)^(3/2).
/// Requires m2 - m1^2 > 0.
double moment_skewness(double m1, double m2, double m3);

/// Normal-theory standard error of the sample skewness,
/// sqrt(6n(n-1) / ((n-2)(n+1)(n+3))). Requires n >= 3.
double skewness_std_error(std::size_t n);

} // namespace vnauq
