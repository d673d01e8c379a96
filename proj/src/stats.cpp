#include "vnauq/stats.hpp"

#include <cmath>

namespace vnauq {

double SampleSet::mean() const {
    if (values.empty())
        throw DomainError("SampleSet: mean of empty set");
    double sum = 0.0;
    for (double v : values)
        sum += v;
    return sum / static_cast<double>(values.size());
}

double SampleSet::sample_std() const {
    if (values.size() < 2)
        throw DomainError("SampleSet: sample_std needs n >= 2");
    const double xbar = mean();
    double ss = 0.0;
    for (double v : values)
        ss += (v - xbar) * (v - xbar);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double SampleSet::raw_moment(unsigned k) const {
    if (values.empty())
        throw DomainError("SampleSet: raw moment of empty set");
    double sum = 0.0;
    for (double v : values)
        sum += std::pow(v, static_cast<double>(k));
    return sum / static_cast<double>(values.size());
}

PosteriorNormal posterior_normal(const GaussianBelief& prior, const SampleSet& samples) {
    prior.validate();
    const std::size_t n = samples.size();
    if (n < 2)
        throw DomainError("posterior_normal: need at least 2 samples");
    const double s = samples.sample_std();
    if (!(s > 0.0))
        throw DomainError("posterior_normal: degenerate samples (zero spread)");

    const double xbar = samples.mean();
    const double nd = static_cast<double>(n);
    const double precision = nd / (s * s) + 1.0 / (prior.std * prior.std);
    const double weighted = nd * xbar / (s * s) + prior.mean / (prior.std * prior.std);
    return PosteriorNormal{weighted / precision, 1.0 / precision};
}

double sample_skewness(const SampleSet& samples) {
    const std::size_t n = samples.size();
    if (n < 3)
        throw DomainError("sample_skewness: need at least 3 samples");
    const double xbar = samples.mean();
    double s2 = 0.0;
    double s3 = 0.0;
    for (double v : samples.values) {
        const double d = v - xbar;
        s2 += d * d;
        s3 += d * d * d;
    }
    if (!(s2 > 0.0))
        throw DomainError("sample_skewness: all samples equal");
    return std::sqrt(static_cast<double>(n)) * s3 / std::pow(s2, 1.5);
}

double moment_skewness(double m1, double m2, double m3) {
    const double var = m2 - m1 * m1;
    if (!(var > 0.0))
        throw DomainError("moment_skewness: degenerate variance");
    return (m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1) / std::pow(var, 1.5);
}

double skewness_std_error(std::size_t n) {
    if (n < 3)
        throw DomainError("skewness_std_error: need n >= 3");
    const double nd = static_cast<double>(n);
    return std::sqrt(6.0 * nd * (nd - 1.0) /
                     ((nd - 2.0) * (nd + 1.0) * (nd + 3.0)));
}

} // namespace vnauq
