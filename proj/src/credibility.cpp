#include "vnauq/credibility.hpp"

#include <cmath>
#include <vector>

#include "vnauq/quadrature.hpp"

namespace vnauq {

namespace {

constexpr int kThetaNodes = 64;
constexpr double kThetaSpan = 5.0; // grid half-width in units of skew_std_error

struct ThetaGrid {
    std::vector<double> skewness; // implied moment skewness at each node
    std::vector<double> weight;   // normalized, sums to 1
};

// Quadrature grid over the hyper-distribution of the skew coefficient:
// moment skewness ~ Normal(prior.skewness, skew_std_error^2), truncated to
// the attainable range. Zero standard error collapses to a single node.
ThetaGrid make_theta_grid(const PriorSummary& prior) {
    ThetaGrid grid;
    const double s = prior.skew_std_error;
    if (s == 0.0) {
        grid.skewness = {prior.skewness};
        grid.weight = {1.0};
        return grid;
    }

    const double bound = kMaxFamilySkewness * (1.0 - 1e-12);
    const double lo = std::max(prior.skewness - kThetaSpan * s, -bound);
    const double hi = std::min(prior.skewness + kThetaSpan * s, bound);

    const GaussLegendreRule rule = gauss_legendre(kThetaNodes);
    grid.skewness.resize(kThetaNodes);
    grid.weight.resize(kThetaNodes);
    double total = 0.0;
    for (int j = 0; j < kThetaNodes; ++j) {
        const double lambda = 0.5 * (hi - lo) * rule.nodes[j] + 0.5 * (hi + lo);
        const double z = (lambda - prior.skewness) / s;
        const double pdf = std::exp(-0.5 * z * z);
        grid.skewness[j] = lambda;
        grid.weight[j] = rule.weights[j] * pdf;
        total += grid.weight[j];
    }
    if (!(total > 0.0))
        throw DomainError("credibility_moments: hyper-distribution mass vanished "
                          "inside the attainable skewness range");
    for (double& w : grid.weight)
        w /= total;
    return grid;
}

} // namespace

CredibilityWorkspace credibility_moments(const PriorSummary& prior, const SampleSet& samples) {
    prior.validate();
    if (samples.size() < 3)
        throw DomainError("credibility_moments: need at least 3 samples");

    // The skewed prior model: location and scale come from the base fit and
    // stay put; the hyper-distribution varies only the shape, through its
    // implied moment skewness.
    const SkewFamily base = fit_skew_family(prior);

    const ThetaGrid grid = make_theta_grid(prior);
    const std::size_t nodes = grid.skewness.size();

    // Conditional mean and variance of X^k at every node.
    std::array<std::vector<double>, 3> cond_mean;
    std::array<std::vector<double>, 3> cond_var;
    for (int k = 0; k < 3; ++k) {
        cond_mean[k].resize(nodes);
        cond_var[k].resize(nodes);
    }
    for (std::size_t j = 0; j < nodes; ++j) {
        const SkewFamily family{base.location, base.scale, shape_for_skewness(grid.skewness[j])};
        const std::array<double, 7> raw = conditional_raw_moments_upto6(family);
        for (int k = 0; k < 3; ++k) {
            cond_mean[k][j] = raw[k + 1];
            cond_var[k][j] = std::max(raw[2 * (k + 1)] - raw[k + 1] * raw[k + 1], 0.0);
        }
    }

    CredibilityWorkspace ws;
    ws.sample_count = samples.size();
    const double n = static_cast<double>(samples.size());
    for (int k = 0; k < 3; ++k) {
        double mu = 0.0;
        for (std::size_t j = 0; j < nodes; ++j)
            mu += grid.weight[j] * cond_mean[k][j];

        // Between-node and within-node pieces, both in central form:
        // tau^2 - mu^2 = Var_theta[E(X^k|theta)], mu_2k - tau^2 = E_theta[Var(X^k|theta)].
        double between = 0.0;
        double within = 0.0;
        for (std::size_t j = 0; j < nodes; ++j) {
            const double d = cond_mean[k][j] - mu;
            between += grid.weight[j] * d * d;
            within += grid.weight[j] * cond_var[k][j];
        }

        ws.prior_raw_moment[k] = mu;
        ws.tau_sq[k] = mu * mu + between;
        ws.prior_raw_moment_2k[k] = ws.tau_sq[k] + within;
        ws.weight[k] = between > 0.0 ? n * between / (n * between + within) : 0.0;
        ws.sample_raw_moment[k] = samples.raw_moment(static_cast<unsigned>(k + 1));
        ws.blended_moment[k] = ws.weight[k] * ws.sample_raw_moment[k] +
                               (1.0 - ws.weight[k]) * mu;
    }
    return ws;
}

double posterior_skewness(const CredibilityWorkspace& ws) {
    return moment_skewness(ws.blended_moment[0], ws.blended_moment[1], ws.blended_moment[2]);
}

} // namespace vnauq
