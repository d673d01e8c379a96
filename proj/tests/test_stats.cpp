#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "vnauq/stats.hpp"

using namespace vnauq;

namespace {

// Oracle for the conjugate update: moments of the numerically normalized
// product of the prior density and the sample likelihood on a grid. Works in
// log space and never touches the closed-form posterior.
struct GridMoments {
    double mean;
    double variance;
};

GridMoments grid_posterior_moments(const GaussianBelief& prior, const SampleSet& samples,
                                   double lo, double hi, double step) {
    const double n = static_cast<double>(samples.size());
    const double xbar = samples.mean();
    const double s = samples.sample_std();

    auto log_product = [&](double x) {
        const double prior_term = -(x - prior.mean) * (x - prior.mean) /
                                  (2.0 * prior.std * prior.std);
        const double like_term = -n * (x - xbar) * (x - xbar) / (2.0 * s * s);
        return prior_term + like_term;
    };

    double peak = -1e300;
    for (double x = lo; x <= hi; x += step)
        peak = std::max(peak, log_product(x));

    double mass = 0.0, first = 0.0;
    for (double x = lo; x <= hi; x += step) {
        const double q = std::exp(log_product(x) - peak);
        mass += q;
        first += q * x;
    }
    const double mean = first / mass;
    double second = 0.0;
    for (double x = lo; x <= hi; x += step)
        second += std::exp(log_product(x) - peak) * (x - mean) * (x - mean);
    return {mean, second / mass};
}

} // namespace

TEST_CASE("posterior_normal: symmetric samples with unit prior") {
    const GaussianBelief prior{0.0, 1.0};
    const SampleSet samples{{-1.0, 0.0, 1.0}};
    const PosteriorNormal post = posterior_normal(prior, samples);
    CHECK(std::abs(post.mean) < 1e-15);
    CHECK(post.variance == doctest::Approx(0.25).epsilon(1e-12));

    const GridMoments oracle = grid_posterior_moments(prior, samples, -6.0, 6.0, 1e-4);
    CHECK(std::abs(post.mean - oracle.mean) < 1e-6);
    CHECK(post.variance == doctest::Approx(oracle.variance).epsilon(1e-6));
}

TEST_CASE("posterior_normal: vague prior collapses to sample statistics") {
    const GaussianBelief prior{2.0, 1e6};
    const SampleSet samples{{1.0, 2.0, 3.0}};
    const PosteriorNormal post = posterior_normal(prior, samples);
    CHECK(std::abs(post.mean - 2.0) < 1e-9);
    CHECK(std::abs(post.variance - 1.0 / 3.0) < 1e-9);
}

TEST_CASE("posterior_normal: textbook numbers") {
    // n = 4, xbar = 12, s = 1 against prior (10, 2):
    //   A = 4/1 + 1/4 = 4.25, B = 48 + 2.5 = 50.5
    const GaussianBelief prior{10.0, 2.0};
    // Evenly spaced around 12 with spacing sqrt(3/5): xbar = 12, s = 1 exactly.
    const SampleSet exact{{10.838104996137775, 11.612701665379258, 12.387298334620742,
                           13.161895003862225}};
    REQUIRE(exact.mean() == doctest::Approx(12.0).epsilon(1e-12));
    REQUIRE(exact.sample_std() == doctest::Approx(1.0).epsilon(1e-12));

    const PosteriorNormal post = posterior_normal(prior, exact);
    CHECK(post.mean == doctest::Approx(50.5 / 4.25).epsilon(1e-12));
    CHECK(post.variance == doctest::Approx(1.0 / 4.25).epsilon(1e-12));

    const GridMoments oracle = grid_posterior_moments(prior, exact, 4.0, 20.0, 1e-4);
    CHECK(post.mean == doctest::Approx(oracle.mean).epsilon(1e-6));
    CHECK(post.variance == doctest::Approx(oracle.variance).epsilon(1e-6));
}

TEST_CASE("posterior_normal: error paths") {
    CHECK_THROWS_AS(posterior_normal({0.0, 1.0}, SampleSet{{1.0}}), DomainError);
    CHECK_THROWS_AS(posterior_normal({0.0, 1.0}, SampleSet{{2.0, 2.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(posterior_normal({0.0, -1.0}, SampleSet{{1.0, 2.0}}), DomainError);
}

TEST_CASE("posterior_normal: grid oracle over random cases, and conjugate sanity") {
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> mean_dist(1.0, 4.0);
    std::uniform_real_distribution<double> std_dist(0.5, 2.0);
    std::uniform_int_distribution<int> n_dist(2, 40);

    for (int rep = 0; rep < 100; ++rep) {
        const GaussianBelief prior{mean_dist(rng), std_dist(rng)};
        const int n = n_dist(rng);
        const double center = mean_dist(rng);
        const double width = std_dist(rng);
        std::normal_distribution<double> draw(center, width);
        SampleSet samples;
        for (int i = 0; i < n; ++i)
            samples.values.push_back(draw(rng));
        if (!(samples.sample_std() > 0.0))
            continue;

        const PosteriorNormal post = posterior_normal(prior, samples);

        // Strict variance reduction against both information sources.
        const double s = samples.sample_std();
        CHECK(post.variance < prior.std * prior.std);
        CHECK(post.variance < s * s / static_cast<double>(n));

        const double spread = std::max(prior.std, s);
        const double lo = std::min(prior.mean, samples.mean()) - 10.0 * spread;
        const double hi = std::max(prior.mean, samples.mean()) + 10.0 * spread;
        const double step = std::min(prior.std, s / std::sqrt(n)) / 300.0;
        const GridMoments oracle = grid_posterior_moments(prior, samples, lo, hi, step);
        CHECK(std::abs(post.mean - oracle.mean) <= 1e-6 * std::abs(oracle.mean));
        CHECK(std::abs(post.variance - oracle.variance) <= 1e-6 * oracle.variance);
    }
}

TEST_CASE("sample_skewness: frozen examples") {
    CHECK(sample_skewness(SampleSet{{-1.0, 0.0, 1.0}}) == doctest::Approx(0.0).scale(1.0));
    // Oracle: skewness from empirical raw moments with population-moment
    // normalization. For {0,0,3}: m1 = 1, m2 = 3, m3 = 9 ->
    // (9 - 9 + 2) / (3 - 1)^(3/2) = 1/sqrt(2).
    const double expected = 1.0 / std::sqrt(2.0);
    CHECK(sample_skewness(SampleSet{{0.0, 0.0, 3.0}}) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(moment_skewness(1.0, 3.0, 9.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(sample_skewness(SampleSet{{-3.0, 0.0, 0.0}}) ==
          doctest::Approx(-expected).epsilon(1e-12));
}

TEST_CASE("sample_skewness: equals moment form on empirical raw moments") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> draw(0.5, 2.0);
    for (int rep = 0; rep < 20; ++rep) {
        SampleSet samples;
        for (int i = 0; i < 37; ++i)
            samples.values.push_back(draw(rng) * draw(rng));
        const double direct = sample_skewness(samples);
        const double via_moments = moment_skewness(
            samples.raw_moment(1), samples.raw_moment(2), samples.raw_moment(3));
        CHECK(direct == doctest::Approx(via_moments).epsilon(1e-9));
    }
}

TEST_CASE("sample_skewness: affine behavior and permutation invariance") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> draw(0.0, 1.0);
    std::uniform_real_distribution<double> scale_dist(-3.0, 3.0);
    for (int rep = 0; rep < 30; ++rep) {
        SampleSet samples;
        for (int i = 0; i < 25; ++i)
            samples.values.push_back(draw(rng) + 0.2 * draw(rng) * draw(rng));
        const double a = scale_dist(rng);
        if (a == 0.0)
            continue;
        const double b = scale_dist(rng);

        SampleSet affine;
        for (double v : samples.values)
            affine.values.push_back(a * v + b);
        const double base = sample_skewness(samples);
        CHECK(sample_skewness(affine) ==
              doctest::Approx((a > 0 ? 1.0 : -1.0) * base).epsilon(1e-9));

        SampleSet shuffled = samples;
        std::shuffle(shuffled.values.begin(), shuffled.values.end(), rng);
        CHECK(sample_skewness(shuffled) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("sample_skewness: error paths") {
    CHECK_THROWS_AS(sample_skewness(SampleSet{{1.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(sample_skewness(SampleSet{{5.0, 5.0, 5.0}}), DomainError);
}

TEST_CASE("moment_skewness: standard normal and exponential") {
    CHECK(moment_skewness(0.0, 1.0, 0.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(moment_skewness(1.0, 2.0, 6.0) == doctest::Approx(2.0).epsilon(1e-12));

    // Monte Carlo oracle: skewness of 1e7 unit-exponential draws.
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t n = 10'000'000;
    double s1 = 0.0;
    std::vector<double> draws(n);
    for (std::size_t i = 0; i < n; ++i) {
        draws[i] = -std::log(1.0 - u(rng));
        s1 += draws[i];
    }
    const double mean = s1 / static_cast<double>(n);
    double s2 = 0.0, s3 = 0.0;
    for (double d : draws) {
        const double dev = d - mean;
        s2 += dev * dev;
        s3 += dev * dev * dev;
    }
    const double mc_skew = std::sqrt(static_cast<double>(n)) * s3 / std::pow(s2, 1.5);
    CHECK(std::abs(moment_skewness(1.0, 2.0, 6.0) - mc_skew) < 0.01);
}

TEST_CASE("moment_skewness: translation invariance") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> draw(1.0, 1.5);
    std::uniform_real_distribution<double> shift(-10.0, 10.0);
    for (int rep = 0; rep < 20; ++rep) {
        SampleSet samples;
        for (int i = 0; i < 50; ++i) {
            const double v = draw(rng);
            samples.values.push_back(v * v);
        }
        const double m1 = samples.raw_moment(1);
        const double m2 = samples.raw_moment(2);
        const double m3 = samples.raw_moment(3);
        const double c = shift(rng);
        const double m1c = m1 + c;
        const double m2c = m2 + 2.0 * c * m1 + c * c;
        const double m3c = m3 + 3.0 * c * m2 + 3.0 * c * c * m1 + c * c * c;
        CHECK(moment_skewness(m1c, m2c, m3c) ==
              doctest::Approx(moment_skewness(m1, m2, m3)).epsilon(1e-7));
    }
}

TEST_CASE("moment_skewness: degenerate variance") {
    CHECK_THROWS_AS(moment_skewness(1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("skewness_std_error: frozen values") {
    // Direct formula evaluation at n = 50.
    const double expected = std::sqrt(6.0 * 50.0 * 49.0 / (48.0 * 51.0 * 53.0));
    CHECK(skewness_std_error(50) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(expected == doctest::Approx(0.33660070854935886).epsilon(1e-12));
    CHECK_THROWS_AS(skewness_std_error(2), DomainError);
}
