#include "vnauq/skew_family.hpp"

#include <array>
#include <cmath>

#include "vnauq/quadrature.hpp"

namespace vnauq {

namespace {

constexpr double kHalfWidth = 14.0; // +-14 sigma covers k<=6 moments far below 1e-10

double std_normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// Standardized skew-normal density, 2*phi(z)*Phi(shape*z).
double sn_pdf(double z, double shape) {
    return 2.0 * std_normal_pdf(z) * std_normal_cdf(shape * z);
}

double delta_of_shape(double shape) {
    return shape / std::sqrt(1.0 + shape * shape);
}

// Standardized moments E[Z^j], j = 0..6, of the unit skew-normal with the
// given shape. These integrands are all O(1), so a plain absolute tolerance
// is meaningful; panelling the range keeps the adaptive rule from
// terminating on a coarse scan that straddles the bump.
std::array<double, 7> standardized_moments(double shape) {
    std::array<double, 7> zm;
    zm[0] = 1.0;
    for (int j = 1; j <= 6; ++j) {
        const auto integrand = [&](double z) { return std::pow(z, j) * sn_pdf(z, shape); };
        double total = 0.0;
        const int panels = 8;
        for (int p = 0; p < panels; ++p) {
            const double a = -kHalfWidth + 2.0 * kHalfWidth * p / panels;
            const double b = -kHalfWidth + 2.0 * kHalfWidth * (p + 1) / panels;
            total += integrate_adaptive(integrand, a, b, 1e-12 / panels);
        }
        zm[j] = total;
    }
    return zm;
}

double binom(int n, int r) {
    double acc = 1.0;
    for (int i = 1; i <= r; ++i)
        acc = acc * (n - r + i) / i;
    return acc;
}

// E[X^k] = sum_j C(k,j) location^(k-j) scale^j E[Z^j].
double assemble_raw_moment(const SkewFamily& family, const std::array<double, 7>& zm, int k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j)
        acc += binom(k, j) * std::pow(family.location, k - j) *
               std::pow(family.scale, j) * zm[j];
    return acc;
}

} // namespace

double SkewFamily::mean() const {
    const double d = delta_of_shape(shape);
    return location + scale * d * std::sqrt(2.0 / M_PI);
}

double SkewFamily::variance() const {
    const double d = delta_of_shape(shape);
    return scale * scale * (1.0 - 2.0 * d * d / M_PI);
}

double SkewFamily::skewness() const {
    const double m = delta_of_shape(shape) * std::sqrt(2.0 / M_PI);
    return 0.5 * (4.0 - M_PI) * m * m * m / std::pow(1.0 - m * m, 1.5);
}

double SkewFamily::pdf(double x) const {
    return sn_pdf((x - location) / scale, shape) / scale;
}

double shape_for_skewness(double skewness) {
    if (!(std::abs(skewness) < kMaxFamilySkewness))
        throw DomainError(
            "shape_for_skewness: |skewness| = " + std::to_string(std::abs(skewness)) +
            " is outside the attainable range (-" + std::to_string(kMaxFamilySkewness) +
            ", " + std::to_string(kMaxFamilySkewness) + ") of the skew-normal family");
    if (skewness == 0.0)
        return 0.0;

    // Invert gamma = (4-pi)/2 * m^3 / (1-m^2)^(3/2), m = delta*sqrt(2/pi):
    // m^2 = u/(1+u) with u = (|gamma| / ((4-pi)/2))^(2/3).
    const double c = 0.5 * (4.0 - M_PI);
    const double u = std::pow(std::abs(skewness) / c, 2.0 / 3.0);
    const double m2 = u / (1.0 + u);
    const double delta = std::copysign(std::sqrt(m2 * M_PI / 2.0), skewness);
    return delta / std::sqrt(1.0 - delta * delta);
}

SkewFamily fit_skew_family(double mean, double std, double skewness) {
    if (!(std > 0.0))
        throw DomainError("fit_skew_family: std must be > 0");

    SkewFamily family;
    family.shape = shape_for_skewness(skewness);
    const double delta = delta_of_shape(family.shape);
    const double m = delta * std::sqrt(2.0 / M_PI);
    family.scale = std / std::sqrt(1.0 - m * m);
    family.location = mean - family.scale * m;
    return family;
}

SkewFamily fit_skew_family(const PriorSummary& prior) {
    prior.validate();
    return fit_skew_family(prior.mean, prior.std, prior.skewness);
}

double conditional_raw_moment(const SkewFamily& family, int k) {
    if (k < 1 || k > 6)
        throw DomainError("conditional_raw_moment: k must be in 1..6");
    return assemble_raw_moment(family, standardized_moments(family.shape), k);
}

double conditional_power_variance(const SkewFamily& family, int k) {
    if (k < 1 || k > 3)
        throw DomainError("conditional_power_variance: k must be in 1..3");
    const std::array<double, 7> raw = conditional_raw_moments_upto6(family);
    // The subtraction loses at most a few digits even when location dominates
    // scale; the assembled moments carry near-full relative precision.
    return std::max(raw[2 * k] - raw[k] * raw[k], 0.0);
}

std::array<double, 7> conditional_raw_moments_upto6(const SkewFamily& family) {
    const std::array<double, 7> zm = standardized_moments(family.shape);
    std::array<double, 7> raw;
    for (int j = 0; j <= 6; ++j)
        raw[j] = assemble_raw_moment(family, zm, j);
    return raw;
}

} // namespace vnauq
