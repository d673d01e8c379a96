#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vnauq/stats.hpp"
#include "vnauq/vna_model.hpp"

namespace vnauq {

/// Beliefs about every uncertainty source feeding the measurement model.
/// Belief means double as the defined (nominal) calibration-kit parameters;
/// the magnitude sources (load residual, t_cc, r_cc, noise floor) describe
/// the size of per-connection random perturbations.
struct SourceBeliefs {
    GaussianBelief open_c0{0.0, 1e-300};
    GaussianBelief open_c1{0.0, 1e-300};
    GaussianBelief open_c2{0.0, 1e-300};
    GaussianBelief open_c3{0.0, 1e-300};
    GaussianBelief open_offset_length{0.0, 1e-300};
    GaussianBelief short_l0{0.0, 1e-300};
    GaussianBelief short_l1{0.0, 1e-300};
    GaussianBelief short_l2{0.0, 1e-300};
    GaussianBelief short_l3{0.0, 1e-300};
    GaussianBelief short_offset_length{0.0, 1e-300};
    GaussianBelief load_residual_mag{0.0, 1e-300};
    GaussianBelief tcc_mag{1.0, 1e-300};
    GaussianBelief rcc_mag{0.0, 1e-300};
    GaussianBelief noise_floor_mag{0.0, 1e-300};

    /// Stable name -> belief mapping used by configuration, fusion and reports.
    std::vector<std::pair<std::string, GaussianBelief*>> entries();
    std::vector<std::pair<std::string, const GaussianBelief*>> entries() const;

    void validate() const;
};

enum class OutputUnit {
    kDbMagnitude,     // 20*log10|S11|
    kLinearMagnitude, // |S11|
};

std::string to_string(OutputUnit unit);
OutputUnit output_unit_from_string(const std::string& text);

/// Full description of one simulated evaluation: frequency grid, source
/// beliefs, the simulated instrument's hidden truth, the assumed true DUT
/// reflection, and Monte Carlo settings.
struct Scenario {
    std::vector<double> frequencies;          // Hz, strictly increasing
    SourceBeliefs beliefs;
    std::vector<ErrorTerms> true_error_terms; // one per frequency
    std::vector<Complex> dut_gamma;           // one per frequency
    std::size_t draws = 10000;
    std::uint64_t seed = 1;
    OutputUnit output_unit = OutputUnit::kDbMagnitude;
    double ref_impedance = 50.0;
    Complex load_defined_reflection{0.0, 0.0}; // kit definition of the load

    void validate() const;
};

/// Calibrated |S11| samples at one frequency, in the scenario's output unit.
struct EmpiricalDistribution {
    double frequency = 0.0;
    std::vector<double> samples;
    std::size_t discard_count = 0;
};

/// Four-number summary of an empirical or prior distribution.
struct DistributionSummary {
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double skew_std_error = 0.0;
    std::size_t count = 0;
};

/// Equal-width histogram with the fitted normal reference curve parameters.
struct HistogramData {
    std::vector<double> bin_edges;
    std::vector<std::size_t> counts;
    double overlay_mean = 0.0;
    double overlay_std = 0.0;
};

/// One full simulated calibration-plus-measurement cycle at frequency index
/// freq_idx, draw index draw_idx:
///   (a) draw the standards' physical parameters from the beliefs and model
///       their true reflections,
///   (b) measure all three standards through the true error terms, each with
///       a fresh random error draw,
///   (c) solve the error terms using the defined (belief-mean) standard
///       models as the assumed reflections,
///   (d) measure the DUT with a fresh random error draw and calibrate with
///       the solved terms.
/// Returns |S11| in the scenario's output unit. Throws SingularError for
/// draws that hit a singular denominator; the caller discards those.
double draw_cycle(const Scenario& scenario, std::size_t freq_idx, std::size_t draw_idx);

/// Runs the full Monte Carlo: scenario.draws cycles per frequency, in
/// parallel across (frequency, draw) pairs. Per-draw substreams are keyed on
/// (seed, frequency index, draw index, role), so the output is bit-identical
/// for a given (scenario, seed) regardless of worker count. Throws Error when
/// 1% or more of the draws at any frequency were discarded.
std::vector<EmpiricalDistribution> run_monte_carlo(const Scenario& scenario);

/// Mean, variance (divisor n-1), skewness and its normal-theory standard
/// error. Requires count >= 9.
DistributionSummary summarize(const EmpiricalDistribution& dist);

/// Equal-width bins spanning [min, max] (a degenerate span is widened to
/// unit width); a value on an interior edge counts toward the higher bin and
/// the maximum falls in the last bin. Requires bins >= 5 and count >= bins.
HistogramData histogram(const EmpiricalDistribution& dist, std::size_t bins);

/// Worker count for the engine: VNAUQ_THREADS when set (>= 1), otherwise the
/// hardware concurrency. Never affects results, only scheduling.
unsigned worker_count();

} // namespace vnauq
