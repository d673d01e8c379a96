#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vnauq/mc_engine.hpp"
#include "vnauq/stats.hpp"

namespace vnauq {

/// Tier-one outcome for one uncertainty source. Sources without sample data
/// pass their prior through unchanged and are flagged fused = false.
struct SourceFusionRecord {
    std::string name;
    GaussianBelief prior;
    GaussianBelief posterior;
    bool fused = false;
    std::size_t sample_count = 0;
};

/// Per-frequency slice of the simulate stage output.
struct SimulatedFrequency {
    double frequency = 0.0;
    DistributionSummary summary;
    std::size_t discards = 0;
    HistogramData histogram;
};

/// Simulate-stage artifact: carries the fused sources forward so the
/// evaluate stage (and the final report) can run from this file alone.
struct SimulationDocument {
    std::uint64_t seed = 0;
    std::size_t draws = 0;
    std::size_t bins = 0;
    OutputUnit output_unit = OutputUnit::kDbMagnitude;
    std::vector<SourceFusionRecord> sources;
    std::vector<SimulatedFrequency> frequencies;
};

/// Final per-frequency evaluation entry.
struct FrequencyResult {
    double frequency = 0.0;
    DistributionSummary mc_prior;
    std::size_t mc_discards = 0;
    std::size_t aut_sample_count = 0;
    double posterior_mean = 0.0;
    double posterior_variance = 0.0;
    double posterior_skewness = 0.0;
    std::array<double, 3> credibility_weights{};
};

/// The complete evaluation report. One self-describing document per run:
/// seed and tool version ride along so a result can be audited later.
struct PipelineReport {
    std::string tool;
    std::string version;
    std::uint64_t seed = 0;
    std::size_t draws = 0;
    OutputUnit output_unit = OutputUnit::kDbMagnitude;
    std::vector<SourceFusionRecord> tier_one;
    std::vector<FrequencyResult> results;
};

/// Serializers. All real-valued fields are written with 17 significant
/// digits, so write -> read -> write reproduces the text byte for byte.
std::string write_fusion_document(const std::vector<SourceFusionRecord>& sources);
std::vector<SourceFusionRecord> read_fusion_document(const std::string& text);

std::string write_simulation_document(const SimulationDocument& doc);
SimulationDocument read_simulation_document(const std::string& text);

std::string write_report(const PipelineReport& report);
PipelineReport read_report(const std::string& text);

} // namespace vnauq
