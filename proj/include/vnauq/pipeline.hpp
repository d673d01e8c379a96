#pragma once

#include <filesystem>
#include <vector>

#include "vnauq/report.hpp"
#include "vnauq/sample_csv.hpp"
#include "vnauq/scenario_io.hpp"

namespace vnauq {

/// First-tier fusion: sources named by a sample-table column get the
/// conjugate-normal posterior; the rest pass their prior through, flagged.
/// Duplicate source columns across tables and columns naming no known source
/// are configuration errors; degenerate samples are reported per source.
std::vector<SourceFusionRecord> cmd_fuse(const Scenario& scenario,
                                         const std::vector<SampleTable>& source_tables);

/// Second step: replaces the scenario beliefs with the fused posteriors
/// (every scenario source must be covered), runs the Monte Carlo and
/// summarizes each frequency. bins controls the emitted histograms.
SimulationDocument cmd_simulate(const Scenario& scenario,
                                const std::vector<SourceFusionRecord>& posteriors,
                                std::size_t bins);

/// Third step: treats each frequency's Monte Carlo summary as the prior,
/// fuses it with repeated AUT measurements (CSV columns labelled by
/// frequency in Hz) through the conjugate update for mean/variance and the
/// credibility blend for skewness.
PipelineReport cmd_evaluate(const SimulationDocument& mc, const SampleTable& aut_samples);

/// File-level description of a full pipeline invocation.
struct PipelineRun {
    std::filesystem::path scenario_path;
    std::vector<std::filesystem::path> source_paths;
    std::filesystem::path aut_path;
    std::filesystem::path out_path;
    bool has_seed_override = false;
    std::uint64_t seed_override = 0;
    std::size_t draws_override = 0; // 0 = use scenario
    std::size_t bins = 30;
    std::string unit_override;      // empty = use scenario
};

/// Inputs loaded and validated up front (fail fast), before any computation.
struct PipelineInputs {
    Scenario scenario;
    std::vector<SampleTable> source_tables;
    SampleTable aut_samples;
};

/// Reads and parses every referenced file; any failure here is an I/O error.
PipelineInputs load_pipeline_inputs(const PipelineRun& run);

/// fuse -> simulate -> evaluate -> write_report in one invocation; returns
/// the report after writing it to run.out_path.
PipelineReport cmd_pipeline(const PipelineRun& run);

} // namespace vnauq
