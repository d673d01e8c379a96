#include "vnauq/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "vnauq/credibility.hpp"
#include "vnauq/io_util.hpp"
#include "vnauq/version.hpp"

namespace vnauq {

std::vector<SourceFusionRecord> cmd_fuse(const Scenario& scenario,
                                         const std::vector<SampleTable>& source_tables) {
    const auto beliefs = scenario.beliefs.entries();

    // Reject columns that name no scenario source, and the same source
    // appearing in more than one table.
    std::vector<std::string> seen;
    for (const SampleTable& table : source_tables) {
        for (const std::string& name : table.names) {
            const bool known = std::any_of(beliefs.begin(), beliefs.end(),
                                           [&](const auto& e) { return e.first == name; });
            if (!known)
                throw ConfigError("fuse: column '" + name + "' names no scenario source");
            if (std::find(seen.begin(), seen.end(), name) != seen.end())
                throw ConfigError("fuse: duplicate source '" + name + "' across sample files");
            seen.push_back(name);
        }
    }

    std::vector<SourceFusionRecord> records;
    records.reserve(beliefs.size());
    for (const auto& [name, belief] : beliefs) {
        SourceFusionRecord record;
        record.name = name;
        record.prior = *belief;
        record.posterior = *belief; // pass-through unless samples exist
        for (const SampleTable& table : source_tables) {
            const int col = table.find(name);
            if (col < 0)
                continue;
            const SampleSet& samples = table.columns[static_cast<std::size_t>(col)];
            try {
                const PosteriorNormal post = posterior_normal(*belief, samples);
                record.posterior = GaussianBelief{post.mean, std::sqrt(post.variance)};
            } catch (const DomainError& e) {
                throw DomainError("fuse: source '" + name + "': " + e.what());
            }
            record.fused = true;
            record.sample_count = samples.size();
            break;
        }
        records.push_back(std::move(record));
    }
    return records;
}

SimulationDocument cmd_simulate(const Scenario& scenario,
                                const std::vector<SourceFusionRecord>& posteriors,
                                std::size_t bins) {
    Scenario fused = scenario;
    for (auto& [name, belief] : fused.beliefs.entries()) {
        const auto it = std::find_if(posteriors.begin(), posteriors.end(),
                                     [&](const SourceFusionRecord& r) { return r.name == name; });
        if (it == posteriors.end())
            throw ConfigError("simulate: no posterior covers scenario source '" + name + "'");
        *belief = it->posterior;
    }

    SimulationDocument doc;
    doc.seed = fused.seed;
    doc.draws = fused.draws;
    doc.bins = bins;
    doc.output_unit = fused.output_unit;
    doc.sources = posteriors;

    const std::vector<EmpiricalDistribution> dists = run_monte_carlo(fused);
    doc.frequencies.reserve(dists.size());
    for (const EmpiricalDistribution& dist : dists) {
        SimulatedFrequency f;
        f.frequency = dist.frequency;
        f.summary = summarize(dist);
        f.discards = dist.discard_count;
        f.histogram = histogram(dist, bins);
        doc.frequencies.push_back(std::move(f));
    }
    return doc;
}

PipelineReport cmd_evaluate(const SimulationDocument& mc, const SampleTable& aut_samples) {
    // Match AUT columns (frequency labels in Hz) against the summary grid.
    std::vector<double> labels;
    labels.reserve(aut_samples.names.size());
    for (const std::string& name : aut_samples.names) {
        try {
            std::size_t consumed = 0;
            const double f = std::stod(name, &consumed);
            if (consumed != name.size())
                throw std::invalid_argument(name);
            labels.push_back(f);
        } catch (const std::exception&) {
            throw ConfigError("evaluate: AUT column '" + name +
                              "' is not a frequency label in Hz");
        }
    }
    if (labels.size() != mc.frequencies.size())
        throw ConfigError("evaluate: frequency-grid mismatch: " +
                          std::to_string(mc.frequencies.size()) + " summaries vs " +
                          std::to_string(labels.size()) + " AUT columns");

    PipelineReport report;
    report.tool = kToolName;
    report.version = kToolVersion;
    report.seed = mc.seed;
    report.draws = mc.draws;
    report.output_unit = mc.output_unit;
    report.tier_one = mc.sources;

    for (const SimulatedFrequency& sim : mc.frequencies) {
        std::size_t col = labels.size();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (std::abs(labels[i] - sim.frequency) <= 1e-9 * sim.frequency) {
                col = i;
                break;
            }
        }
        if (col == labels.size())
            throw ConfigError("evaluate: frequency-grid mismatch: no AUT column at " +
                              std::to_string(sim.frequency) + " Hz");
        const SampleSet& samples = aut_samples.columns[col];
        if (samples.size() < 3)
            throw DomainError("evaluate: need at least 3 AUT samples per frequency");

        PriorSummary prior;
        prior.mean = sim.summary.mean;
        prior.std = std::sqrt(sim.summary.variance);
        prior.skewness = sim.summary.skewness;
        prior.skew_std_error = sim.summary.skew_std_error;

        const PosteriorNormal post =
            posterior_normal(GaussianBelief{prior.mean, prior.std}, samples);
        const CredibilityWorkspace ws = credibility_moments(prior, samples);

        FrequencyResult r;
        r.frequency = sim.frequency;
        r.mc_prior = sim.summary;
        r.mc_discards = sim.discards;
        r.aut_sample_count = samples.size();
        r.posterior_mean = post.mean;
        r.posterior_variance = post.variance;
        r.posterior_skewness = posterior_skewness(ws);
        r.credibility_weights = ws.weight;
        report.results.push_back(r);
    }
    return report;
}

PipelineInputs load_pipeline_inputs(const PipelineRun& run) {
    PipelineInputs inputs;
    inputs.scenario = load_scenario(run.scenario_path);
    for (const std::filesystem::path& path : run.source_paths) {
        try {
            inputs.source_tables.push_back(parse_sample_csv(read_file(path)));
        } catch (const ParseError& e) {
            throw Error("sources file " + path.string() + ": " + e.what());
        }
    }
    try {
        inputs.aut_samples = parse_sample_csv(read_file(run.aut_path));
    } catch (const ParseError& e) {
        throw Error("AUT file " + run.aut_path.string() + ": " + e.what());
    }

    if (run.has_seed_override)
        inputs.scenario.seed = run.seed_override;
    if (run.draws_override)
        inputs.scenario.draws = run.draws_override;
    if (!run.unit_override.empty())
        inputs.scenario.output_unit = output_unit_from_string(run.unit_override);
    return inputs;
}

PipelineReport cmd_pipeline(const PipelineRun& run) {
    const PipelineInputs inputs = load_pipeline_inputs(run);
    const std::vector<SourceFusionRecord> fused =
        cmd_fuse(inputs.scenario, inputs.source_tables);
    const SimulationDocument mc = cmd_simulate(inputs.scenario, fused, run.bins);
    const PipelineReport report = cmd_evaluate(mc, inputs.aut_samples);
    write_file(run.out_path, write_report(report));
    return report;
}

} // namespace vnauq
