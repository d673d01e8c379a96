// vnauq: measurement-uncertainty evaluation for one-port VNA S11 sweeps.
// Three-step method, each step also exposed as its own subcommand:
//   fuse      unify prior beliefs with sampled source data
//   simulate  Monte Carlo through the SOL calibration error model
//   evaluate  blend the simulated prior with repeated AUT measurements
//   pipeline  all three steps in one invocation

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vnauq/io_util.hpp"
#include "vnauq/pipeline.hpp"
#include "vnauq/version.hpp"

namespace {

// Stage-tagged exit codes; input loading and report writing count as I/O.
constexpr int kExitFuse = 2;
constexpr int kExitSimulate = 3;
constexpr int kExitEvaluate = 4;
constexpr int kExitIo = 5;

struct Overrides {
    bool has_seed = false;
    std::uint64_t seed = 0;
    std::size_t draws = 0; // 0 = keep scenario value
    std::size_t bins = 30;
    std::string unit;      // empty = keep scenario value
};

int fail(int code, const char* stage, const std::exception& e) {
    std::fprintf(stderr, "vnauq: %s: %s\n", stage, e.what());
    return code;
}

void apply(const Overrides& o, vnauq::Scenario& scenario) {
    if (o.has_seed)
        scenario.seed = o.seed;
    if (o.draws)
        scenario.draws = o.draws;
    if (!o.unit.empty())
        scenario.output_unit = vnauq::output_unit_from_string(o.unit);
}

int run_fuse(const std::string& scenario_path, const std::vector<std::string>& source_paths,
             const std::string& out_path) {
    vnauq::Scenario scenario;
    std::vector<vnauq::SampleTable> tables;
    try {
        scenario = vnauq::load_scenario(scenario_path);
        for (const std::string& path : source_paths)
            tables.push_back(vnauq::parse_sample_csv(vnauq::read_file(path)));
    } catch (const std::exception& e) {
        return fail(kExitIo, "reading inputs", e);
    }

    std::vector<vnauq::SourceFusionRecord> records;
    try {
        records = vnauq::cmd_fuse(scenario, tables);
    } catch (const std::exception& e) {
        return fail(kExitFuse, "fuse", e);
    }

    try {
        vnauq::write_file(out_path, vnauq::write_fusion_document(records));
    } catch (const std::exception& e) {
        return fail(kExitIo, "writing output", e);
    }
    return 0;
}

int run_simulate(const std::string& scenario_path, const std::string& posteriors_path,
                 const std::string& out_path, const Overrides& overrides) {
    vnauq::Scenario scenario;
    std::vector<vnauq::SourceFusionRecord> posteriors;
    try {
        scenario = vnauq::load_scenario(scenario_path);
        posteriors = vnauq::read_fusion_document(vnauq::read_file(posteriors_path));
    } catch (const std::exception& e) {
        return fail(kExitIo, "reading inputs", e);
    }

    vnauq::SimulationDocument doc;
    try {
        apply(overrides, scenario);
        doc = vnauq::cmd_simulate(scenario, posteriors, overrides.bins);
    } catch (const std::exception& e) {
        return fail(kExitSimulate, "simulate", e);
    }

    try {
        vnauq::write_file(out_path, vnauq::write_simulation_document(doc));
    } catch (const std::exception& e) {
        return fail(kExitIo, "writing output", e);
    }
    return 0;
}

int run_evaluate(const std::string& summaries_path, const std::string& aut_path,
                 const std::string& out_path) {
    vnauq::SimulationDocument mc;
    vnauq::SampleTable aut;
    try {
        mc = vnauq::read_simulation_document(vnauq::read_file(summaries_path));
        aut = vnauq::parse_sample_csv(vnauq::read_file(aut_path));
    } catch (const std::exception& e) {
        return fail(kExitIo, "reading inputs", e);
    }

    vnauq::PipelineReport report;
    try {
        report = vnauq::cmd_evaluate(mc, aut);
    } catch (const std::exception& e) {
        return fail(kExitEvaluate, "evaluate", e);
    }

    try {
        vnauq::write_file(out_path, vnauq::write_report(report));
    } catch (const std::exception& e) {
        return fail(kExitIo, "writing output", e);
    }
    return 0;
}

int run_pipeline(const vnauq::PipelineRun& run) {
    vnauq::PipelineInputs inputs;
    try {
        inputs = vnauq::load_pipeline_inputs(run);
    } catch (const std::exception& e) {
        return fail(kExitIo, "reading inputs", e);
    }

    std::vector<vnauq::SourceFusionRecord> fused;
    try {
        fused = vnauq::cmd_fuse(inputs.scenario, inputs.source_tables);
    } catch (const std::exception& e) {
        return fail(kExitFuse, "fuse", e);
    }

    vnauq::SimulationDocument mc;
    try {
        mc = vnauq::cmd_simulate(inputs.scenario, fused, run.bins);
    } catch (const std::exception& e) {
        return fail(kExitSimulate, "simulate", e);
    }

    vnauq::PipelineReport report;
    try {
        report = vnauq::cmd_evaluate(mc, inputs.aut_samples);
    } catch (const std::exception& e) {
        return fail(kExitEvaluate, "evaluate", e);
    }

    try {
        vnauq::write_file(run.out_path, vnauq::write_report(report));
    } catch (const std::exception& e) {
        return fail(kExitIo, "writing output", e);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-port VNA S11 measurement uncertainty evaluation"};
    app.set_version_flag("--version", std::string(vnauq::kToolVersion));
    app.require_subcommand(1);

    std::string scenario_path, posteriors_path, summaries_path, aut_path, out_path;
    std::vector<std::string> source_paths;
    Overrides overrides;

    CLI::App* fuse = app.add_subcommand("fuse", "First-tier Bayesian fusion of source data");
    fuse->add_option("--scenario", scenario_path, "Scenario file")->required();
    fuse->add_option("--sources", source_paths, "Sample CSV files (columns named by source)");
    fuse->add_option("--out", out_path, "Output posteriors file")->required();

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo propagation through the calibration model");
    simulate->add_option("--scenario", scenario_path, "Scenario file")->required();
    simulate->add_option("--posteriors", posteriors_path, "Posteriors from `fuse`")->required();
    simulate->add_option("--out", out_path, "Output summaries file")->required();
    CLI::Option* sim_seed = simulate->add_option("--seed", overrides.seed, "Override scenario seed");
    simulate->add_option("--draws", overrides.draws, "Override scenario draw count");
    simulate->add_option("--bins", overrides.bins, "Histogram bin count");
    simulate->add_option("--unit", overrides.unit, "Output unit: db or linear")
        ->check(CLI::IsMember({"db", "linear"}));

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Second-tier fusion with repeated AUT measurements");
    evaluate->add_option("--summaries", summaries_path, "Summaries from `simulate`")->required();
    evaluate->add_option("--aut", aut_path, "AUT sample CSV (columns labelled by frequency)")
        ->required();
    evaluate->add_option("--out", out_path, "Output report file")->required();

    CLI::App* pipeline = app.add_subcommand("pipeline", "Run all three steps");
    pipeline->add_option("--scenario", scenario_path, "Scenario file")->required();
    pipeline->add_option("--sources", source_paths, "Sample CSV files");
    pipeline->add_option("--aut", aut_path, "AUT sample CSV")->required();
    pipeline->add_option("--out", out_path, "Output report file")->required();
    CLI::Option* pipe_seed = pipeline->add_option("--seed", overrides.seed, "Override scenario seed");
    pipeline->add_option("--draws", overrides.draws, "Override scenario draw count");
    pipeline->add_option("--bins", overrides.bins, "Histogram bin count");
    pipeline->add_option("--unit", overrides.unit, "Output unit: db or linear")
        ->check(CLI::IsMember({"db", "linear"}));

    CLI11_PARSE(app, argc, argv);

    if (fuse->parsed())
        return run_fuse(scenario_path, source_paths, out_path);

    if (simulate->parsed()) {
        overrides.has_seed = sim_seed->count() > 0;
        return run_simulate(scenario_path, posteriors_path, out_path, overrides);
    }

    if (evaluate->parsed())
        return run_evaluate(summaries_path, aut_path, out_path);

    vnauq::PipelineRun run;
    run.scenario_path = scenario_path;
    for (const std::string& p : source_paths)
        run.source_paths.emplace_back(p);
    run.aut_path = aut_path;
    run.out_path = out_path;
    run.has_seed_override = pipe_seed->count() > 0;
    run.seed_override = overrides.seed;
    run.draws_override = overrides.draws;
    run.bins = overrides.bins;
    run.unit_override = overrides.unit;
    return run_pipeline(run);
}
