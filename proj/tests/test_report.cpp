#include "doctest.h"

#include <regex>

#include "vnauq/report.hpp"
#include "vnauq/version.hpp"

using namespace vnauq;

namespace {

PipelineReport sample_report(bool with_results) {
    PipelineReport report;
    report.tool = kToolName;
    report.version = kToolVersion;
    report.seed = 0xDEADBEEFCAFEF00Dull;
    report.draws = 10000;
    report.output_unit = OutputUnit::kDbMagnitude;
    report.tier_one.push_back(
        {"open.c0", {5e-14, 2e-15}, {4.9e-14, 1.1e-15}, true, 50});
    report.tier_one.push_back({"tcc_mag", {1.0, 2e-3}, {1.0, 2e-3}, false, 0});
    if (with_results) {
        FrequencyResult r;
        r.frequency = 1e9;
        r.mc_prior = {-30.01, 0.8123456789012345, -0.31, 0.0773438156, 10000};
        r.mc_discards = 3;
        r.aut_sample_count = 50;
        r.posterior_mean = -30.02;
        r.posterior_variance = 0.0123;
        r.posterior_skewness = -0.25;
        r.credibility_weights = {0.25, 0.5, 0.75};
        report.results.push_back(r);
    }
    return report;
}

} // namespace

TEST_CASE("report: write -> read -> write is byte-identical") {
    const PipelineReport report = sample_report(true);
    const std::string once = write_report(report);
    const PipelineReport back = read_report(once);
    const std::string twice = write_report(back);
    CHECK(once == twice);

    CHECK(back.seed == report.seed);
    CHECK(back.draws == report.draws);
    CHECK(back.tier_one.size() == 2);
    CHECK(back.tier_one[0].posterior.std == report.tier_one[0].posterior.std);
    CHECK(back.results[0].mc_prior.variance == report.results[0].mc_prior.variance);
    CHECK(back.results[0].credibility_weights[2] == 0.75);
}

TEST_CASE("report: empty frequency list is a valid report") {
    const PipelineReport report = sample_report(false);
    const std::string text = write_report(report);
    const PipelineReport back = read_report(text);
    CHECK(back.results.empty());
    CHECK(write_report(back) == text);
}

TEST_CASE("report: every real number carries 17 significant digits") {
    const std::string text = write_report(sample_report(true));
    // Real fields are emitted in scientific notation d.dddddddddddddddde+xx.
    const std::regex real_re(R"(-?\d\.\d{16}e[+-]\d{2,3})");
    std::size_t reals = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), real_re);
         it != std::sregex_iterator(); ++it)
        ++reals;
    // prior/posterior pairs (2 sources x 4), frequency, 4 summary reals,
    // 3 posterior reals, 3 weights.
    CHECK(reals >= 19);
    // No bare short decimals outside integers: spot-check one field.
    CHECK(text.find("\"variance\": 1.2300000000000000e-02") != std::string::npos);
}

TEST_CASE("fusion document round trip") {
    const std::vector<SourceFusionRecord> sources = sample_report(false).tier_one;
    const std::string once = write_fusion_document(sources);
    const auto back = read_fusion_document(once);
    CHECK(write_fusion_document(back) == once);
    REQUIRE(back.size() == 2);
    CHECK(back[0].fused);
    CHECK_FALSE(back[1].fused);
    CHECK(back[0].sample_count == 50);
}

TEST_CASE("simulation document round trip") {
    SimulationDocument doc;
    doc.seed = 99;
    doc.draws = 1000;
    doc.bins = 30;
    doc.output_unit = OutputUnit::kLinearMagnitude;
    doc.sources = sample_report(false).tier_one;
    SimulatedFrequency f;
    f.frequency = 2e9;
    f.summary = {0.03, 1e-6, 0.2, 0.0773, 1000};
    f.discards = 1;
    f.histogram.bin_edges = {0.0, 0.5, 1.0};
    f.histogram.counts = {400, 600};
    f.histogram.overlay_mean = 0.03;
    f.histogram.overlay_std = 0.001;
    doc.frequencies.push_back(f);

    const std::string once = write_simulation_document(doc);
    const SimulationDocument back = read_simulation_document(once);
    CHECK(write_simulation_document(back) == once);
    CHECK(back.output_unit == OutputUnit::kLinearMagnitude);
    CHECK(back.frequencies[0].histogram.counts == std::vector<std::size_t>{400, 600});
}

TEST_CASE("report: malformed input rejected") {
    CHECK_THROWS_AS(read_report("{"), Error);
    CHECK_THROWS_AS(read_report(R"({"tool": "x"})"), Error);
    CHECK_THROWS_AS(read_fusion_document("[]"), Error);
}
