#include "vnauq/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "vnauq/errors.hpp"
#include "vnauq/version.hpp"

namespace vnauq {

namespace {

// 17 significant digits: enough to reproduce any double exactly, and a fixed
// width so repeated serialization is byte-stable.
std::string real_to_text(double v) {
    if (!std::isfinite(v))
        throw Error("report: non-finite value cannot be serialized");
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\', out += c;
        else if (static_cast<unsigned char>(c) < 0x20)
            throw Error("report: control character in string");
        else
            out += c;
    }
    out += '"';
    return out;
}

// Minimal ordered JSON emitter; nesting state tracks where commas go.
class JsonWriter {
public:
    std::string str() const { return out_.str(); }

    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array() { open('['); }
    void end_array() { close(']'); }

    void key(const std::string& name) {
        separate();
        out_ << escape_string(name) << ": ";
        pending_value_ = true;
    }

    void value(const std::string& s) { literal(escape_string(s)); }
    void value(const char* s) { literal(escape_string(s)); }
    void value(double v) { literal(real_to_text(v)); }
    void value(bool b) { literal(b ? "true" : "false"); }
    void value_uint(std::uint64_t v) { literal(std::to_string(v)); }

private:
    void open(char c) {
        separate();
        out_ << c;
        first_.push_back(true);
    }

    void close(char c) {
        first_.pop_back();
        out_ << '\n' << std::string(first_.size() * 2, ' ') << c;
        if (first_.empty())
            out_ << '\n';
    }

    void separate() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (first_.empty())
            return;
        if (!first_.back())
            out_ << ',';
        first_.back() = false;
        out_ << '\n' << std::string(first_.size() * 2, ' ');
    }

    void literal(const std::string& text) {
        separate();
        out_ << text;
    }

    std::ostringstream out_;
    std::vector<bool> first_;
    bool pending_value_ = false;
};

void write_belief(JsonWriter& w, const char* name, const GaussianBelief& b) {
    w.key(name);
    w.begin_object();
    w.key("mean");
    w.value(b.mean);
    w.key("std");
    w.value(b.std);
    w.end_object();
}

void write_source_record(JsonWriter& w, const SourceFusionRecord& s) {
    w.begin_object();
    w.key("name");
    w.value(s.name);
    write_belief(w, "prior", s.prior);
    write_belief(w, "posterior", s.posterior);
    w.key("fused");
    w.value(s.fused);
    w.key("sample_count");
    w.value_uint(s.sample_count);
    w.end_object();
}

void write_summary(JsonWriter& w, const char* name, const DistributionSummary& s) {
    w.key(name);
    w.begin_object();
    w.key("mean");
    w.value(s.mean);
    w.key("variance");
    w.value(s.variance);
    w.key("skewness");
    w.value(s.skewness);
    w.key("skew_std_error");
    w.value(s.skew_std_error);
    w.key("count");
    w.value_uint(s.count);
    w.end_object();
}

void write_header(JsonWriter& w) {
    w.key("tool");
    w.value(kToolName);
    w.key("version");
    w.value(kToolVersion);
}

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string(what) + ": " + e.what());
    }
}

GaussianBelief belief_from(const json& j) {
    return GaussianBelief{j.at("mean").get<double>(), j.at("std").get<double>()};
}

SourceFusionRecord source_record_from(const json& j) {
    SourceFusionRecord s;
    s.name = j.at("name").get<std::string>();
    s.prior = belief_from(j.at("prior"));
    s.posterior = belief_from(j.at("posterior"));
    s.fused = j.at("fused").get<bool>();
    s.sample_count = j.at("sample_count").get<std::size_t>();
    return s;
}

DistributionSummary summary_from(const json& j) {
    DistributionSummary s;
    s.mean = j.at("mean").get<double>();
    s.variance = j.at("variance").get<double>();
    s.skewness = j.at("skewness").get<double>();
    s.skew_std_error = j.at("skew_std_error").get<double>();
    s.count = j.at("count").get<std::size_t>();
    return s;
}

} // namespace

std::string write_fusion_document(const std::vector<SourceFusionRecord>& sources) {
    JsonWriter w;
    w.begin_object();
    write_header(w);
    w.key("sources");
    w.begin_array();
    for (const SourceFusionRecord& s : sources)
        write_source_record(w, s);
    w.end_array();
    w.end_object();
    return w.str();
}

std::vector<SourceFusionRecord> read_fusion_document(const std::string& text) {
    const json j = parse_json(text, "fusion document");
    try {
        std::vector<SourceFusionRecord> sources;
        for (const json& s : j.at("sources"))
            sources.push_back(source_record_from(s));
        return sources;
    } catch (const json::exception& e) {
        throw Error(std::string("fusion document: ") + e.what());
    }
}

std::string write_simulation_document(const SimulationDocument& doc) {
    JsonWriter w;
    w.begin_object();
    write_header(w);
    w.key("seed");
    w.value_uint(doc.seed);
    w.key("draws");
    w.value_uint(doc.draws);
    w.key("bins");
    w.value_uint(doc.bins);
    w.key("output_unit");
    w.value(to_string(doc.output_unit));
    w.key("sources");
    w.begin_array();
    for (const SourceFusionRecord& s : doc.sources)
        write_source_record(w, s);
    w.end_array();
    w.key("frequencies");
    w.begin_array();
    for (const SimulatedFrequency& f : doc.frequencies) {
        w.begin_object();
        w.key("frequency_hz");
        w.value(f.frequency);
        write_summary(w, "summary", f.summary);
        w.key("discards");
        w.value_uint(f.discards);
        w.key("histogram");
        w.begin_object();
        w.key("bin_edges");
        w.begin_array();
        for (double e : f.histogram.bin_edges)
            w.value(e);
        w.end_array();
        w.key("counts");
        w.begin_array();
        for (std::size_t c : f.histogram.counts)
            w.value_uint(c);
        w.end_array();
        w.key("overlay_normal");
        w.begin_object();
        w.key("mean");
        w.value(f.histogram.overlay_mean);
        w.key("std");
        w.value(f.histogram.overlay_std);
        w.end_object();
        w.end_object();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

SimulationDocument read_simulation_document(const std::string& text) {
    const json j = parse_json(text, "simulation document");
    try {
        SimulationDocument doc;
        doc.seed = j.at("seed").get<std::uint64_t>();
        doc.draws = j.at("draws").get<std::size_t>();
        doc.bins = j.at("bins").get<std::size_t>();
        doc.output_unit = output_unit_from_string(j.at("output_unit").get<std::string>());
        for (const json& s : j.at("sources"))
            doc.sources.push_back(source_record_from(s));
        for (const json& fj : j.at("frequencies")) {
            SimulatedFrequency f;
            f.frequency = fj.at("frequency_hz").get<double>();
            f.summary = summary_from(fj.at("summary"));
            f.discards = fj.at("discards").get<std::size_t>();
            const json& hj = fj.at("histogram");
            f.histogram.bin_edges = hj.at("bin_edges").get<std::vector<double>>();
            f.histogram.counts = hj.at("counts").get<std::vector<std::size_t>>();
            f.histogram.overlay_mean = hj.at("overlay_normal").at("mean").get<double>();
            f.histogram.overlay_std = hj.at("overlay_normal").at("std").get<double>();
            doc.frequencies.push_back(std::move(f));
        }
        return doc;
    } catch (const json::exception& e) {
        throw Error(std::string("simulation document: ") + e.what());
    }
}

std::string write_report(const PipelineReport& report) {
    JsonWriter w;
    w.begin_object();
    w.key("tool");
    w.value(report.tool);
    w.key("version");
    w.value(report.version);
    w.key("seed");
    w.value_uint(report.seed);
    w.key("draws");
    w.value_uint(report.draws);
    w.key("output_unit");
    w.value(to_string(report.output_unit));
    w.key("tier_one");
    w.begin_array();
    for (const SourceFusionRecord& s : report.tier_one)
        write_source_record(w, s);
    w.end_array();
    w.key("results");
    w.begin_array();
    for (const FrequencyResult& r : report.results) {
        w.begin_object();
        w.key("frequency_hz");
        w.value(r.frequency);
        write_summary(w, "mc_prior", r.mc_prior);
        w.key("mc_discards");
        w.value_uint(r.mc_discards);
        w.key("aut_sample_count");
        w.value_uint(r.aut_sample_count);
        w.key("posterior");
        w.begin_object();
        w.key("mean");
        w.value(r.posterior_mean);
        w.key("variance");
        w.value(r.posterior_variance);
        w.key("skewness");
        w.value(r.posterior_skewness);
        w.end_object();
        w.key("credibility_weights");
        w.begin_array();
        for (double b : r.credibility_weights)
            w.value(b);
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

PipelineReport read_report(const std::string& text) {
    const json j = parse_json(text, "report");
    try {
        PipelineReport report;
        report.tool = j.at("tool").get<std::string>();
        report.version = j.at("version").get<std::string>();
        report.seed = j.at("seed").get<std::uint64_t>();
        report.draws = j.at("draws").get<std::size_t>();
        report.output_unit = output_unit_from_string(j.at("output_unit").get<std::string>());
        for (const json& s : j.at("tier_one"))
            report.tier_one.push_back(source_record_from(s));
        for (const json& rj : j.at("results")) {
            FrequencyResult r;
            r.frequency = rj.at("frequency_hz").get<double>();
            r.mc_prior = summary_from(rj.at("mc_prior"));
            r.mc_discards = rj.at("mc_discards").get<std::size_t>();
            r.aut_sample_count = rj.at("aut_sample_count").get<std::size_t>();
            r.posterior_mean = rj.at("posterior").at("mean").get<double>();
            r.posterior_variance = rj.at("posterior").at("variance").get<double>();
            r.posterior_skewness = rj.at("posterior").at("skewness").get<double>();
            const auto weights = rj.at("credibility_weights").get<std::vector<double>>();
            if (weights.size() != 3)
                throw Error("report: credibility_weights must have 3 entries");
            std::copy(weights.begin(), weights.end(), r.credibility_weights.begin());
            report.results.push_back(r);
        }
        return report;
    } catch (const json::exception& e) {
        throw Error(std::string("report: ") + e.what());
    }
}

} // namespace vnauq
