#include "vnauq/scenario_io.hpp"

#include <cmath>

#include "json.hpp"

#include "vnauq/io_util.hpp"
#include "vnauq/touchstone.hpp"

namespace vnauq {

namespace {

using nlohmann::json;

Complex complex_from(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("scenario: " + what + " must be a [re, im] pair");
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

ErrorTerms terms_from(const json& j) {
    ErrorTerms terms;
    terms.e_d = complex_from(j.at("e_d"), "e_d");
    terms.e_s = complex_from(j.at("e_s"), "e_s");
    terms.e_r = complex_from(j.at("e_r"), "e_r");
    return terms;
}

// Deterministic synthesis of plausible per-frequency error terms from
// magnitudes and a common delay: each term rotates with frequency.
ErrorTerms synthesize_terms(const json& rule, double f) {
    const double e_d_mag = rule.at("e_d_mag").get<double>();
    const double e_s_mag = rule.at("e_s_mag").get<double>();
    const double e_r_mag = rule.at("e_r_mag").get<double>();
    const double tau = rule.value("delay_ps", 0.0) * 1e-12;
    const double phi = 2.0 * M_PI * f * tau;
    ErrorTerms terms;
    terms.e_d = std::polar(e_d_mag, -phi);
    terms.e_s = std::polar(e_s_mag, -(phi + M_PI / 3.0));
    terms.e_r = std::polar(e_r_mag, -2.0 * phi);
    return terms;
}

void parse_error_terms(const json& j, Scenario& sc) {
    const json& section = j.at("true_error_terms");
    const std::size_t n = sc.frequencies.size();
    if (section.contains("constant")) {
        sc.true_error_terms.assign(n, terms_from(section.at("constant")));
    } else if (section.contains("per_frequency")) {
        const json& list = section.at("per_frequency");
        if (list.size() != n)
            throw ConfigError("scenario: per_frequency error terms must match the grid (" +
                              std::to_string(list.size()) + " vs " + std::to_string(n) + ")");
        for (const json& t : list)
            sc.true_error_terms.push_back(terms_from(t));
    } else if (section.contains("synthesize")) {
        for (double f : sc.frequencies)
            sc.true_error_terms.push_back(synthesize_terms(section.at("synthesize"), f));
    } else {
        throw ConfigError("scenario: true_error_terms needs 'constant', "
                          "'per_frequency' or 'synthesize'");
    }
}

void parse_dut(const json& j, Scenario& sc, const std::filesystem::path& base_dir) {
    const json& section = j.at("dut");
    const std::size_t n = sc.frequencies.size();
    if (section.contains("constant")) {
        sc.dut_gamma.assign(n, complex_from(section.at("constant"), "dut constant"));
    } else if (section.contains("constant_db")) {
        const double db = section.at("constant_db").get<double>();
        sc.dut_gamma.assign(n, Complex{std::pow(10.0, db / 20.0), 0.0});
    } else if (section.contains("per_frequency")) {
        const json& list = section.at("per_frequency");
        if (list.size() != n)
            throw ConfigError("scenario: per_frequency dut values must match the grid");
        for (const json& v : list)
            sc.dut_gamma.push_back(complex_from(v, "dut value"));
    } else if (section.contains("s1p")) {
        const std::filesystem::path path =
            base_dir / section.at("s1p").get<std::string>();
        const Sweep sweep = parse_touchstone_s1p(read_file(path));
        for (double f : sc.frequencies) {
            bool found = false;
            for (std::size_t i = 0; i < sweep.frequencies.size(); ++i) {
                if (std::abs(sweep.frequencies[i] - f) <= 1e-9 * f) {
                    sc.dut_gamma.push_back(sweep.s11[i]);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw ConfigError("scenario: sweep " + path.string() +
                                  " has no point at " + std::to_string(f) + " Hz");
        }
    } else {
        throw ConfigError("scenario: dut needs 'constant', 'constant_db', "
                          "'per_frequency' or 's1p'");
    }
}

void parse_csv_mode(const json& j) {
    if (!j.contains("csv_mode"))
        return;
    const json& mode = j.at("csv_mode");
    if (mode.value("sources", "per-source") != "per-source")
        throw ConfigError("scenario: csv_mode.sources only supports 'per-source'");
    if (mode.value("aut", "per-frequency") != "per-frequency")
        throw ConfigError("scenario: csv_mode.aut only supports 'per-frequency'");
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }

    try {
        Scenario sc;
        sc.frequencies = j.at("frequencies_hz").get<std::vector<double>>();
        sc.draws = j.value("draws", std::size_t{10000});
        sc.seed = j.value("seed", std::uint64_t{1});
        sc.output_unit = output_unit_from_string(j.value("output_unit", "db"));
        sc.ref_impedance = j.value("ref_impedance_ohm", 50.0);
        if (j.contains("load_defined_reflection"))
            sc.load_defined_reflection =
                complex_from(j.at("load_defined_reflection"), "load_defined_reflection");

        const json& beliefs = j.at("beliefs");
        for (auto& [name, belief] : sc.beliefs.entries()) {
            if (!beliefs.contains(name))
                throw ConfigError("scenario: missing belief for source '" + name + "'");
            const json& b = beliefs.at(name);
            belief->mean = b.at("mean").get<double>();
            belief->std = b.at("std").get<double>();
        }
        for (const auto& [name, value] : beliefs.items()) {
            bool known = false;
            for (const auto& [known_name, belief] : sc.beliefs.entries())
                known = known || known_name == name;
            if (!known)
                throw ConfigError("scenario: unknown source '" + name + "' in beliefs");
        }

        parse_error_terms(j, sc);
        parse_dut(j, sc, base_dir);
        parse_csv_mode(j);
        sc.validate();
        return sc;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::filesystem::path& file) {
    return parse_scenario(read_file(file), file.parent_path());
}

} // namespace vnauq
