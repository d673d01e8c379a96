#include "vnauq/mc_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <thread>

#include "vnauq/rng.hpp"

namespace vnauq {

namespace {

// Substream roles within one (frequency, draw) cell.
enum Role : std::uint32_t {
    kRoleStandards = 0,
    kRoleConnectOpen = 1,
    kRoleConnectShort = 2,
    kRoleConnectLoad = 3,
    kRoleConnectDut = 4,
};

SubstreamRng make_stream(const Scenario& sc, std::size_t freq_idx, std::size_t draw_idx,
                         Role role) {
    return SubstreamRng(sc.seed, static_cast<std::uint32_t>(draw_idx),
                        static_cast<std::uint32_t>(freq_idx), role);
}

// Magnitude whose belief describes a nonnegative quantity: negative draws
// are folded by absolute value.
double draw_folded(SubstreamRng& rng, const GaussianBelief& belief) {
    return std::abs(rng.next_normal(belief.mean, belief.std));
}

// Transmission perturbation: the drawn magnitude deviation from nominal 1
// gets a uniform phase, so t_cc = 1 + (m - 1)*e^{j*phi}. Draws that would
// break |t_cc - 1| < 1 are redrawn (bounded).
Complex draw_tcc(SubstreamRng& rng, const GaussianBelief& belief) {
    double m = rng.next_normal(belief.mean, belief.std);
    for (int tries = 0; (m <= 0.0 || m >= 2.0) && tries < 100; ++tries)
        m = rng.next_normal(belief.mean, belief.std);
    if (m <= 0.0 || m >= 2.0)
        throw DomainError("draw_cycle: t_cc magnitude belief keeps leaving (0, 2)");
    return 1.0 + (m - 1.0) * std::polar(1.0, rng.next_phase());
}

// Fresh random error realization for one connection event. Draw order:
// t magnitude, t phase, r magnitude, r phase, noise magnitude, noise phase.
RandomErrorDraw draw_connection(SubstreamRng& rng, const SourceBeliefs& beliefs) {
    RandomErrorDraw draw;
    draw.t_cc = draw_tcc(rng, beliefs.tcc_mag);
    const double r_mag = draw_folded(rng, beliefs.rcc_mag);
    draw.r_cc = std::polar(r_mag, rng.next_phase());
    const double noise_mag = draw_folded(rng, beliefs.noise_floor_mag);
    draw.noise = std::polar(noise_mag, rng.next_phase());
    return draw;
}

double to_output_unit(double magnitude, OutputUnit unit) {
    if (unit == OutputUnit::kLinearMagnitude)
        return magnitude;
    if (!(magnitude > 0.0))
        throw SingularError("draw_cycle: zero magnitude cannot be expressed in dB");
    return 20.0 * std::log10(magnitude);
}

} // namespace

std::vector<std::pair<std::string, GaussianBelief*>> SourceBeliefs::entries() {
    return {
        {"open.c0", &open_c0},
        {"open.c1", &open_c1},
        {"open.c2", &open_c2},
        {"open.c3", &open_c3},
        {"open.offset_length", &open_offset_length},
        {"short.l0", &short_l0},
        {"short.l1", &short_l1},
        {"short.l2", &short_l2},
        {"short.l3", &short_l3},
        {"short.offset_length", &short_offset_length},
        {"load.residual_mag", &load_residual_mag},
        {"tcc_mag", &tcc_mag},
        {"rcc_mag", &rcc_mag},
        {"noise_floor_mag", &noise_floor_mag},
    };
}

std::vector<std::pair<std::string, const GaussianBelief*>> SourceBeliefs::entries() const {
    auto mutable_entries = const_cast<SourceBeliefs*>(this)->entries();
    std::vector<std::pair<std::string, const GaussianBelief*>> out;
    out.reserve(mutable_entries.size());
    for (auto& [name, belief] : mutable_entries)
        out.emplace_back(name, belief);
    return out;
}

void SourceBeliefs::validate() const {
    for (const auto& [name, belief] : entries()) {
        if (!(belief->std > 0.0))
            throw ConfigError("belief '" + name + "': std must be > 0");
    }
}

std::string to_string(OutputUnit unit) {
    return unit == OutputUnit::kDbMagnitude ? "db" : "linear";
}

OutputUnit output_unit_from_string(const std::string& text) {
    if (text == "db")
        return OutputUnit::kDbMagnitude;
    if (text == "linear")
        return OutputUnit::kLinearMagnitude;
    throw ConfigError("unknown output unit '" + text + "' (expected 'db' or 'linear')");
}

void Scenario::validate() const {
    if (frequencies.empty())
        throw ConfigError("scenario: frequency grid is empty");
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        if (!(frequencies[i] > 0.0))
            throw ConfigError("scenario: frequencies must be > 0");
        if (i > 0 && !(frequencies[i] > frequencies[i - 1]))
            throw ConfigError("scenario: frequencies must be strictly increasing");
    }
    if (draws < 100)
        throw ConfigError("scenario: draws must be >= 100");
    if (true_error_terms.size() != frequencies.size())
        throw ConfigError("scenario: need one error-term triple per frequency");
    if (dut_gamma.size() != frequencies.size())
        throw ConfigError("scenario: need one DUT reflection per frequency");
    if (!(ref_impedance > 0.0))
        throw ConfigError("scenario: ref_impedance must be > 0");
    beliefs.validate();
    for (const ErrorTerms& terms : true_error_terms)
        terms.validate();
    LoadStandardModel{load_defined_reflection}.validate();
}

double draw_cycle(const Scenario& sc, std::size_t freq_idx, std::size_t draw_idx) {
    const double f = sc.frequencies[freq_idx];
    const SourceBeliefs& b = sc.beliefs;
    const ErrorTerms& truth = sc.true_error_terms[freq_idx];

    // (a) True standards for this cycle. Draw order: open c0..c3, offset;
    // short l0..l3, offset; load deviation magnitude, phase.
    SubstreamRng std_rng = make_stream(sc, freq_idx, draw_idx, kRoleStandards);
    OpenStandardModel open_true;
    open_true.c0 = std_rng.next_normal(b.open_c0.mean, b.open_c0.std);
    open_true.c1 = std_rng.next_normal(b.open_c1.mean, b.open_c1.std);
    open_true.c2 = std_rng.next_normal(b.open_c2.mean, b.open_c2.std);
    open_true.c3 = std_rng.next_normal(b.open_c3.mean, b.open_c3.std);
    open_true.offset_length = std_rng.next_normal(b.open_offset_length.mean, b.open_offset_length.std);
    open_true.ref_impedance = sc.ref_impedance;

    ShortStandardModel short_true;
    short_true.l0 = std_rng.next_normal(b.short_l0.mean, b.short_l0.std);
    short_true.l1 = std_rng.next_normal(b.short_l1.mean, b.short_l1.std);
    short_true.l2 = std_rng.next_normal(b.short_l2.mean, b.short_l2.std);
    short_true.l3 = std_rng.next_normal(b.short_l3.mean, b.short_l3.std);
    short_true.offset_length = std_rng.next_normal(b.short_offset_length.mean, b.short_offset_length.std);
    short_true.ref_impedance = sc.ref_impedance;

    // The load's true reflection deviates from its defined value by a drawn
    // magnitude at a uniform phase.
    const double load_dev = draw_folded(std_rng, b.load_residual_mag);
    const Complex load_true =
        sc.load_defined_reflection + std::polar(load_dev, std_rng.next_phase());

    // (b) Measure the three standards, each through its own connection draw.
    SubstreamRng open_rng = make_stream(sc, freq_idx, draw_idx, kRoleConnectOpen);
    SubstreamRng short_rng = make_stream(sc, freq_idx, draw_idx, kRoleConnectShort);
    SubstreamRng load_rng = make_stream(sc, freq_idx, draw_idx, kRoleConnectLoad);
    const Complex m_open =
        raw_measurement(gamma_open(f, open_true), truth, draw_connection(open_rng, b));
    const Complex m_short =
        raw_measurement(gamma_short(f, short_true), truth, draw_connection(short_rng, b));
    const Complex m_load = raw_measurement(load_true, truth, draw_connection(load_rng, b));

    // (c) Solve with the DEFINED standards (belief means), not the drawn
    // ones; the mismatch is how standard-definition uncertainty becomes
    // systematic error in the calibrated result.
    OpenStandardModel open_defined{b.open_c0.mean, b.open_c1.mean, b.open_c2.mean,
                                   b.open_c3.mean, b.open_offset_length.mean,
                                   sc.ref_impedance};
    ShortStandardModel short_defined{b.short_l0.mean, b.short_l1.mean, b.short_l2.mean,
                                     b.short_l3.mean, b.short_offset_length.mean,
                                     sc.ref_impedance};
    const ErrorTerms solved = solve_error_terms(
        m_open, m_short, m_load, gamma_open(f, open_defined), gamma_short(f, short_defined),
        sc.load_defined_reflection);

    // (d) Measure and calibrate the DUT with a fresh connection draw.
    SubstreamRng dut_rng = make_stream(sc, freq_idx, draw_idx, kRoleConnectDut);
    const Complex m_dut =
        raw_measurement(sc.dut_gamma[freq_idx], truth, draw_connection(dut_rng, b));
    const Complex calibrated = calibrate(m_dut, solved);
    return to_output_unit(std::abs(calibrated), sc.output_unit);
}

unsigned worker_count() {
    if (const char* env = std::getenv("VNAUQ_THREADS")) {
        const long requested = std::strtol(env, nullptr, 10);
        if (requested >= 1)
            return static_cast<unsigned>(std::min(requested, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::vector<EmpiricalDistribution> run_monte_carlo(const Scenario& sc) {
    sc.validate();
    const std::size_t freq_count = sc.frequencies.size();
    const std::size_t n = sc.draws;

    // Every (frequency, draw) cell lands in a preassigned slot, so the result
    // does not depend on which worker computed it.
    std::vector<std::vector<std::optional<double>>> slots(
        freq_count, std::vector<std::optional<double>>(n));

    const std::size_t total = freq_count * n;
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= total)
                return;
            const std::size_t fi = t / n;
            const std::size_t di = t % n;
            try {
                slots[fi][di] = draw_cycle(sc, fi, di);
            } catch (const SingularError&) {
                // rejected draw; stays empty and is counted below
            } catch (const DomainError&) {
                // unphysical drawn parameter set; same treatment
            }
        }
    };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), total));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }

    std::vector<EmpiricalDistribution> result(freq_count);
    for (std::size_t fi = 0; fi < freq_count; ++fi) {
        EmpiricalDistribution& dist = result[fi];
        dist.frequency = sc.frequencies[fi];
        dist.samples.reserve(n);
        for (std::size_t di = 0; di < n; ++di) {
            if (slots[fi][di])
                dist.samples.push_back(*slots[fi][di]);
            else
                ++dist.discard_count;
        }
        if (dist.discard_count * 100 >= n)
            throw Error("run_monte_carlo: >= 1% of draws discarded at " +
                        std::to_string(sc.frequencies[fi]) + " Hz; scenario is unphysical");
    }
    return result;
}

DistributionSummary summarize(const EmpiricalDistribution& dist) {
    const std::size_t n = dist.samples.size();
    if (n < 9)
        throw DomainError("summarize: need at least 9 samples");
    SampleSet set{dist.samples};
    DistributionSummary summary;
    summary.count = n;
    summary.mean = set.mean();
    const double s = set.sample_std();
    summary.variance = s * s;
    // A fully collapsed distribution has no shape to speak of; report zero
    // skewness rather than failing the whole summary.
    summary.skewness = s > 0.0 ? sample_skewness(set) : 0.0;
    summary.skew_std_error = skewness_std_error(n);
    return summary;
}

HistogramData histogram(const EmpiricalDistribution& dist, std::size_t bins) {
    if (bins < 5)
        throw DomainError("histogram: need at least 5 bins");
    const std::size_t n = dist.samples.size();
    if (n < bins)
        throw DomainError("histogram: need at least as many samples as bins");

    const auto [min_it, max_it] = std::minmax_element(dist.samples.begin(), dist.samples.end());
    const double lo = *min_it;
    double hi = *max_it;
    if (hi == lo)
        hi = lo + 1.0; // degenerate span; everything lands in the first bin

    HistogramData h;
    h.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        h.bin_edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    h.bin_edges[bins] = hi;

    h.counts.assign(bins, 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double v : dist.samples) {
        auto idx = static_cast<std::size_t>(std::floor((v - lo) / width));
        if (idx >= bins)
            idx = bins - 1;
        ++h.counts[idx];
    }

    SampleSet set{dist.samples};
    h.overlay_mean = set.mean();
    h.overlay_std = set.sample_std();
    return h;
}

} // namespace vnauq
