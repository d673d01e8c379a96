#include "doctest.h"

#include <cmath>
#include <random>

#include "vnauq/vna_model.hpp"

using namespace vnauq;

namespace {

Complex random_in_disk(std::mt19937_64& rng, double max_mag, double min_mag = 0.0) {
    std::uniform_real_distribution<double> mag(min_mag, max_mag);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    return std::polar(mag(rng), phase(rng));
}

} // namespace

TEST_CASE("gamma_open: ideal open and quarter-wave offset") {
    OpenStandardModel ideal;
    CHECK(std::abs(gamma_open(1e9, ideal) - Complex{1.0, 0.0}) < 1e-15);

    OpenStandardModel quarter;
    quarter.offset_length = kSpeedOfLight / 1e9 / 4.0; // l = lambda/4
    const Complex g = gamma_open(1e9, quarter);
    CHECK(std::abs(g - Complex{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("gamma_open: 50 fF fringing capacitance at 1 GHz") {
    OpenStandardModel model;
    model.c0 = 50e-15;
    const double f = 1e9;
    const Complex g = gamma_open(f, model);

    // Oracle: direct complex evaluation with Z = -j/(2*pi*f*C).
    const Complex z{0.0, -1.0 / (2.0 * M_PI * f * model.c0)};
    const Complex expected = (z - 50.0) / (z + 50.0);
    CHECK(std::abs(g - expected) < 1e-14);

    CHECK(std::abs(g) == doctest::Approx(1.0).epsilon(1e-12));
    const double phase = std::arg(g);
    CHECK(phase == doctest::Approx(-2.0 * std::atan(2.0 * M_PI * f * model.c0 * 50.0))
                       .epsilon(1e-12));
    CHECK(phase < -0.031);
    CHECK(phase > -0.032);
}

TEST_CASE("gamma_open: error paths") {
    OpenStandardModel model;
    CHECK_THROWS_AS(gamma_open(0.0, model), DomainError);
    CHECK_THROWS_AS(gamma_open(-1e9, model), DomainError);
    model.c0 = -1e-15; // negative capacitance at every f
    CHECK_THROWS_AS(gamma_open(1e9, model), DomainError);
}

TEST_CASE("gamma_short: ideal short and quarter-wave offset") {
    ShortStandardModel ideal;
    CHECK(std::abs(gamma_short(1e9, ideal) - Complex{-1.0, 0.0}) < 1e-15);

    ShortStandardModel quarter;
    quarter.offset_length = kSpeedOfLight / 1e9 / 4.0;
    CHECK(std::abs(gamma_short(1e9, quarter) - Complex{1.0, 0.0}) < 1e-12);
}

TEST_CASE("gamma_short: 10 pH residual inductance at 1 GHz") {
    ShortStandardModel model;
    model.l0 = 10e-12;
    const double f = 1e9;
    const Complex g = gamma_short(f, model);

    const Complex z{0.0, 2.0 * M_PI * f * model.l0};
    const Complex expected = (z - 50.0) / (z + 50.0);
    CHECK(std::abs(g - expected) < 1e-14);
    CHECK(std::abs(g) == doctest::Approx(1.0).epsilon(1e-12));
    // Phase pi - 2*atan(2*pi*f*L/50), wrapped to (-pi, pi].
    const double expected_phase = M_PI - 2.0 * std::atan(2.0 * M_PI * f * model.l0 / 50.0);
    CHECK(std::arg(g) == doctest::Approx(expected_phase).epsilon(1e-12));
}

TEST_CASE("losslessness: |gamma| = 1 for open and short across parameters") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> freq(0.05e9, 40e9);
    std::uniform_real_distribution<double> cap(0.0, 100e-15);
    std::uniform_real_distribution<double> ind(0.0, 50e-12);
    std::uniform_real_distribution<double> len(0.0, 0.02);
    for (int rep = 0; rep < 200; ++rep) {
        const double f = freq(rng);
        OpenStandardModel open;
        open.c0 = cap(rng);
        open.c1 = cap(rng) * 1e-10;
        open.offset_length = len(rng);
        CHECK(std::abs(std::abs(gamma_open(f, open)) - 1.0) < 1e-12);

        ShortStandardModel sh;
        sh.l0 = ind(rng);
        sh.l1 = ind(rng) * 1e-10;
        sh.offset_length = len(rng);
        CHECK(std::abs(std::abs(gamma_short(f, sh)) - 1.0) < 1e-12);
    }
}

TEST_CASE("gamma_open: phase decreases continuously with offset length") {
    OpenStandardModel model;
    model.c0 = 30e-15;
    const double f = 2e9;
    double prev_unwrapped = std::arg(gamma_open(f, model));
    double last_raw = prev_unwrapped;
    double offset_accum = 0.0;
    for (int i = 1; i <= 400; ++i) {
        model.offset_length = i * 1e-5; // well below a half wavelength in total
        const double raw = std::arg(gamma_open(f, model));
        double step = raw - last_raw;
        if (step > M_PI)
            step -= 2.0 * M_PI; // unwrap
        last_raw = raw;
        offset_accum += step;
        CHECK(step < 0.0);                  // monotone decreasing in l
        CHECK(std::abs(step) < 0.02);       // continuous: small l step, small phase step
    }
    // Total phase advance matches -4*pi*L*f/c.
    CHECK(offset_accum ==
          doctest::Approx(-4.0 * M_PI * 400e-5 * f / kSpeedOfLight).epsilon(1e-9));
}

TEST_CASE("raw_measurement: frozen examples") {
    const ErrorTerms ideal{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
    CHECK(std::abs(raw_measurement({0.5, 0.2}, ideal) - Complex{0.5, 0.2}) < 1e-15);

    const ErrorTerms dirty{{0.01, -0.02}, {0.25, 0.1}, {0.9, -0.1}};
    CHECK(std::abs(raw_measurement({0.0, 0.0}, dirty) - Complex{0.01, -0.02}) < 1e-15);

    // Hand-expanded evaluation of the measurement equation.
    const ErrorTerms terms{{0.02, 0.0}, {0.1, 0.0}, {0.9, 0.0}};
    RandomErrorDraw rand;
    rand.t_cc = {0.99, 0.0};
    rand.r_cc = {0.01, 0.0};
    rand.noise = {0.0, 0.0};
    const Complex gamma{0.3, 0.0};
    // G = 0.01 + 0.99^2*0.3 / (1 - 0.01*0.3)
    const double g = 0.01 + 0.9801 * 0.3 / (1.0 - 0.003);
    const double expected = 0.02 + 0.9 * g / (1.0 - 0.1 * g);
    CHECK(raw_measurement(gamma, terms, rand).real() == doctest::Approx(expected).epsilon(1e-15));
    CHECK(raw_measurement(gamma, terms, rand).imag() == doctest::Approx(0.0).scale(1e-15));
}

TEST_CASE("raw_measurement: singular denominators rejected") {
    ErrorTerms terms;
    RandomErrorDraw rand;
    rand.r_cc = {0.5, 0.0};
    CHECK_THROWS_AS(raw_measurement({2.0, 0.0}, terms, rand), SingularError);

    ErrorTerms match{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(raw_measurement({1.0, 0.0}, match), SingularError);
}

TEST_CASE("calibrate: frozen examples and the exact inverse property") {
    const ErrorTerms terms{{0.05, 0.01}, {-0.1, 0.02}, {0.95, -0.03}};
    CHECK(std::abs(calibrate(terms.e_d, terms)) < 1e-15);

    const ErrorTerms ideal{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
    CHECK(std::abs(calibrate({0.3, -0.4}, ideal) - Complex{0.3, -0.4}) < 1e-15);

    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 1000; ++rep) {
        const Complex gamma = random_in_disk(rng, 0.99);
        ErrorTerms t;
        t.e_d = random_in_disk(rng, 0.1);
        t.e_s = random_in_disk(rng, 0.3);
        t.e_r = random_in_disk(rng, 1.1, 0.7);
        const Complex round_trip = calibrate(raw_measurement(gamma, t), t);
        CHECK(std::abs(round_trip - gamma) < 1e-12);
    }
}

TEST_CASE("solve_error_terms: perfect instrument with ideal standards") {
    const ErrorTerms terms = solve_error_terms({1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0},
                                               {1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0});
    CHECK(std::abs(terms.e_d) < 1e-14);
    CHECK(std::abs(terms.e_s) < 1e-14);
    CHECK(std::abs(terms.e_r - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("solve_error_terms: closed-form substitution with ideal standards") {
    const ErrorTerms truth{{0.05, 0.01}, {-0.1, 0.02}, {0.95, -0.03}};
    const Complex m_open = truth.e_d + truth.e_r / (1.0 - truth.e_s);
    const Complex m_short = truth.e_d - truth.e_r / (1.0 + truth.e_s);
    const Complex m_load = truth.e_d;
    const ErrorTerms solved =
        solve_error_terms(m_open, m_short, m_load, {1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0});
    CHECK(std::abs(solved.e_d - truth.e_d) < 1e-12);
    CHECK(std::abs(solved.e_s - truth.e_s) < 1e-12);
    CHECK(std::abs(solved.e_r - truth.e_r) < 1e-12);
}

TEST_CASE("solve_error_terms: recovers forward-generated terms") {
    std::mt19937_64 rng(2024);
    const Complex g_open{1.0, 0.0};
    const Complex g_short{-1.0, 0.0};
    const Complex g_load{0.0, 0.0};
    for (int rep = 0; rep < 1000; ++rep) {
        ErrorTerms truth;
        truth.e_d = random_in_disk(rng, 0.1);
        truth.e_s = random_in_disk(rng, 0.3);
        truth.e_r = random_in_disk(rng, 1.1, 0.7);
        const ErrorTerms solved = solve_error_terms(
            raw_measurement(g_open, truth), raw_measurement(g_short, truth),
            raw_measurement(g_load, truth), g_open, g_short, g_load);
        CHECK(std::abs(solved.e_d - truth.e_d) < 1e-10);
        CHECK(std::abs(solved.e_s - truth.e_s) < 1e-10);
        CHECK(std::abs(solved.e_r - truth.e_r) < 1e-10);
    }
}

TEST_CASE("solve_error_terms: coincident standards rejected") {
    CHECK_THROWS_AS(solve_error_terms({1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0},
                                      {1.0 + 1e-10, 0.0}, {0.0, 0.0}),
                    SingularError);
}
