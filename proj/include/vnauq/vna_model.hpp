#pragma once

#include <complex>

#include "vnauq/errors.hpp"

namespace vnauq {

/// Complex reflection coefficient / S-parameter value (dimensionless).
using Complex = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kSingularEps = 1e-12;        // denominator rejection threshold

/// "Open" calibration standard: fringing capacitance polynomial
/// C(f) = c0 + c1*f + c2*f^2 + c3*f^3 plus an offset electrical length.
struct OpenStandardModel {
    double c0 = 0.0;            // F
    double c1 = 0.0;            // F/Hz
    double c2 = 0.0;            // F/Hz^2
    double c3 = 0.0;            // F/Hz^3
    double offset_length = 0.0; // m, electrical length
    double ref_impedance = 50.0; // ohm

    void validate() const {
        if (!(ref_impedance > 0.0))
            throw DomainError("OpenStandardModel: ref_impedance must be > 0");
        if (offset_length < 0.0)
            throw DomainError("OpenStandardModel: offset_length must be >= 0");
    }
};

/// "Short" standard: residual inductance polynomial
/// L(f) = l0 + l1*f + l2*f^2 + l3*f^3 plus an offset electrical length.
struct ShortStandardModel {
    double l0 = 0.0;            // H
    double l1 = 0.0;            // H/Hz
    double l2 = 0.0;            // H/Hz^2
    double l3 = 0.0;            // H/Hz^3
    double offset_length = 0.0; // m
    double ref_impedance = 50.0; // ohm

    void validate() const {
        if (!(ref_impedance > 0.0))
            throw DomainError("ShortStandardModel: ref_impedance must be > 0");
        if (offset_length < 0.0)
            throw DomainError("ShortStandardModel: offset_length must be >= 0");
    }
};

/// "Load" standard: nominally perfect termination with a small defined
/// residual reflection.
struct LoadStandardModel {
    Complex residual_reflection{0.0, 0.0};

    void validate() const {
        if (!(std::abs(residual_reflection) < 0.1))
            throw DomainError("LoadStandardModel: |residual_reflection| must be < 0.1");
    }
};

/// One-port systematic error terms at a single frequency: directivity,
/// source match and reflection tracking.
struct ErrorTerms {
    Complex e_d{0.0, 0.0};
    Complex e_s{0.0, 0.0};
    Complex e_r{1.0, 0.0};

    void validate() const {
        if (!(std::abs(e_r) > 0.0))
            throw DomainError("ErrorTerms: reflection tracking must be nonzero");
    }
};

/// Random error realization for one connection event: cable transmission
/// perturbation (nominal 1), cable/connector reflection perturbation
/// (nominal 0) and receiver noise (nominal 0).
struct RandomErrorDraw {
    Complex t_cc{1.0, 0.0};
    Complex r_cc{0.0, 0.0};
    Complex noise{0.0, 0.0};

    void validate() const {
        if (!(std::abs(t_cc - Complex{1.0, 0.0}) < 1.0))
            throw DomainError("RandomErrorDraw: |t_cc - 1| must be < 1");
        if (!(std::abs(r_cc) < 1.0))
            throw DomainError("RandomErrorDraw: |r_cc| must be < 1");
    }
};

inline constexpr RandomErrorDraw kNoRandomError{};

/// Reflection coefficient of the Open standard at frequency f.
/// C(f) = 0 degenerates to the ideal open (unit fringe reflection); the
/// offset contributes the phase factor exp(-j*4*pi*l*f/c).
/// Throws DomainError for f <= 0 or a negative C(f).
Complex gamma_open(double f, const OpenStandardModel& model);

/// Reflection coefficient of the Short standard at frequency f.
/// Z = j*2*pi*f*L(f); all-zero coefficients give exactly -1.
Complex gamma_short(double f, const ShortStandardModel& model);

/// Raw (uncorrected) one-port measurement of a device with true reflection
/// gamma_x through the given error terms and random error draw:
///   G = r_cc + t_cc^2 * gamma_x / (1 - r_cc * gamma_x)
///   S_m11 = e_d + e_r * G / (1 - e_s * G) + noise
/// Throws SingularError when either denominator magnitude falls below 1e-12.
Complex raw_measurement(Complex gamma_x, const ErrorTerms& terms,
                        const RandomErrorDraw& rand = kNoRandomError);

/// Error correction: (s_m11 - e_d) / (e_r + (s_m11 - e_d) * e_s).
/// Exact inverse of raw_measurement when random errors are off.
Complex calibrate(Complex s_m11, const ErrorTerms& terms);

/// Solves the three error terms from measurements of three known standards.
/// Each standard satisfies m_i = E_D + E_R*g_i/(1 - E_S*g_i), which is linear
/// in the unknowns (E_D, E_S, v) with v = E_R - E_D*E_S:
///   m_i = E_D + (m_i*g_i)*E_S + g_i*v
/// so a single 3x3 complex solve recovers E_D and E_S directly and
/// E_R = v + E_D*E_S. Requires pairwise distinct standard reflections
/// (|g_i - g_j| > 1e-9); throws SingularError when the system degenerates.
ErrorTerms solve_error_terms(Complex m_open, Complex m_short, Complex m_load,
                             Complex g_open, Complex g_short, Complex g_load);

} // namespace vnauq
