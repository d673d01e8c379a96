#include "vnauq/vna_model.hpp"

#include <array>
#include <cmath>

namespace vnauq {

namespace {

// Phase rotation of an offset line of electrical length l at frequency f,
// exp(-j*4*pi*l/lambda) with lambda = c/f.
Complex offset_rotation(double f, double length) {
    const double phase = -4.0 * M_PI * length * f / kSpeedOfLight;
    return std::polar(1.0, phase);
}

// Gaussian elimination with partial pivoting for a 3x3 complex system.
std::array<Complex, 3> solve3(std::array<std::array<Complex, 3>, 3> a,
                              std::array<Complex, 3> b) {
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col]))
                pivot = row;
        if (std::abs(a[pivot][col]) < kSingularEps)
            throw SingularError("solve_error_terms: singular calibration system");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int row = col + 1; row < 3; ++row) {
            const Complex factor = a[row][col] / a[col][col];
            for (int k = col; k < 3; ++k)
                a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::array<Complex, 3> x{};
    for (int row = 2; row >= 0; --row) {
        Complex sum = b[row];
        for (int k = row + 1; k < 3; ++k)
            sum -= a[row][k] * x[k];
        x[row] = sum / a[row][row];
    }
    return x;
}

} // namespace

Complex gamma_open(double f, const OpenStandardModel& model) {
    if (!(f > 0.0))
        throw DomainError("gamma_open: frequency must be > 0");
    model.validate();

    const double c = model.c0 + f * (model.c1 + f * (model.c2 + f * model.c3));
    if (c < 0.0)
        throw DomainError("gamma_open: capacitance polynomial is negative at this frequency");

    Complex fringe{1.0, 0.0}; // C = 0 is the ideal open
    if (c > 0.0) {
        const Complex z_open = 1.0 / (Complex{0.0, 1.0} * (2.0 * M_PI * f * c));
        fringe = (z_open - model.ref_impedance) / (z_open + model.ref_impedance);
    }
    return fringe * offset_rotation(f, model.offset_length);
}

Complex gamma_short(double f, const ShortStandardModel& model) {
    if (!(f > 0.0))
        throw DomainError("gamma_short: frequency must be > 0");
    model.validate();

    const double l = model.l0 + f * (model.l1 + f * (model.l2 + f * model.l3));
    const Complex z_short = Complex{0.0, 1.0} * (2.0 * M_PI * f * l);
    const Complex gamma = (z_short - model.ref_impedance) / (z_short + model.ref_impedance);
    return gamma * offset_rotation(f, model.offset_length);
}

Complex raw_measurement(Complex gamma_x, const ErrorTerms& terms,
                        const RandomErrorDraw& rand) {
    const Complex inner_den = 1.0 - rand.r_cc * gamma_x;
    if (std::abs(inner_den) < kSingularEps)
        throw SingularError("raw_measurement: singular 1 - r_cc*gamma denominator");
    const Complex g = rand.r_cc + rand.t_cc * rand.t_cc * gamma_x / inner_den;
    const Complex outer_den = 1.0 - terms.e_s * g;
    if (std::abs(outer_den) < kSingularEps)
        throw SingularError("raw_measurement: singular 1 - e_s*G denominator");
    return terms.e_d + terms.e_r * g / outer_den + rand.noise;
}

Complex calibrate(Complex s_m11, const ErrorTerms& terms) {
    const Complex shifted = s_m11 - terms.e_d;
    const Complex den = terms.e_r + shifted * terms.e_s;
    if (std::abs(den) < kSingularEps)
        throw SingularError("calibrate: singular correction denominator");
    return shifted / den;
}

ErrorTerms solve_error_terms(Complex m_open, Complex m_short, Complex m_load,
                             Complex g_open, Complex g_short, Complex g_load) {
    if (std::abs(g_open - g_short) <= 1e-9 || std::abs(g_open - g_load) <= 1e-9 ||
        std::abs(g_short - g_load) <= 1e-9)
        throw SingularError("solve_error_terms: standard reflections nearly coincident");

    // Rows of m = E_D + (m*g)*E_S + g*v, v = E_R - E_D*E_S.
    const std::array<Complex, 3> m{m_open, m_short, m_load};
    const std::array<Complex, 3> g{g_open, g_short, g_load};
    std::array<std::array<Complex, 3>, 3> a;
    for (int i = 0; i < 3; ++i)
        a[i] = {Complex{1.0, 0.0}, m[i] * g[i], g[i]};
    const std::array<Complex, 3> x = solve3(a, m);

    ErrorTerms terms;
    terms.e_d = x[0];
    terms.e_s = x[1];
    terms.e_r = x[2] + x[0] * x[1];
    terms.validate();
    return terms;
}

} // namespace vnauq
