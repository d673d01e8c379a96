#pragma once

#include <string>
#include <vector>

#include "vnauq/vna_model.hpp"

namespace vnauq {

enum class SweepFormat { kRealImag, kMagAngle, kDbAngle };

/// A one-port S-parameter sweep as read from (or written to) a Touchstone
/// v1 .s1p file. Values are stored rectangular regardless of the file format.
struct Sweep {
    std::vector<double> frequencies; // Hz, strictly increasing
    std::vector<Complex> s11;
    SweepFormat format_tag = SweepFormat::kMagAngle;
    double ref_impedance = 50.0;
};

/// Parses Touchstone v1 text: optional '!' comments, one option line
/// '# <unit> S <fmt> R <z>' (defaults GHz, MA, 50), data lines of three
/// numbers. Frequencies are converted to Hz and values to rectangular form.
/// Touchstone v2 is rejected. All errors are ParseError with a line number.
Sweep parse_touchstone_s1p(const std::string& text);

/// Writes a sweep back out in its format_tag, 17 significant digits.
/// Writing zero-magnitude points in the DB format is an error.
std::string write_touchstone_s1p(const Sweep& sweep);

} // namespace vnauq
