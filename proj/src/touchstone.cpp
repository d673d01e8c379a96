#include "vnauq/touchstone.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace vnauq {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

double parse_number(const std::string& tok, std::size_t line_no) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &consumed);
    } catch (const std::exception&) {
        throw ParseError("invalid number '" + tok + "'", line_no);
    }
    if (consumed != tok.size())
        throw ParseError("invalid number '" + tok + "'", line_no);
    return value;
}

struct OptionLine {
    double unit_scale = 1e9; // GHz default
    SweepFormat format = SweepFormat::kMagAngle;
    double ref_impedance = 50.0;
};

OptionLine parse_option_line(const std::vector<std::string>& tokens, std::size_t line_no) {
    OptionLine opt;
    bool saw_unit = false, saw_param = false, saw_format = false, saw_r = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string tok = lowercase(tokens[i]);
        if (tok == "hz" || tok == "khz" || tok == "mhz" || tok == "ghz") {
            if (saw_unit)
                throw ParseError("malformed option line: repeated frequency unit", line_no);
            saw_unit = true;
            opt.unit_scale = tok == "hz" ? 1.0 : tok == "khz" ? 1e3 : tok == "mhz" ? 1e6 : 1e9;
        } else if (tok == "s") {
            if (saw_param)
                throw ParseError("malformed option line: repeated parameter type", line_no);
            saw_param = true;
        } else if (tok == "y" || tok == "z" || tok == "g" || tok == "h") {
            throw ParseError("malformed option line: only S-parameters are supported", line_no);
        } else if (tok == "ri" || tok == "ma" || tok == "db") {
            if (saw_format)
                throw ParseError("malformed option line: repeated format", line_no);
            saw_format = true;
            opt.format = tok == "ri"   ? SweepFormat::kRealImag
                         : tok == "ma" ? SweepFormat::kMagAngle
                                       : SweepFormat::kDbAngle;
        } else if (tok == "r") {
            if (saw_r || i + 1 >= tokens.size())
                throw ParseError("malformed option line: expected impedance after R", line_no);
            saw_r = true;
            opt.ref_impedance = parse_number(tokens[++i], line_no);
            if (!(opt.ref_impedance > 0.0))
                throw ParseError("malformed option line: impedance must be > 0", line_no);
        } else {
            throw ParseError("malformed option line: unexpected token '" + tokens[i] + "'",
                             line_no);
        }
    }
    return opt;
}

Complex decode_value(double a, double b, SweepFormat fmt) {
    switch (fmt) {
    case SweepFormat::kRealImag:
        return Complex{a, b};
    case SweepFormat::kMagAngle:
        return std::polar(a, b * M_PI / 180.0);
    case SweepFormat::kDbAngle:
    default:
        return std::polar(std::pow(10.0, a / 20.0), b * M_PI / 180.0);
    }
}

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Sweep parse_touchstone_s1p(const std::string& text) {
    Sweep sweep;
    bool have_option = false;
    OptionLine opt;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        // '!' starts a comment, possibly trailing a data line.
        if (const auto bang = raw.find('!'); bang != std::string::npos)
            raw.erase(bang);

        const std::vector<std::string> tokens = split_ws(raw);
        if (tokens.empty())
            continue;

        if (tokens[0][0] == '[')
            throw ParseError("Touchstone v2 keywords are not supported; "
                             "this parser reads Touchstone v1 only",
                             line_no);

        if (tokens[0][0] == '#') {
            if (have_option)
                throw ParseError("malformed option line: more than one option line", line_no);
            // Allow both '#GHz ...' and '# GHz ...'.
            std::vector<std::string> opt_tokens = tokens;
            if (tokens[0].size() > 1) {
                opt_tokens.clear();
                opt_tokens.push_back("#");
                opt_tokens.push_back(tokens[0].substr(1));
                opt_tokens.insert(opt_tokens.end(), tokens.begin() + 1, tokens.end());
            }
            opt = parse_option_line(opt_tokens, line_no);
            have_option = true;
            continue;
        }

        if (!have_option)
            throw ParseError("data before the option line", line_no);
        if (tokens.size() != 3)
            throw ParseError("wrong column count: expected 3 values, got " +
                                 std::to_string(tokens.size()),
                             line_no);

        const double freq = parse_number(tokens[0], line_no) * opt.unit_scale;
        if (!sweep.frequencies.empty() && !(freq > sweep.frequencies.back()))
            throw ParseError("non-monotone frequency", line_no);
        const double a = parse_number(tokens[1], line_no);
        const double b = parse_number(tokens[2], line_no);
        sweep.frequencies.push_back(freq);
        sweep.s11.push_back(decode_value(a, b, opt.format));
    }

    if (!have_option)
        throw ParseError("missing option line", line_no ? line_no : 1);
    sweep.format_tag = opt.format;
    sweep.ref_impedance = opt.ref_impedance;
    return sweep;
}

std::string write_touchstone_s1p(const Sweep& sweep) {
    std::ostringstream out;
    const char* fmt = sweep.format_tag == SweepFormat::kRealImag   ? "RI"
                      : sweep.format_tag == SweepFormat::kMagAngle ? "MA"
                                                                   : "DB";
    out << "# Hz S " << fmt << " R " << format_g17(sweep.ref_impedance) << "\n";
    for (std::size_t i = 0; i < sweep.frequencies.size(); ++i) {
        const Complex v = sweep.s11[i];
        double a = 0.0, b = 0.0;
        switch (sweep.format_tag) {
        case SweepFormat::kRealImag:
            a = v.real();
            b = v.imag();
            break;
        case SweepFormat::kMagAngle:
            a = std::abs(v);
            b = std::arg(v) * 180.0 / M_PI;
            break;
        case SweepFormat::kDbAngle:
            if (!(std::abs(v) > 0.0))
                throw DomainError("write_touchstone_s1p: zero magnitude has no dB form");
            a = 20.0 * std::log10(std::abs(v));
            b = std::arg(v) * 180.0 / M_PI;
            break;
        }
        out << format_g17(sweep.frequencies[i]) << " " << format_g17(a) << " "
            << format_g17(b) << "\n";
    }
    return out.str();
}

} // namespace vnauq
