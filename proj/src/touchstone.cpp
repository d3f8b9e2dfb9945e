// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/touchstone.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tcva {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

struct Token {
    std::string_view text;
    int line;
};

// Strips '!' comments, splits on whitespace, keeps line numbers for
// diagnostics.
std::vector<Token> tokenize(std::string_view text, std::vector<std::pair<int, std::string_view>>* option_lines) {
    std::vector<Token> tokens;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        const std::size_t bang = line.find('!');
        if (bang != std::string_view::npos)
            line = line.substr(0, bang);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            continue;
        if (line[i] == '#') {
            option_lines->push_back({line_no, line.substr(i + 1)});
            continue;
        }
        while (i < line.size()) {
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            tokens.push_back({line.substr(i, j - i), line_no});
            i = j;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
        }
    }
    return tokens;
}

double parse_number(const Token& t, const std::string& origin) {
    try {
        std::size_t consumed = 0;
        const std::string text(t.text);
        const double v = std::stod(text, &consumed);
        if (consumed != text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw parse_error(origin + ":" + std::to_string(t.line) + ": expected a number, got '" +
                          std::string(t.text) + "'");
    }
}

struct Options {
    double freq_scale = 1e9;  // GHz default per Touchstone v1.0
    TouchstoneFormat format = TouchstoneFormat::ma;
    double z0 = 50.0;
};

Options parse_option_line(std::string_view body, int line, const std::string& origin) {
    Options opt;
    std::istringstream is{std::string(body)};
    std::string word;
    bool param_seen = false;
    while (is >> word) {
        const std::string w = upper(word);
        if (w == "HZ") opt.freq_scale = 1.0;
        else if (w == "KHZ") opt.freq_scale = 1e3;
        else if (w == "MHZ") opt.freq_scale = 1e6;
        else if (w == "GHZ") opt.freq_scale = 1e9;
        else if (w == "S") param_seen = true;
        else if (w == "Y" || w == "Z" || w == "H" || w == "G")
            throw parse_error(origin + ":" + std::to_string(line) +
                              ": unsupported parameter type '" + word +
                              "' (only S-parameters are supported)");
        else if (w == "RI") opt.format = TouchstoneFormat::ri;
        else if (w == "MA") opt.format = TouchstoneFormat::ma;
        else if (w == "DB") opt.format = TouchstoneFormat::db;
        else if (w == "R") {
            if (!(is >> word))
                throw parse_error(origin + ":" + std::to_string(line) +
                                  ": option line ends after 'R'");
            try {
                opt.z0 = std::stod(word);
            } catch (const std::exception&) {
                throw parse_error(origin + ":" + std::to_string(line) +
                                  ": invalid reference impedance '" + word + "'");
            }
        } else {
            throw parse_error(origin + ":" + std::to_string(line) +
                              ": malformed option line token '" + word + "'");
        }
    }
    (void)param_seen;  // "S" is also the default parameter type
    return opt;
}

std::complex<double> to_rectangular(double a, double b, TouchstoneFormat f) {
    switch (f) {
        case TouchstoneFormat::ri:
            return {a, b};
        case TouchstoneFormat::ma:
            return std::polar(a, b * kDegToRad);
        case TouchstoneFormat::db:
            return std::polar(std::pow(10.0, a / 20.0), b * kDegToRad);
    }
    return {};
}

// Position k of a frequency record mapped to (row, col). 1- and 2-port files
// store columns first (S11 S21 S12 S22); larger networks are row-major.
std::pair<int, int> record_index(int k, int n) {
    if (n <= 2)
        return {k % n, k / n};
    return {k / n, k % n};
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::vector<std::string> NPortNetwork::validate() const {
    if (ports < 1)
        throw std::invalid_argument("network must have at least one port");
    if (frequencies_hz.empty())
        throw std::invalid_argument("network has no frequency points");
    if (s.size() != frequencies_hz.size() * static_cast<std::size_t>(ports) * ports)
        throw std::invalid_argument("S-matrix storage does not match ports x frequencies");
    if (!port_labels.empty() && port_labels.size() != static_cast<std::size_t>(ports))
        throw std::invalid_argument("port label count does not match port count");
    double prev = 0.0;
    for (double f : frequencies_hz) {
        if (!(f > prev))
            throw std::invalid_argument("frequencies must be strictly increasing and positive");
        prev = f;
    }
    std::size_t over_unity = 0;
    double worst = 0.0;
    double worst_f = 0.0;
    for (std::size_t fi = 0; fi < frequencies_hz.size(); ++fi) {
        for (int i = 0; i < ports; ++i) {
            for (int j = 0; j < ports; ++j) {
                const std::complex<double>& v = at(fi, i, j);
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw std::invalid_argument("non-finite S-parameter entry at frequency index " +
                                                std::to_string(fi));
                const double mag = std::abs(v);
                if (mag > 1.0 + 1e-6) {
                    ++over_unity;
                    if (mag > worst) {
                        worst = mag;
                        worst_f = frequencies_hz[fi];
                    }
                }
            }
        }
    }
    std::vector<std::string> warnings;
    if (over_unity > 0) {
        std::ostringstream os;
        os << over_unity << " S-parameter entries exceed |S| = 1 (max " << worst << " at "
           << worst_f / 1e9 << " GHz); network is not passive";
        warnings.push_back(os.str());
    }
    return warnings;
}

TouchstoneFormat parse_touchstone_format(const std::string& name) {
    const std::string u = upper(name);
    if (u == "RI") return TouchstoneFormat::ri;
    if (u == "MA") return TouchstoneFormat::ma;
    if (u == "DB") return TouchstoneFormat::db;
    throw std::invalid_argument("unknown Touchstone data format '" + name +
                                "' (expected RI, MA or DB)");
}

double frequency_unit_scale(FrequencyUnit u) {
    switch (u) {
        case FrequencyUnit::hz: return 1.0;
        case FrequencyUnit::khz: return 1e3;
        case FrequencyUnit::mhz: return 1e6;
        case FrequencyUnit::ghz: return 1e9;
    }
    return 1.0;
}

TouchstoneParseResult parse_touchstone(std::string_view text, int nports_hint,
                                       const std::string& origin) {
    if (nports_hint < 1)
        throw std::invalid_argument("port count hint required to parse Touchstone data");
    const int n = nports_hint;

    std::vector<std::pair<int, std::string_view>> option_lines;
    const std::vector<Token> tokens = tokenize(text, &option_lines);

    Options opt;  // Touchstone defaults apply when no option line is present
    if (!option_lines.empty())
        opt = parse_option_line(option_lines.front().second, option_lines.front().first, origin);

    TouchstoneParseResult result;
    if (option_lines.size() > 1)
        result.warnings.push_back(origin + ": " + std::to_string(option_lines.size() - 1) +
                                  " extra option line(s) ignored");

    NPortNetwork& net = result.network;
    net.ports = n;
    net.reference_impedance = opt.z0;

    const std::size_t per_record = 1 + 2 * static_cast<std::size_t>(n) * n;
    std::size_t pos = 0;
    bool noise_section = false;
    while (pos < tokens.size()) {
        const double raw_freq = parse_number(tokens[pos], origin);
        const double freq_hz = raw_freq * opt.freq_scale;
        if (!net.frequencies_hz.empty() && freq_hz <= net.frequencies_hz.back()) {
            // Touchstone v1.0 marks the start of 2-port noise data by a
            // decreasing frequency.
            if (n == 2) {
                noise_section = true;
                result.warnings.push_back(origin + ":" + std::to_string(tokens[pos].line) +
                                          ": noise parameter section skipped");
                break;
            }
            throw parse_error(origin + ":" + std::to_string(tokens[pos].line) +
                              ": non-monotonic frequency " + std::string(tokens[pos].text));
        }
        if (pos + per_record > tokens.size())
            throw parse_error(origin + ":" + std::to_string(tokens[pos].line) +
                              ": truncated record; expected " + std::to_string(per_record - 1) +
                              " values after the frequency (" +
                              std::to_string(tokens.size() - pos - 1) + " found)");
        net.frequencies_hz.push_back(freq_hz);
        net.s.resize(net.s.size() + static_cast<std::size_t>(n) * n);
        const std::size_t f_idx = net.frequencies_hz.size() - 1;
        for (int k = 0; k < n * n; ++k) {
            const double a = parse_number(tokens[pos + 1 + 2 * k], origin);
            const double b = parse_number(tokens[pos + 2 + 2 * k], origin);
            const auto [row, col] = record_index(k, n);
            net.at(f_idx, row, col) = to_rectangular(a, b, opt.format);
        }
        pos += per_record;
    }
    (void)noise_section;

    if (net.frequencies_hz.empty())
        throw parse_error(origin + ": no data records found");

    auto warnings = net.validate();
    result.warnings.insert(result.warnings.end(), warnings.begin(), warnings.end());
    return result;
}

TouchstoneParseResult load_touchstone(const std::string& path) {
    // Port count from the .sNp extension.
    int n = 0;
    const std::size_t dot = path.rfind('.');
    if (dot != std::string::npos) {
        const std::string ext = upper(path.substr(dot + 1));
        if (ext.size() >= 3 && ext.front() == 'S' && ext.back() == 'P') {
            try {
                n = std::stoi(ext.substr(1, ext.size() - 2));
            } catch (const std::exception&) {
                n = 0;
            }
        }
    }
    if (n < 1)
        throw std::invalid_argument("cannot infer port count from '" + path +
                                    "'; expected a .sNp extension");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_touchstone(buf.str(), n, path);
}

std::string write_touchstone(const NPortNetwork& n, TouchstoneFormat format,
                             FrequencyUnit unit) {
    n.validate();
    const double scale = frequency_unit_scale(unit);
    const char* unit_name = unit == FrequencyUnit::hz    ? "Hz"
                            : unit == FrequencyUnit::khz ? "kHz"
                            : unit == FrequencyUnit::mhz ? "MHz"
                                                         : "GHz";
    const char* fmt_name = format == TouchstoneFormat::ri   ? "RI"
                           : format == TouchstoneFormat::ma ? "MA"
                                                            : "DB";
    std::ostringstream os;
    os << "! " << n.ports << "-port S-parameter data\n";
    os << "# " << unit_name << " S " << fmt_name << " R " << format_value(n.reference_impedance)
       << "\n";
    const int nn = n.ports * n.ports;
    for (std::size_t fi = 0; fi < n.points(); ++fi) {
        os << format_value(n.frequencies_hz[fi] / scale);
        int on_line = 0;
        for (int k = 0; k < nn; ++k) {
            const auto [row, col] = record_index(k, n.ports);
            const std::complex<double> v = n.at(fi, row, col);
            double a = 0.0, b = 0.0;
            switch (format) {
                case TouchstoneFormat::ri:
                    a = v.real();
                    b = v.imag();
                    break;
                case TouchstoneFormat::ma:
                    a = std::abs(v);
                    b = std::arg(v) / kDegToRad;
                    break;
                case TouchstoneFormat::db: {
                    const double mag = std::abs(v);
                    a = mag > 0.0 ? 20.0 * std::log10(mag) : 2.0 * kDbFloor;
                    b = std::arg(v) / kDegToRad;
                    break;
                }
            }
            // v1.0 layout: at most four S-pairs per line, matrix rows start
            // fresh lines for networks above two ports.
            const bool new_row = n.ports > 2 && k % n.ports == 0 && k > 0;
            if (on_line == 4 || new_row) {
                os << "\n ";
                on_line = 0;
            }
            os << " " << format_value(a) << " " << format_value(b);
            ++on_line;
        }
        os << "\n";
    }
    return os.str();
}

NPortNetwork select_ports(const NPortNetwork& n, std::span<const int> subset) {
    if (subset.empty())
        throw std::invalid_argument("port subset must not be empty");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= n.ports)
            throw std::invalid_argument("port index " + std::to_string(subset[i]) +
                                        " out of range for a " + std::to_string(n.ports) +
                                        "-port network");
        for (std::size_t j = 0; j < i; ++j)
            if (subset[j] == subset[i])
                throw std::invalid_argument("duplicate port index " + std::to_string(subset[i]) +
                                            " in subset");
    }
    NPortNetwork out;
    out.ports = static_cast<int>(subset.size());
    out.reference_impedance = n.reference_impedance;
    out.frequencies_hz = n.frequencies_hz;
    if (!n.port_labels.empty()) {
        for (int idx : subset)
            out.port_labels.push_back(n.port_labels[idx]);
    }
    out.s.resize(out.frequencies_hz.size() * subset.size() * subset.size());
    for (std::size_t fi = 0; fi < out.points(); ++fi)
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = 0; j < subset.size(); ++j)
                out.at(fi, static_cast<int>(i), static_cast<int>(j)) =
                    n.at(fi, subset[i], subset[j]);
    return out;
}

PortMap parse_port_map(std::string_view text, int nports, const std::string& origin) {
    PortMap map(static_cast<std::size_t>(nports));
    std::vector<bool> seen(static_cast<std::size_t>(nports), false);
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string line{text.substr(pos, eol - pos)};
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream is(line);
        std::string port_s, row_s, col_s, pol_s;
        if (!(is >> port_s >> row_s >> col_s >> pol_s))
            throw parse_error(origin + ":" + std::to_string(line_no) +
                              ": expected port_index,row,col,polarization");
        if (!std::isdigit(static_cast<unsigned char>(port_s[0])))
            continue;  // header row
        int port = 0, row = 0, col = 0;
        try {
            port = std::stoi(port_s);
            row = std::stoi(row_s);
            col = std::stoi(col_s);
        } catch (const std::exception&) {
            throw parse_error(origin + ":" + std::to_string(line_no) + ": malformed integer");
        }
        if (port < 1 || port > nports)
            throw parse_error(origin + ":" + std::to_string(line_no) + ": port index " +
                              std::to_string(port) + " out of range 1.." +
                              std::to_string(nports));
        if (seen[port - 1])
            throw parse_error(origin + ":" + std::to_string(line_no) + ": port " +
                              std::to_string(port) + " mapped twice");
        seen[port - 1] = true;
        map[port - 1] = PortInfo{row, col, parse_polarization(pol_s)};
    }
    for (int p = 0; p < nports; ++p)
        if (!seen[p])
            throw parse_error(origin + ": port " + std::to_string(p + 1) +
                              " missing from port map");
    return map;
}

PortMap load_port_map(const std::string& path, int nports) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_port_map(buf.str(), nports, path);
}

}  // namespace tcva
