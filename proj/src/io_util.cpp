// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/io_util.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tcva {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw io_error("write to '" + path + "' failed");
}

std::string format_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string trace_to_csv(const FrequencyTrace& t) {
    std::ostringstream os;
    os << "f_hz,value_db\n";
    char buf[80];
    for (std::size_t i = 0; i < t.frequencies_hz.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", t.frequencies_hz[i], t.values[i]);
        os << buf;
    }
    return os.str();
}

FrequencyTrace trace_from_csv(std::string_view text, const std::string& origin) {
    FrequencyTrace t;
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
        if (!std::isdigit(static_cast<unsigned char>(line[0])) && line[0] != '-' &&
            line[0] != '+' && line[0] != '.')
            continue;  // header
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw parse_error(origin + ":" + std::to_string(line_no) +
                              ": expected f_hz,value_db");
        try {
            t.frequencies_hz.push_back(std::stod(line.substr(0, comma)));
            t.values.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw parse_error(origin + ":" + std::to_string(line_no) + ": malformed number");
        }
    }
    if (t.frequencies_hz.empty())
        throw parse_error(origin + ": no trace points found");
    return t;
}

FrequencyTrace load_trace(const std::string& path) {
    return trace_from_csv(read_text_file(path), path);
}

ExcitationVector parse_excitation_csv(std::string_view text, int nports,
                                      const std::string& origin) {
    ExcitationVector e;
    e.amplitudes.assign(static_cast<std::size_t>(nports), {0.0, 0.0});
    std::size_t pos = 0;
    int line_no = 0;
    bool any = false;
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
        if (!std::isdigit(static_cast<unsigned char>(line[0])))
            continue;  // header
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream is(line);
        int port = 0;
        double re = 0.0, im = 0.0;
        if (!(is >> port >> re >> im))
            throw parse_error(origin + ":" + std::to_string(line_no) +
                              ": expected port,real,imag");
        if (port < 1 || port > nports)
            throw parse_error(origin + ":" + std::to_string(line_no) + ": port " +
                              std::to_string(port) + " out of range 1.." +
                              std::to_string(nports));
        e.amplitudes[static_cast<std::size_t>(port - 1)] = {re, im};
        any = true;
    }
    if (!any)
        throw parse_error(origin + ": no excitation entries found");
    return e;
}

}  // namespace tcva
