// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace tcva {

namespace {

struct RawConfig {
    // section -> key -> value, last assignment wins
    std::map<std::string, std::map<std::string, std::string>> sections;
};

std::string trim(std::string s) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(s.front()))
        s.erase(s.begin());
    while (!s.empty() && is_space(s.back()))
        s.pop_back();
    return s;
}

RawConfig parse_raw(std::string_view text, const std::string& origin) {
    RawConfig raw;
    std::string section;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string line{text.substr(pos, eol - pos)};
        pos = eol + 1;
        ++line_no;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos)
            line.resize(comment);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw parse_error(origin + ":" + std::to_string(line_no) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(origin + ":" + std::to_string(line_no) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw parse_error(origin + ":" + std::to_string(line_no) + ": empty key");
        raw.sections[section][key] = value;
    }
    return raw;
}

double to_double(const std::string& v, const std::string& where) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size())
            throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw parse_error(where + ": invalid number '" + v + "'");
    }
}

int to_int(const std::string& v, const std::string& where) {
    try {
        std::size_t used = 0;
        const int i = std::stoi(v, &used);
        if (used != v.size())
            throw std::invalid_argument("trailing characters");
        return i;
    } catch (const std::exception&) {
        throw parse_error(where + ": invalid integer '" + v + "'");
    }
}

std::vector<double> to_double_list(const std::string& v, const std::string& where) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(to_double(item, where));
    }
    return out;
}

void apply_taper(TaperParams& t, const std::map<std::string, std::string>& kv,
                 const std::string& where) {
    for (const auto& [key, value] : kv) {
        const double d = to_double(value, where + "." + key);
        if (key == "c_i") t.c_inner = d;
        else if (key == "k_i") t.k_inner = d;
        else if (key == "c_a") t.c_offset = d;
        else if (key == "c_o") t.c_outer = d;
        else if (key == "k_o") t.k_outer = d;
        else if (key == "c_b") t.c_base = d;
        else if (key == "w_f") t.feed_width = d;
        else if (key == "l_f") t.feed_length = d;
        else
            throw parse_error(where + ": unknown taper key '" + key + "'");
    }
}

void apply_dims(ElementDims& e, const std::map<std::string, std::string>& kv,
                const std::string& where) {
    for (const auto& [key, value] : kv) {
        const double d = to_double(value, where + "." + key);
        if (key == "w_a") e.element_width = d;
        else if (key == "h") e.flare_height = d;
        else if (key == "h_b") e.element_height = d;
        else if (key == "w") e.antenna_pcb_width = d;
        else if (key == "w_b") e.board_width = d;
        else if (key == "w_ol") e.overlap = d;
        else if (key == "w_sp") e.spacing_clearance = d;
        else if (key == "h_s") e.substrate_thickness = d;
        else
            throw parse_error(where + ": unknown element key '" + key + "'");
    }
}

}  // namespace

ProjectConfig default_config() {
    ProjectConfig c;
    c.taper_x = default_taper_params();
    c.taper_y = default_taper_params();
    c.dims_x = default_element_dims(Polarization::x);
    c.dims_y = default_element_dims(Polarization::y);
    return c;
}

ProjectConfig parse_config(std::string_view text, const std::string& origin) {
    const RawConfig raw = parse_raw(text, origin);
    ProjectConfig cfg = default_config();

    for (const auto& [section, kv] : raw.sections) {
        if (section == "taper") {
            apply_taper(cfg.taper_x, kv, origin + " [taper]");
            apply_taper(cfg.taper_y, kv, origin + " [taper]");
        } else if (section == "taper.x") {
            apply_taper(cfg.taper_x, kv, origin + " [taper.x]");
        } else if (section == "taper.y") {
            apply_taper(cfg.taper_y, kv, origin + " [taper.y]");
        } else if (section == "element.x") {
            apply_dims(cfg.dims_x, kv, origin + " [element.x]");
        } else if (section == "element.y") {
            apply_dims(cfg.dims_y, kv, origin + " [element.y]");
        } else if (section == "array") {
            for (const auto& [key, value] : kv) {
                if (key == "rows") cfg.rows = to_int(value, origin + " [array].rows");
                else if (key == "cols") cfg.cols = to_int(value, origin + " [array].cols");
                else
                    throw parse_error(origin + " [array]: unknown key '" + key + "'");
            }
        } else if (section == "analysis") {
            for (const auto& [key, value] : kv) {
                if (key == "touchstone") cfg.touchstone_path = value;
                else if (key == "portmap") cfg.portmap_path = value;
                else if (key == "excitation") cfg.excitation = value;
                else if (key == "thresholds")
                    cfg.thresholds_db = to_double_list(value, origin + " [analysis].thresholds");
                else
                    throw parse_error(origin + " [analysis]: unknown key '" + key + "'");
            }
        } else if (section == "pattern") {
            for (const auto& [key, value] : kv) {
                if (key == "frequencies_ghz") {
                    cfg.pattern_frequencies_hz.clear();
                    for (double g : to_double_list(value, origin + " [pattern].frequencies_ghz"))
                        cfg.pattern_frequencies_hz.push_back(g * 1e9);
                } else if (key == "n") {
                    cfg.pattern_count = to_int(value, origin + " [pattern].n");
                } else if (key == "spacing_mm") {
                    cfg.pattern_spacing_mm = to_double(value, origin + " [pattern].spacing_mm");
                } else if (key == "step_deg") {
                    cfg.pattern_step_deg = to_double(value, origin + " [pattern].step_deg");
                } else {
                    throw parse_error(origin + " [pattern]: unknown key '" + key + "'");
                }
            }
        } else if (section == "compare") {
            for (const auto& [key, value] : kv) {
                if (key == "entries") cfg.compare_path = value;
                else
                    throw parse_error(origin + " [compare]: unknown key '" + key + "'");
            }
        } else if (section == "output") {
            for (const auto& [key, value] : kv) {
                if (key == "dir") cfg.output_dir = value;
                else if (key == "resolution")
                    cfg.resolution = to_int(value, origin + " [output].resolution");
                else
                    throw parse_error(origin + " [output]: unknown key '" + key + "'");
            }
        } else {
            throw parse_error(origin + ": unknown section [" + section + "]");
        }
    }

    cfg.dims_x.polarization = Polarization::x;
    cfg.dims_y.polarization = Polarization::y;
    return cfg;
}

ProjectConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open config '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace tcva
