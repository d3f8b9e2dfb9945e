// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcva/geometry.hpp"

namespace tcva {

// Declarative project configuration. Plain key-value text with [section]
// headers; keys mirror the dimension-table symbol names. Defaults are the
// reference prototype values, so an empty config is a valid project.
//
//   [taper]        c_i k_i c_a c_o k_o c_b w_f l_f   (shared by both pols;
//   [taper.x]      ... per-polarization overrides)
//   [element.x]    w_a h h_b w w_b w_ol w_sp h_s
//   [element.y]    ...
//   [array]        rows cols
//   [analysis]     touchstone portmap excitation thresholds
//   [pattern]      frequencies_ghz n spacing_mm step_deg
//   [output]       dir
struct ProjectConfig {
    TaperParams taper_x;
    TaperParams taper_y;
    ElementDims dims_x;
    ElementDims dims_y;
    int rows = 3;
    int cols = 3;

    std::string touchstone_path;
    std::string portmap_path;
    std::string excitation = "centre-row-equiphase:x";
    std::vector<double> thresholds_db = {-6.0, -10.0};

    std::vector<double> pattern_frequencies_hz = {3e9, 6.2e9, 12.42e9, 20e9};
    int pattern_count = 3;
    double pattern_spacing_mm = 24.13;
    double pattern_step_deg = 0.25;

    std::string compare_path;
    std::string output_dir = "out";
    int resolution = 256;

    const TaperParams& taper(Polarization p) const {
        return p == Polarization::x ? taper_x : taper_y;
    }
    const ElementDims& dims(Polarization p) const {
        return p == Polarization::x ? dims_x : dims_y;
    }
};

ProjectConfig default_config();
ProjectConfig parse_config(std::string_view text, const std::string& origin = "<memory>");
ProjectConfig load_config(const std::string& path);

}  // namespace tcva
