// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tcva/geometry.hpp"

namespace tcva {

enum class ExportFormat { svg, csv_points, dxf };

ExportFormat parse_export_format(const std::string& name);
const char* file_extension(ExportFormat f);

// Flat drawing of named polygons, the unit every exporter consumes.
struct Drawing {
    struct Path {
        std::string name;
        Polygon polygon;
    };
    std::vector<Path> paths;
};

// Both leaves of one element (the feed segments are part of the leaf
// outlines already).
Drawing element_drawing(const ElementOutline& outline);

// Per-PCB flat panel: every PCB of both polarizations stacked vertically with
// a fixed gap, each with its element copper outlines at their lateral offsets
// and its interleave slots as rectangles.
Drawing layout_drawing(const ArrayLayout& layout, const TaperParams& taper_x,
                       const TaperParams& taper_y, int resolution = 256);

// Serializers. SVG 1.1 in mm user units, one <path> per polygon; CSV rows
// `x_mm,y_mm,polygon_id` with shortest round-trip float formatting; minimal
// DXF with one LWPOLYLINE per polygon. All with LF line endings.
std::string to_svg(const Drawing& d);
std::string to_csv_points(const Drawing& d);
std::string to_dxf(const Drawing& d);
std::string export_drawing(const Drawing& d, ExportFormat f);

// Inverse of to_csv_points; reproduces the exported vertices bit-exactly.
std::vector<Polygon> import_csv_points(std::string_view text);

}  // namespace tcva
