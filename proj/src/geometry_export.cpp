// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/geometry_export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tcva {

namespace {

// Shortest representation that parses back to the identical double.
std::string roundtrip(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fixed9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct Bounds {
    double x_min = std::numeric_limits<double>::infinity();
    double y_min = std::numeric_limits<double>::infinity();
    double x_max = -std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    void add(const Point& p) {
        x_min = std::min(x_min, p.x);
        y_min = std::min(y_min, p.y);
        x_max = std::max(x_max, p.x);
        y_max = std::max(y_max, p.y);
    }
    bool empty() const { return !(x_min <= x_max); }
};

Bounds bounds_of(const Drawing& d) {
    Bounds b;
    for (const auto& path : d.paths)
        for (const auto& v : path.polygon)
            b.add(v);
    return b;
}

Polygon rect_polygon(const Rect& r) {
    return {{r.x_min, r.y_min}, {r.x_max, r.y_min}, {r.x_max, r.y_max},
            {r.x_min, r.y_max}, {r.x_min, r.y_min}};
}

Polygon translated(const Polygon& poly, double dx, double dy) {
    Polygon out;
    out.reserve(poly.size());
    for (const Point& v : poly)
        out.push_back({v.x + dx, v.y + dy});
    return out;
}

}  // namespace

ExportFormat parse_export_format(const std::string& name) {
    if (name == "svg")
        return ExportFormat::svg;
    if (name == "csv" || name == "csv-points")
        return ExportFormat::csv_points;
    if (name == "dxf" || name == "dxf-lite")
        return ExportFormat::dxf;
    throw std::invalid_argument("unknown export format '" + name +
                                "' (expected svg, csv or dxf)");
}

const char* file_extension(ExportFormat f) {
    switch (f) {
        case ExportFormat::svg: return "svg";
        case ExportFormat::csv_points: return "csv";
        case ExportFormat::dxf: return "dxf";
    }
    return "dat";
}

Drawing element_drawing(const ElementOutline& outline) {
    Drawing d;
    d.paths.push_back({"leaf_plus", outline.leaves[0]});
    d.paths.push_back({"leaf_minus", outline.leaves[1]});
    return d;
}

Drawing layout_drawing(const ArrayLayout& layout, const TaperParams& taper_x,
                       const TaperParams& taper_y, int resolution) {
    Drawing d;
    if (layout.elements.empty())
        return d;

    const ElementOutline el_x = build_element(taper_x, layout.dims_x, resolution);
    const ElementOutline el_y = build_element(taper_y, layout.dims_y, resolution);

    constexpr double panel_gap = 10.0;
    int panel = 0;
    for (Polarization pol : {Polarization::x, Polarization::y}) {
        const ElementOutline& el = pol == Polarization::x ? el_x : el_y;
        const ElementDims& dims = pol == Polarization::x ? layout.dims_x : layout.dims_y;
        for (int row = 0; row < layout.rows; ++row) {
            bool pcb_present = false;
            const double y_off = panel * (dims.element_height + panel_gap);
            for (const Placement& e : layout.elements) {
                if (e.polarization != pol || e.row != row)
                    continue;
                pcb_present = true;
                const int leaf_front = e.side == PcbSide::front ? 0 : 1;
                for (int leaf = 0; leaf < 2; ++leaf) {
                    std::ostringstream name;
                    name << to_string(pol) << "_pcb" << row << "_el" << e.col
                         << (leaf == leaf_front ? "_front" : "_back");
                    d.paths.push_back(
                        {name.str(), translated(el.leaves[leaf], e.lateral_offset, y_off)});
                }
            }
            if (!pcb_present)
                continue;
            for (const SlotSpec& s : layout.slots) {
                if (s.host_polarization != pol || s.host_row != row)
                    continue;
                const double y0 = s.from_edge == SlotEdge::bottom ? 0.0
                                                                  : dims.element_height - s.length;
                Rect r{s.position - s.width / 2.0, y0 + y_off, s.position + s.width / 2.0,
                       y0 + s.length + y_off};
                std::ostringstream name;
                name << to_string(pol) << "_pcb" << row << "_slot";
                d.paths.push_back({name.str(), rect_polygon(r)});
            }
            ++panel;
        }
    }
    return d;
}

std::string to_svg(const Drawing& d) {
    const Bounds b = bounds_of(d);
    const double w = b.empty() ? 0.0 : b.x_max - b.x_min;
    const double h = b.empty() ? 0.0 : b.y_max - b.y_min;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed9(w)
       << "mm\" height=\"" << fixed9(h) << "mm\" viewBox=\"0 0 " << fixed9(w) << " "
       << fixed9(h) << "\">\n";
    // SVG y grows downward; flip so drawings keep their orientation.
    for (const auto& path : d.paths) {
        os << "  <path id=\"" << path.name << "\" fill=\"none\" stroke=\"black\" "
              "stroke-width=\"0.05\" d=\"";
        for (std::size_t i = 0; i < path.polygon.size(); ++i) {
            const Point& v = path.polygon[i];
            os << (i == 0 ? "M" : " L") << fixed9(v.x - b.x_min) << " "
               << fixed9(b.y_max - v.y);
        }
        os << " Z\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string to_csv_points(const Drawing& d) {
    std::ostringstream os;
    os << "x_mm,y_mm,polygon_id\n";
    int id = 0;
    for (const auto& path : d.paths) {
        for (const Point& v : path.polygon)
            os << roundtrip(v.x) << "," << roundtrip(v.y) << "," << id << "\n";
        ++id;
    }
    return os.str();
}

std::string to_dxf(const Drawing& d) {
    std::ostringstream os;
    os << "0\nSECTION\n2\nENTITIES\n";
    for (const auto& path : d.paths) {
        // Closed LWPOLYLINE; the closing vertex is implied by flag 70=1.
        const std::size_t n = path.polygon.size() > 1 ? path.polygon.size() - 1
                                                      : path.polygon.size();
        os << "0\nLWPOLYLINE\n8\n" << path.name << "\n90\n" << n << "\n70\n1\n";
        for (std::size_t i = 0; i < n; ++i) {
            os << "10\n" << fixed9(path.polygon[i].x) << "\n20\n"
               << fixed9(path.polygon[i].y) << "\n";
        }
    }
    os << "0\nENDSEC\n0\nEOF\n";
    return os.str();
}

std::string export_drawing(const Drawing& d, ExportFormat f) {
    switch (f) {
        case ExportFormat::svg: return to_svg(d);
        case ExportFormat::csv_points: return to_csv_points(d);
        case ExportFormat::dxf: return to_dxf(d);
    }
    throw std::invalid_argument("unknown export format");
}

std::vector<Polygon> import_csv_points(std::string_view text) {
    std::vector<Polygon> polys;
    int current_id = -1;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty() || line == "x_mm,y_mm,polygon_id")
            continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos)
            throw parse_error("points CSV line " + std::to_string(line_no) +
                              ": expected x_mm,y_mm,polygon_id");
        Point v;
        int id = 0;
        const auto rx = std::from_chars(line.data(), line.data() + c1, v.x);
        const auto ry = std::from_chars(line.data() + c1 + 1, line.data() + c2, v.y);
        const auto ri = std::from_chars(line.data() + c2 + 1, line.data() + line.size(), id);
        if (rx.ec != std::errc{} || ry.ec != std::errc{} || ri.ec != std::errc{})
            throw parse_error("points CSV line " + std::to_string(line_no) +
                              ": malformed number");
        if (id != current_id) {
            polys.emplace_back();
            current_id = id;
        }
        polys.back().push_back(v);
    }
    return polys;
}

}  // namespace tcva
