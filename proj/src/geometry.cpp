// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcva {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0))
        throw std::invalid_argument(std::string(name) + " must be strictly positive");
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

void TaperParams::validate() const {
    require_positive(c_inner, "c_i");
    require_positive(k_inner, "k_i");
    require_positive(c_offset, "c_a");
    require_positive(c_outer, "c_o");
    require_positive(k_outer, "k_o");
    require_positive(c_base, "c_b");
    require_positive(feed_width, "w_f");
    require_positive(feed_length, "l_f");
    const double origin_gap = std::abs((c_offset - c_inner) - (c_outer + c_base));
    if (origin_gap >= 0.02)
        throw std::invalid_argument("taper curve origins differ by " + fmt(origin_gap) +
                                    " mm; inner and outer curves must start at the same |x|");
    const double feed_gap = std::abs((c_offset - c_inner) - feed_width / 2.0);
    if (feed_gap >= 0.02)
        throw std::invalid_argument("inner curve origin is " + fmt(feed_gap) +
                                    " mm away from the feed-line edge w_f/2");
}

void ElementDims::validate() const {
    require_positive(element_width, "w_a");
    require_positive(flare_height, "h");
    require_positive(element_height, "h_b");
    require_positive(substrate_thickness, "h_s");
    if (spacing_clearance < 0.0)
        throw std::invalid_argument("w_sp must be non-negative");
    if (overlap < 0.0)
        throw std::invalid_argument("w_ol must be non-negative");
    if (!(overlap < element_width))
        throw std::invalid_argument("overlap w_ol (" + fmt(overlap) +
                                    ") must be smaller than element width w_a (" +
                                    fmt(element_width) + ")");
    if (!(flare_height < element_height))
        throw std::invalid_argument("flare height h must be smaller than element height h_b");
}

TaperParams default_taper_params() { return TaperParams{}; }

ElementDims default_element_dims(Polarization pol) {
    ElementDims d;
    if (pol == Polarization::y) {
        d.element_width = 28.13;
        d.overlap = 4.00;
        d.spacing_clearance = 0.10;
        d.polarization = Polarization::y;
    }
    return d;
}

double eval_inner_curve(const TaperParams& p, double y, CurveSign sign) {
    if (y < 0.0)
        throw std::domain_error("taper curve coordinate y must be non-negative");
    const double v = p.c_inner * std::exp(p.k_inner * y) - p.c_offset;
    return sign == CurveSign::plus ? v : -v;
}

double eval_outer_curve(const TaperParams& p, double y, CurveSign sign) {
    if (y < 0.0)
        throw std::domain_error("taper curve coordinate y must be non-negative");
    const double v = p.c_outer * std::exp(p.k_outer * y * y) + p.c_base;
    return sign == CurveSign::plus ? v : -v;
}

namespace {

// Bisection for the smallest y in [0, y_max] with curve(y) >= x_target.
// Both curves are strictly increasing, so this is the unique crossing.
template <typename F>
double crossing_height(F curve, double x_target, double y_max) {
    if (curve(0.0) >= x_target)
        return 0.0;
    if (curve(y_max) < x_target)
        return y_max;
    double lo = 0.0, hi = y_max;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (curve(mid) < x_target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double inner_curve_height_at(const TaperParams& p, double x_target, double y_max) {
    return crossing_height([&](double y) { return eval_inner_curve(p, y, CurveSign::plus); },
                           x_target, y_max);
}

double outer_curve_height_at(const TaperParams& p, double x_target, double y_max) {
    return crossing_height([&](double y) { return eval_outer_curve(p, y, CurveSign::plus); },
                           x_target, y_max);
}

Polygon build_leaf_outline(const TaperParams& p, const ElementDims& d, int resolution) {
    p.validate();
    d.validate();
    if (resolution < 16)
        throw std::invalid_argument("leaf outline resolution must be >= 16");

    const double half_width = d.element_width / 2.0;
    const double throat_y = d.element_height - d.flare_height;  // feed junction
    const double h = d.flare_height;

    if (p.outer_origin() <= p.inner_origin())
        throw geometry_error("outer taper curve starts inside the inner curve; leaf has no area");
    if (p.inner_origin() >= half_width)
        throw geometry_error("inner taper curve starts outside the element half-width " +
                             fmt(half_width) + " mm; curves never enter the clip box");

    // Height (flare coordinate) where each curve leaves the element boundary.
    const double t_inner_end = inner_curve_height_at(p, half_width, h);
    const double t_outer_end = outer_curve_height_at(p, half_width, h);

    Polygon poly;
    poly.reserve(static_cast<std::size_t>(2 * resolution) + 8);

    const double feed_half = p.feed_width / 2.0;

    // Feed strip, bottom edge first.
    poly.push_back({-feed_half, 0.0});
    poly.push_back({feed_half, 0.0});
    poly.push_back({feed_half, throat_y});

    // Outer curve up to its clip height.
    for (int i = 0; i < resolution; ++i) {
        const double t = t_outer_end * static_cast<double>(i) / (resolution - 1);
        const double x = std::min(eval_outer_curve(p, t, CurveSign::plus), half_width);
        poly.push_back({x, throat_y + t});
    }

    // Along the element boundary between the two curve exits (vertical edge
    // when the outer curve is clipped before the inner one). The inner curve
    // descent below starts at (inner(t_inner_end), t_inner_end), which is the
    // boundary point itself when the inner curve was clipped.
    const double inner_end_x = std::min(eval_inner_curve(p, t_inner_end, CurveSign::plus),
                                        half_width);
    if (t_inner_end > t_outer_end && inner_end_x < half_width - 1e-9)
        poly.push_back({half_width, throat_y + t_inner_end});

    // Inner curve back down to the feed junction (its first point closes the
    // flare top edge).
    for (int i = resolution - 1; i >= 0; --i) {
        const double t = t_inner_end * static_cast<double>(i) / (resolution - 1);
        poly.push_back({eval_inner_curve(p, t, CurveSign::plus), throat_y + t});
    }

    poly.push_back({-feed_half, throat_y});

    // Collapse consecutive duplicates left by degenerate clip positions, then
    // close the ring.
    Polygon clean;
    clean.reserve(poly.size() + 1);
    for (const Point& v : poly) {
        if (clean.empty() || std::abs(v.x - clean.back().x) > 1e-12 ||
            std::abs(v.y - clean.back().y) > 1e-12)
            clean.push_back(v);
    }
    if (clean.size() < 3)
        throw geometry_error("leaf outline degenerated to fewer than 3 distinct vertices");
    clean.push_back(clean.front());
    poly = std::move(clean);

    // The outer edge must stay outside the inner edge everywhere, otherwise
    // the polygon self-intersects.
    for (int i = 0; i < resolution; ++i) {
        const double t = std::min(t_outer_end, t_inner_end) * static_cast<double>(i) /
                         (resolution - 1);
        const double xo = std::min(eval_outer_curve(p, t, CurveSign::plus), half_width);
        const double xi = eval_inner_curve(p, t, CurveSign::plus);
        if (xo <= xi)
            throw geometry_error("taper curves cross at flare height " + fmt(t) +
                                 " mm; inner edge overtakes outer edge");
    }

    return poly;
}

ElementOutline build_element(const TaperParams& p, const ElementDims& d, int resolution) {
    ElementOutline out;
    out.taper = p;
    out.dims = d;
    out.leaves[0] = build_leaf_outline(p, d, resolution);

    // Mirror about the element centerline, vertex for vertex.
    out.leaves[1].reserve(out.leaves[0].size());
    for (const Point& v : out.leaves[0])
        out.leaves[1].push_back({-v.x, v.y});

    const double throat_y = d.element_height - d.flare_height;
    const double feed_half = p.feed_width / 2.0;
    const Rect feed{-feed_half, throat_y - p.feed_length, feed_half, throat_y};
    out.feed_segments = {feed, feed};  // antipodal: both faces carry the same strip
    return out;
}

ArrayLayout build_array_layout(const ElementDims& dims_x, const ElementDims& dims_y,
                               int rows, int cols) {
    dims_x.validate();
    dims_y.validate();
    if (dims_x.polarization != Polarization::x || dims_y.polarization != Polarization::y)
        throw std::invalid_argument("build_array_layout expects x-pol dims then y-pol dims");
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("array rows and cols must be >= 1");

    ArrayLayout layout;
    layout.rows = rows;
    layout.cols = cols;
    layout.dims_x = dims_x;
    layout.dims_y = dims_y;
    layout.pitch_x = dims_x.pitch();
    layout.pitch_y = dims_y.pitch();

    // Isolated single element, no interleaving.
    if (rows == 1 && cols == 1) {
        layout.elements.push_back(Placement{0, dims_x.polarization, 0, 0, 0.0, 0.0,
                                            PcbSide::front});
        return layout;
    }

    // Concentric grids: the plane spacing of one family equals the lateral
    // pitch of the other, so every crossing passes through an element center.
    const auto centered = [](int idx, int count, double step) {
        return (static_cast<double>(idx) - (count - 1) / 2.0) * step;
    };

    int index = 0;
    for (Polarization pol : {Polarization::x, Polarization::y}) {
        const ElementDims& own = pol == Polarization::x ? dims_x : dims_y;
        const ElementDims& other = pol == Polarization::x ? dims_y : dims_x;
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                Placement e;
                e.element_index = index++;
                e.polarization = pol;
                e.row = r;
                e.col = c;
                e.plane_offset = centered(r, rows, other.pitch());
                e.lateral_offset = centered(c, cols, own.pitch());
                e.side = (c % 2 == 0) ? PcbSide::front : PcbSide::back;
                layout.elements.push_back(e);
            }
        }
    }

    // One slot per crossing: every PCB of one family is crossed by each plane
    // of the other. Slot width fits the crossing PCB (its substrate plus
    // clearance); the two families are slotted from opposite edges so they
    // mesh.
    for (Polarization host : {Polarization::x, Polarization::y}) {
        const ElementDims& host_dims = host == Polarization::x ? dims_x : dims_y;
        const ElementDims& crossing = host == Polarization::x ? dims_y : dims_x;
        for (int host_row = 0; host_row < rows; ++host_row) {
            for (int crossing_row = 0; crossing_row < rows; ++crossing_row) {
                SlotSpec s;
                s.host_polarization = host;
                s.host_row = host_row;
                s.position = centered(crossing_row, rows, host_dims.pitch());
                s.width = crossing.substrate_thickness + crossing.spacing_clearance;
                s.length = host_dims.element_height / 2.0;
                s.from_edge = host == Polarization::x ? SlotEdge::top : SlotEdge::bottom;
                layout.slots.push_back(s);
            }
        }
    }

    return layout;
}

}  // namespace tcva
