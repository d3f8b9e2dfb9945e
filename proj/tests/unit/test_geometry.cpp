// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "tcva/geometry.hpp"

using namespace tcva;

namespace {

// Shoelace area of a closed polygon, independent of the construction code.
double polygon_area(const Polygon& poly) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
        acc += poly[i].x * poly[i + 1].y - poly[i + 1].x * poly[i].y;
    return std::abs(acc) / 2.0;
}

struct Box {
    double x_min = 1e300, y_min = 1e300, x_max = -1e300, y_max = -1e300;
};

Box bounding_box(const Polygon& poly) {
    Box b;
    for (const Point& v : poly) {
        b.x_min = std::min(b.x_min, v.x);
        b.y_min = std::min(b.y_min, v.y);
        b.x_max = std::max(b.x_max, v.x);
        b.y_max = std::max(b.y_max, v.y);
    }
    return b;
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
    const auto cross = [](Point o, Point p, Point q) {
        return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
    };
    const double d1 = cross(c, d, a), d2 = cross(c, d, b);
    const double d3 = cross(a, b, c), d4 = cross(a, b, d);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

// Brute-force O(n^2) simplicity check on non-adjacent edges.
bool is_simple(const Polygon& poly) {
    const std::size_t n = poly.size() - 1;  // closed ring
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;  // first and last edge share the ring closure vertex
            if (segments_intersect(poly[i], poly[i + 1], poly[j], poly[j + 1]))
                return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("taper curve origins reproduce the prototype values") {
    const TaperParams p = default_taper_params();
    // Direct substitution of the coefficient table at y = 0.
    CHECK(eval_inner_curve(p, 0.0, CurveSign::plus) == doctest::Approx(-0.45466).epsilon(1e-9));
    CHECK(eval_outer_curve(p, 0.0, CurveSign::plus) == doctest::Approx(0.45466).epsilon(1e-9));
    // Both curves start at the same |x|, at the feed-line edge.
    CHECK(std::abs(p.inner_origin() + p.outer_origin()) < 1e-5);
    CHECK(std::abs((p.c_offset - p.c_inner) - p.feed_width / 2.0) < 0.02);
}

TEST_CASE("curve sign symmetry and domain errors") {
    const TaperParams p = default_taper_params();
    for (double y : {0.0, 1.0, 17.3, 48.0}) {
        CHECK(eval_inner_curve(p, y, CurveSign::plus) ==
              -eval_inner_curve(p, y, CurveSign::minus));
        CHECK(eval_outer_curve(p, y, CurveSign::plus) ==
              -eval_outer_curve(p, y, CurveSign::minus));
    }
    CHECK_THROWS_AS(eval_inner_curve(p, -1e-9, CurveSign::plus), std::domain_error);
    CHECK_THROWS_AS(eval_outer_curve(p, -0.5, CurveSign::plus), std::domain_error);
}

TEST_CASE("curves reach the element half-width at the expected heights") {
    const TaperParams p = default_taper_params();
    const double half_width = 28.03 / 2.0;
    // Independent closed-form inversion of the two taper laws.
    const double y_inner = std::log((half_width + p.c_offset) / p.c_inner) / p.k_inner;
    const double y_outer = std::sqrt(std::log((half_width - p.c_base) / p.c_outer) / p.k_outer);
    CHECK(y_inner == doctest::Approx(48.931).epsilon(1e-3));
    CHECK(y_outer == doctest::Approx(26.068).epsilon(1e-3));
    CHECK(eval_inner_curve(p, y_inner, CurveSign::plus) ==
          doctest::Approx(half_width).epsilon(1e-9));
    CHECK(eval_outer_curve(p, y_outer, CurveSign::plus) ==
          doctest::Approx(half_width).epsilon(1e-9));
    // Bisection agrees with the closed form.
    CHECK(inner_curve_height_at(p, half_width, 60.0) == doctest::Approx(y_inner).epsilon(1e-9));
    CHECK(outer_curve_height_at(p, half_width, 60.0) == doctest::Approx(y_outer).epsilon(1e-9));
}

TEST_CASE("taper curves are strictly increasing") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uy(0.0, 50.0);
    const TaperParams p = default_taper_params();
    for (int trial = 0; trial < 200; ++trial) {
        double y1 = uy(rng), y2 = uy(rng);
        if (y1 == y2)
            continue;
        if (y1 > y2)
            std::swap(y1, y2);
        CHECK(eval_inner_curve(p, y2, CurveSign::plus) > eval_inner_curve(p, y1, CurveSign::plus));
        CHECK(eval_outer_curve(p, y2, CurveSign::plus) > eval_outer_curve(p, y1, CurveSign::plus));
    }
}

TEST_CASE("leaf outline is closed, simple, and correctly bounded") {
    const TaperParams p = default_taper_params();
    const ElementDims d = default_element_dims(Polarization::x);
    const Polygon leaf = build_leaf_outline(p, d, 256);

    REQUIRE(leaf.size() >= 4);
    CHECK(leaf.front().x == leaf.back().x);
    CHECK(leaf.front().y == leaf.back().y);
    CHECK(is_simple(leaf));

    // One leaf spans from the inner curve origin to the clipped element edge.
    const Box b = bounding_box(leaf);
    CHECK(b.x_max == doctest::Approx(28.03 / 2.0).epsilon(1e-9));
    CHECK(b.x_min == doctest::Approx(-0.45466).epsilon(1e-6));
    CHECK(b.x_max - b.x_min == doctest::Approx(14.46966).epsilon(1e-6));
    CHECK(b.y_min == doctest::Approx(0.0));
    CHECK(b.y_max == doctest::Approx(56.56).epsilon(1e-12));

    // Inside the element clip box.
    for (const Point& v : leaf) {
        CHECK(v.x >= -d.element_width / 2.0 - 1e-12);
        CHECK(v.x <= d.element_width / 2.0 + 1e-12);
        CHECK(v.y >= -1e-12);
        CHECK(v.y <= d.element_height + 1e-12);
    }

    // Flare tip at the aperture: between the inner curve end and the element
    // edge (the inner curve stays below the clip up to h for these values).
    const double inner_at_h = eval_inner_curve(p, d.flare_height, CurveSign::plus);
    CHECK(inner_at_h == doctest::Approx(13.4230).epsilon(1e-4));
    double tip_min = 1e300, tip_max = -1e300;
    for (const Point& v : leaf) {
        if (std::abs(v.y - d.element_height) < 1e-9) {
            tip_min = std::min(tip_min, v.x);
            tip_max = std::max(tip_max, v.x);
        }
    }
    CHECK(tip_min == doctest::Approx(inner_at_h).epsilon(1e-9));
    CHECK(tip_max == doctest::Approx(d.element_width / 2.0).epsilon(1e-9));
}

TEST_CASE("leaf outline respects the minimum resolution and converges") {
    const TaperParams p = default_taper_params();
    const ElementDims d = default_element_dims(Polarization::y);

    const Polygon coarse = build_leaf_outline(p, d, 16);
    CHECK(coarse.front().x == coarse.back().x);
    CHECK(coarse.front().y == coarse.back().y);
    CHECK(is_simple(coarse));
    CHECK_THROWS_AS(build_leaf_outline(p, d, 15), std::invalid_argument);

    // Area converges as the tessellation doubles; successive refinement
    // deltas shrink and the coarsest estimate is already within 0.5 %.
    std::vector<double> areas;
    for (int res : {16, 32, 64, 128, 256, 512, 1024})
        areas.push_back(polygon_area(build_leaf_outline(p, d, res)));
    for (std::size_t i = 2; i < areas.size(); ++i) {
        const double prev_delta = std::abs(areas[i - 1] - areas[i - 2]);
        const double delta = std::abs(areas[i] - areas[i - 1]);
        CHECK(delta <= prev_delta + 1e-12);
    }
    const double final_area = areas.back();
    CHECK(std::abs(areas[0] - final_area) / final_area < 0.005);
    CHECK(std::abs(areas[areas.size() - 2] - final_area) / final_area < 0.005);
}

TEST_CASE("impossible taper parameters raise geometry errors") {
    const ElementDims d = default_element_dims(Polarization::x);
    TaperParams p = default_taper_params();
    // A steep inner taper overtakes the outer edge: the leaf self-intersects.
    p.k_inner = 2.0;
    CHECK_THROWS_AS(build_leaf_outline(p, d, 64), geometry_error);
}

TEST_CASE("element outline mirrors exactly and spans the element box") {
    const TaperParams p = default_taper_params();
    const ElementDims d = default_element_dims(Polarization::y);
    const ElementOutline el = build_element(p, d);

    REQUIRE(el.leaves[0].size() == el.leaves[1].size());
    for (std::size_t i = 0; i < el.leaves[0].size(); ++i) {
        CHECK(std::abs(el.leaves[0][i].x + el.leaves[1][i].x) < 1e-9);
        CHECK(std::abs(el.leaves[0][i].y - el.leaves[1][i].y) < 1e-9);
    }

    Box b0 = bounding_box(el.leaves[0]);
    Box b1 = bounding_box(el.leaves[1]);
    const double x_min = std::min(b0.x_min, b1.x_min);
    const double x_max = std::max(b0.x_max, b1.x_max);
    const double y_max = std::max(b0.y_max, b1.y_max);
    CHECK(x_max - x_min == doctest::Approx(28.13).epsilon(1e-9));
    CHECK(y_max == doctest::Approx(56.56).epsilon(1e-12));  // total element height h_b

    // Antipodal feed: the two nominal feed segments coincide in plan view
    // with overlap width w_f.
    const Rect& f0 = el.feed_segments[0];
    const Rect& f1 = el.feed_segments[1];
    const double overlap = std::min(f0.x_max, f1.x_max) - std::max(f0.x_min, f1.x_min);
    CHECK(overlap == doctest::Approx(p.feed_width).epsilon(1e-12));
    CHECK(f0.width() == doctest::Approx(p.feed_width).epsilon(1e-12));
    CHECK(f0.height() == doctest::Approx(p.feed_length).epsilon(1e-12));
}

TEST_CASE("array layout: pitch, alternation, slots") {
    const ElementDims dx = default_element_dims(Polarization::x);
    const ElementDims dy = default_element_dims(Polarization::y);
    const ArrayLayout layout = build_array_layout(dx, dy, 3, 3);

    CHECK(layout.pitch_x == doctest::Approx(24.13).epsilon(1e-12));
    CHECK(layout.pitch_y == doctest::Approx(24.13).epsilon(1e-12));
    CHECK(std::abs(layout.pitch_x - 24.1) < 0.05);
    CHECK(std::abs(layout.pitch_y - 24.1) < 0.05);
    CHECK(layout.elements.size() == 18);

    for (const Placement& e : layout.elements) {
        // Lateral offsets sit on the pitch grid.
        const double pitch = e.polarization == Polarization::x ? layout.pitch_x : layout.pitch_y;
        const double steps = e.lateral_offset / pitch;
        CHECK(std::abs(steps - std::round(steps)) < 1e-9);
        // Adjacent elements on a PCB alternate sides.
        for (const Placement& other : layout.elements) {
            if (other.polarization == e.polarization && other.row == e.row &&
                other.col == e.col + 1)
                CHECK(other.side != e.side);
        }
    }

    // Concentric grids: x-pol plane offsets coincide with y-pol lateral grid.
    for (const Placement& e : layout.elements) {
        if (e.polarization != Polarization::x)
            continue;
        bool found = false;
        for (const Placement& o : layout.elements) {
            if (o.polarization == Polarization::y &&
                std::abs(o.lateral_offset - e.plane_offset) < 1e-9 &&
                std::abs(o.plane_offset - e.lateral_offset) < 1e-9)
                found = true;
        }
        CHECK(found);
    }

    // 3 slots per PCB, 9 per polarization family.
    CHECK(layout.slots.size() == 18);
    for (const SlotSpec& s : layout.slots) {
        CHECK(s.length == doctest::Approx(56.56 / 2.0).epsilon(1e-12));
        if (s.host_polarization == Polarization::x) {
            // Slot passes the y-pol PCB: width h_s + w_sp of y.
            CHECK(s.width == doctest::Approx(0.254 + 0.10).epsilon(1e-12));
            CHECK(s.from_edge == SlotEdge::top);
        } else {
            CHECK(s.width == doctest::Approx(0.254 + 0.00).epsilon(1e-12));
            CHECK(s.from_edge == SlotEdge::bottom);
        }
    }
}

TEST_CASE("degenerate 1x1 layout is a single element without slots") {
    const ArrayLayout layout = build_array_layout(default_element_dims(Polarization::x),
                                                  default_element_dims(Polarization::y), 1, 1);
    CHECK(layout.elements.size() == 1);
    CHECK(layout.slots.empty());
    CHECK(layout.elements[0].side == PcbSide::front);
    CHECK(layout.elements[0].lateral_offset == 0.0);
}

TEST_CASE("invalid overlap is rejected") {
    ElementDims dx = default_element_dims(Polarization::x);
    dx.overlap = dx.element_width;  // pitch would be zero
    CHECK_THROWS_AS(build_array_layout(dx, default_element_dims(Polarization::y), 3, 3),
                    std::invalid_argument);
}

TEST_CASE("dimension invariants are validated") {
    ElementDims d = default_element_dims(Polarization::x);
    d.flare_height = d.element_height + 1.0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);

    TaperParams p = default_taper_params();
    p.c_offset = 2.0;  // origin consistency broken
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = default_taper_params();
    p.c_inner = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
