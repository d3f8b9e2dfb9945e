// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "tcva/common.hpp"

namespace tcva {

// Edge taper coefficients of an antipodal Vivaldi leaf plus the feed line
// geometry. Lengths in mm, k_inner in 1/mm, k_outer in 1/mm^2.
//
// Inner (slot side) edge:  x = +-c_inner * exp(k_inner * y) -+ c_offset
// Outer (back) edge:       x = +-c_outer * exp(k_outer * y^2) +- c_base
// y is the flare coordinate measured from the feed junction.
struct TaperParams {
    double c_inner = 0.03069;
    double k_inner = 0.12585;
    double c_offset = 0.48535;
    double c_outer = 0.01024;
    double k_outer = 0.01058;
    double c_base = 0.44442;
    double feed_width = 0.909;   // w_f
    double feed_length = 4.000;  // l_f

    // Throws std::invalid_argument when a field is non-positive or the curve
    // origins are inconsistent with the feed line (both curves must start at
    // the feed edge: |c_offset - c_inner - feed_width/2| < 0.02 mm, and the
    // two origins must coincide in magnitude within 0.02 mm).
    void validate() const;

    // Signed x of the inner curve origin for the plus leaf: c_inner - c_offset.
    double inner_origin() const { return c_inner - c_offset; }
    // x of the outer curve origin for the plus leaf: c_outer + c_base.
    double outer_origin() const { return c_outer + c_base; }
};

// Element and board dimensions for one polarization, mm.
struct ElementDims {
    double element_width = 28.03;   // w_a
    double flare_height = 48.60;    // h
    double element_height = 56.56;  // h_b
    double antenna_pcb_width = 76.39;  // w  (metadata only, not used for outlines)
    double board_width = 120.0;     // w_b (metadata only)
    double overlap = 3.90;          // w_ol
    double spacing_clearance = 0.0;  // w_sp
    double substrate_thickness = 0.254;  // h_s
    Polarization polarization = Polarization::x;

    void validate() const;

    // Element-to-element pitch within a PCB.
    double pitch() const { return element_width - overlap; }
};

// Built-in parameter set of the reference prototype design.
TaperParams default_taper_params();
ElementDims default_element_dims(Polarization pol);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Closed polygon: front() == back(), no self intersection.
using Polygon = std::vector<Point>;

enum class CurveSign { plus, minus };

// Eq-style taper evaluation. y is the flare coordinate in mm, y >= 0
// (negative y throws std::domain_error). Strictly increasing in y for
// CurveSign::plus.
double eval_inner_curve(const TaperParams& p, double y, CurveSign sign);
double eval_outer_curve(const TaperParams& p, double y, CurveSign sign);

// Smallest y in [0, y_max] where the plus-sign curve reaches x_target, or
// y_max when the curve stays below it. Bisection to 1e-12 mm.
double inner_curve_height_at(const TaperParams& p, double x_target, double y_max);
double outer_curve_height_at(const TaperParams& p, double x_target, double y_max);

// One leaf (the +x copper fin) as a closed polygon in element-local
// coordinates: x = 0 on the element centerline, y = 0 at the feed edge of the
// element, aperture at y = element_height. The flare occupies
// y in [element_height - flare_height, element_height]; the feed strip
// (width feed_width) runs from the flare throat down to y = 0 so the copper
// reaches the board edge; the nominal feed line is its topmost feed_length mm.
// `resolution` is the per-curve sample count (>= 16).
Polygon build_leaf_outline(const TaperParams& p, const ElementDims& d, int resolution);

// Axis-aligned rectangle, used for feed segments and interleave slots.
struct Rect {
    double x_min = 0.0, y_min = 0.0, x_max = 0.0, y_max = 0.0;
    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
};

// Full antipodal element: two leaves mirrored about x = 0 (one per copper
// face) plus the nominal feed-line rectangles.
struct ElementOutline {
    std::array<Polygon, 2> leaves;        // [0] = +x leaf, [1] = mirrored -x leaf
    std::array<Rect, 2> feed_segments;    // nominal w_f x l_f per leaf
    TaperParams taper;
    ElementDims dims;
};

ElementOutline build_element(const TaperParams& p, const ElementDims& d,
                             int resolution = 256);

enum class PcbSide { front, back };
enum class SlotEdge { top, bottom };

struct Placement {
    int element_index = 0;
    Polarization polarization = Polarization::x;
    int row = 0;  // index of the hosting PCB plane
    int col = 0;  // index along the hosting PCB
    double plane_offset = 0.0;    // position of the PCB plane, mm
    double lateral_offset = 0.0;  // element position along the PCB, mm
    PcbSide side = PcbSide::front;
};

// Interleave slot cut into one hosting PCB so the perpendicular PCB of the
// other polarization can pass through it (egg-crate assembly). Width is
// substrate thickness + clearance of the crossing polarization; length is
// half the element height.
struct SlotSpec {
    Polarization host_polarization = Polarization::x;
    int host_row = 0;
    double position = 0.0;  // lateral position on the hosting PCB, mm
    double width = 0.0;
    double length = 0.0;
    SlotEdge from_edge = SlotEdge::top;
};

struct ArrayLayout {
    std::vector<Placement> elements;
    std::vector<SlotSpec> slots;
    int rows = 0;
    int cols = 0;
    double pitch_x = 0.0;
    double pitch_y = 0.0;
    ElementDims dims_x;
    ElementDims dims_y;
};

// Dual-polarized interleaved array: `rows` parallel PCBs per polarization,
// `cols` elements per PCB, the two PCB families perpendicular and concentric.
// Adjacent elements on a PCB alternate copper side. rows == cols == 1
// degenerates to a single isolated element (first argument's polarization)
// with no slots.
ArrayLayout build_array_layout(const ElementDims& dims_x, const ElementDims& dims_y,
                               int rows, int cols);

}  // namespace tcva
