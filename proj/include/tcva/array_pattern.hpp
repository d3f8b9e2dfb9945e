// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "tcva/common.hpp"

namespace tcva {

double wavelength(double frequency_hz);                       // c0 / f, m
double spacing_in_wavelengths(double spacing_m, double frequency_hz);  // d / lambda

// Uniform linear array along one row: element count, spacing and progressive
// steering phase (0 = broadside).
struct ArraySpec {
    int count = 1;
    double spacing_m = 0.0;
    double steering_rad_per_element = 0.0;

    void validate() const;
};

struct ArrayFactor {
    double linear = 0.0;
    double db = 0.0;
};

// Broadside array factor 2 N d / lambda, used to normalize gains of arrays of
// different sizes. Applied exactly as defined, including below-unity values
// (negative dB) at low frequencies.
ArrayFactor broadside_af(const ArraySpec& spec, double frequency_hz);

// realized gain minus the broadside array factor in dB.
double scaled_gain_db(double realized_gain_db, const ArraySpec& spec, double frequency_hz);

// Principal plane cut on a uniform angle grid, peak-normalized to 0 dB.
struct PatternCut {
    std::vector<double> angles_deg;
    std::vector<double> values_db;
    std::string plane = "E";
};

// Unnormalized |sum_n exp(j n (2 pi d sin(theta) / lambda + steering))| for
// each angle; the broadside value is exactly the element count.
std::vector<double> array_factor_magnitudes(const ArraySpec& spec, double frequency_hz,
                                            std::span<const double> angles_deg);

// Array-factor cut over [-90, 90] degrees at `step_deg` resolution,
// peak-normalized. With an element pattern supplied (same grid required) the
// two are multiplied (added in dB) before normalization.
PatternCut uniform_array_pattern(const ArraySpec& spec, double frequency_hz,
                                 const PatternCut* element_pattern = nullptr,
                                 double step_deg = 0.25);

// Lowest frequency with a real-angle grating lobe at broadside: d = lambda.
double grating_lobe_onset(double spacing_m);

}  // namespace tcva
