// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tcva/array_pattern.hpp"

using namespace tcva;

TEST_CASE("wavelength and spacing ratios reproduce the published operating points") {
    CHECK(wavelength(3e9) == doctest::Approx(0.0999308193).epsilon(1e-9));
    CHECK(spacing_in_wavelengths(0.024, 3e9) == doctest::Approx(0.240).epsilon(0.005 / 0.240));
    CHECK(spacing_in_wavelengths(0.024, 20e9) == doctest::Approx(1.60).epsilon(0.01 / 1.60));
    CHECK(spacing_in_wavelengths(0.02413, 6.2e9) == doctest::Approx(0.50).epsilon(0.005 / 0.50));
    CHECK_THROWS_AS(wavelength(0.0), std::domain_error);
    CHECK_THROWS_AS(spacing_in_wavelengths(-0.01, 1e9), std::domain_error);
}

TEST_CASE("broadside array factor arithmetic") {
    const ArraySpec spec{3, 0.02413, 0.0};
    const ArrayFactor af3 = broadside_af(spec, 3e9);
    CHECK(af3.linear == doctest::Approx(1.4488022910836535).epsilon(1e-12));
    CHECK(af3.db == doctest::Approx(1.6100912408416432).epsilon(1e-12));
    const ArrayFactor af62 = broadside_af(spec, 6.2e9);
    CHECK(af62.linear == doctest::Approx(2.994191401572884).epsilon(1e-12));
    CHECK(af62.db == doctest::Approx(4.762795588627558).epsilon(1e-12));

    // Unity case: one element at half-wavelength spacing.
    const double f = 10e9;
    const ArraySpec one{1, wavelength(f) / 2.0, 0.0};
    CHECK(broadside_af(one, f).linear == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(broadside_af(one, f).db == doctest::Approx(0.0));

    // Below-unity values stay unclamped.
    CHECK(broadside_af(ArraySpec{1, 0.005, 0.0}, 3e9).db < 0.0);
}

TEST_CASE("broadside AF is strictly increasing in N, d and f") {
    const ArraySpec base{3, 0.024, 0.0};
    CHECK(broadside_af(ArraySpec{4, 0.024, 0.0}, 5e9).linear >
          broadside_af(base, 5e9).linear);
    CHECK(broadside_af(ArraySpec{3, 0.025, 0.0}, 5e9).linear >
          broadside_af(base, 5e9).linear);
    CHECK(broadside_af(base, 6e9).linear > broadside_af(base, 5e9).linear);
}

TEST_CASE("scaled gain subtracts the array factor") {
    const ArraySpec spec{3, 0.02413, 0.0};
    const double af_db = broadside_af(spec, 6.2e9).db;
    CHECK(scaled_gain_db(af_db, spec, 6.2e9) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(scaled_gain_db(7.0, spec, 6.2e9) ==
          doctest::Approx(7.0 - 4.762795588627558).epsilon(1e-12));
}

TEST_CASE("single-element pattern is flat zero dB") {
    const PatternCut cut = uniform_array_pattern(ArraySpec{1, 0.024, 0.0}, 10e9);
    for (double v : cut.values_db)
        CHECK(v == 0.0);
}

TEST_CASE("broadside pattern: peak N, even symmetry, expected nulls") {
    const double f = 10e9;
    const ArraySpec spec{3, wavelength(f) / 2.0, 0.0};  // d = lambda/2
    const std::vector<double> angles{-60.0, -41.810314895778596, -10.0, 0.0, 10.0,
                                     41.810314895778596, 60.0};
    const std::vector<double> mags = array_factor_magnitudes(spec, f, angles);

    // Unnormalized broadside peak equals the element count.
    CHECK(mags[3] == doctest::Approx(3.0).epsilon(1e-15));
    // Nulls of the N=3 uniform array at sin(theta) = +-2/3.
    CHECK(mags[1] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(mags[5] == doctest::Approx(0.0).epsilon(1e-9));
    // Even symmetry.
    CHECK(mags[0] == mags[6]);
    CHECK(mags[2] == mags[4]);

    const PatternCut cut = uniform_array_pattern(spec, f);
    const double peak = *std::max_element(cut.values_db.begin(), cut.values_db.end());
    CHECK(peak == 0.0);  // exact after normalization
    for (std::size_t i = 0; i < cut.angles_deg.size() / 2; ++i)
        CHECK(cut.values_db[i] ==
              cut.values_db[cut.values_db.size() - 1 - i]);  // exact mirror
}

TEST_CASE("grating lobes appear at sin(theta) = lambda/d for d = 1.6 lambda") {
    const double f = 20e9;
    const double d = 1.6 * wavelength(f);
    const PatternCut cut = uniform_array_pattern(ArraySpec{3, d, 0.0}, f);

    const double expected = std::asin(1.0 / 1.6) * 180.0 / std::numbers::pi;  // 38.682 deg
    // Find local maxima at full amplitude (0 dB) besides broadside.
    std::vector<double> peak_angles;
    for (std::size_t i = 1; i + 1 < cut.values_db.size(); ++i) {
        if (cut.values_db[i] >= cut.values_db[i - 1] &&
            cut.values_db[i] >= cut.values_db[i + 1] && cut.values_db[i] > -0.01)
            peak_angles.push_back(cut.angles_deg[i]);
    }
    REQUIRE(peak_angles.size() >= 3);
    bool has_pos = false, has_neg = false;
    for (double a : peak_angles) {
        if (std::abs(a - expected) <= 0.25)
            has_pos = true;
        if (std::abs(a + expected) <= 0.25)
            has_neg = true;
    }
    CHECK(has_pos);
    CHECK(has_neg);
}

TEST_CASE("grating lobe onset frequency") {
    CHECK(grating_lobe_onset(0.02413) == doctest::Approx(12.42405544964774e9).epsilon(1e-12));
    CHECK(grating_lobe_onset(0.015) == doctest::Approx(19.98616386666667e9).epsilon(1e-12));
    // d = lambda(f0) maps back to f0.
    const double f0 = 7.3e9;
    CHECK(grating_lobe_onset(wavelength(f0)) == doctest::Approx(f0).epsilon(1e-15));
    CHECK_THROWS_AS(grating_lobe_onset(0.0), std::domain_error);
}

TEST_CASE("pattern multiplication adds element pattern in dB before normalization") {
    const double f = 10e9;
    const ArraySpec spec{3, wavelength(f) / 2.0, 0.0};
    PatternCut iso = uniform_array_pattern(ArraySpec{1, 0.01, 0.0}, f);
    // Tilted synthetic element pattern: linear ramp in dB across angle.
    for (std::size_t i = 0; i < iso.values_db.size(); ++i)
        iso.values_db[i] = -0.01 * iso.angles_deg[i];
    const PatternCut combined = uniform_array_pattern(spec, f, &iso);
    const PatternCut bare = uniform_array_pattern(spec, f);
    // Combined pattern is no longer symmetric and still peaks at 0 dB.
    CHECK(*std::max_element(combined.values_db.begin(), combined.values_db.end()) == 0.0);
    CHECK(combined.values_db.front() != combined.values_db.back());
    CHECK(bare.values_db.front() == bare.values_db.back());

    // Mismatched grid is rejected.
    PatternCut wrong;
    wrong.angles_deg = {0.0, 1.0};
    wrong.values_db = {0.0, 0.0};
    CHECK_THROWS_AS(uniform_array_pattern(spec, f, &wrong), std::invalid_argument);
}

TEST_CASE("null and grating positions match the closed-form grating condition") {
    // Dense-grid brute force against sin(theta) = m lambda / d.
    const double f = 18e9;
    const double lambda = wavelength(f);
    const double d = 1.3 * lambda;
    const PatternCut cut = uniform_array_pattern(ArraySpec{4, d, 0.0}, f, nullptr, 0.05);
    for (int m : {-1, 1}) {
        const double target = std::asin(m * lambda / d) * 180.0 / std::numbers::pi;
        double best_angle = 0.0, best_value = -1e9;
        for (std::size_t i = 0; i < cut.angles_deg.size(); ++i) {
            if (std::abs(cut.angles_deg[i] - target) < 3.0 && cut.values_db[i] > best_value) {
                best_value = cut.values_db[i];
                best_angle = cut.angles_deg[i];
            }
        }
        CHECK(std::abs(best_angle - target) <= 0.05);  // within one grid step
        CHECK(best_value > -1e-3);  // full-amplitude lobe up to grid quantization
    }
}
