// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/array_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tcva/kernels.hpp"

namespace tcva {

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0))
        throw std::domain_error("frequency must be positive");
    return kSpeedOfLight / frequency_hz;
}

double spacing_in_wavelengths(double spacing_m, double frequency_hz) {
    if (!(spacing_m > 0.0))
        throw std::domain_error("element spacing must be positive");
    return spacing_m / wavelength(frequency_hz);
}

void ArraySpec::validate() const {
    if (count < 1)
        throw std::invalid_argument("array element count must be >= 1");
    if (!(spacing_m > 0.0))
        throw std::invalid_argument("element spacing must be positive");
    if (!std::isfinite(steering_rad_per_element))
        throw std::invalid_argument("steering phase must be finite");
}

ArrayFactor broadside_af(const ArraySpec& spec, double frequency_hz) {
    spec.validate();
    const double lin = 2.0 * spec.count * spec.spacing_m / wavelength(frequency_hz);
    return {lin, 10.0 * std::log10(lin)};
}

double scaled_gain_db(double realized_gain_db, const ArraySpec& spec, double frequency_hz) {
    return realized_gain_db - broadside_af(spec, frequency_hz).db;
}

std::vector<double> array_factor_magnitudes(const ArraySpec& spec, double frequency_hz,
                                            std::span<const double> angles_deg) {
    spec.validate();
    const double k_d = 2.0 * std::numbers::pi * spec.spacing_m / wavelength(frequency_hz);

    // Base phasor per angle; the element sum is a geometric series evaluated
    // by the planar kernel.
    const std::size_t count = angles_deg.size();
    std::vector<double> zr(count), zi(count), sr(count), si(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double psi = k_d * std::sin(angles_deg[i] * std::numbers::pi / 180.0) +
                           spec.steering_rad_per_element;
        zr[i] = std::cos(psi);
        zi[i] = std::sin(psi);
    }
    kernels::active_kernels().phasor_series_sum(zr.data(), zi.data(), count, spec.count,
                                                sr.data(), si.data());
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = std::hypot(sr[i], si[i]);
    return out;
}

PatternCut uniform_array_pattern(const ArraySpec& spec, double frequency_hz,
                                 const PatternCut* element_pattern, double step_deg) {
    if (!(step_deg > 0.0) || step_deg > 1.0)
        throw std::invalid_argument("angle grid step must be in (0, 1] degrees");

    PatternCut cut;
    const int half = static_cast<int>(std::lround(90.0 / step_deg));
    if (2 * half + 1 < 181)
        throw std::invalid_argument("angle grid must have at least 181 points");
    cut.angles_deg.reserve(static_cast<std::size_t>(2 * half) + 1);
    for (int i = -half; i <= half; ++i)
        cut.angles_deg.push_back(i * step_deg);

    if (element_pattern) {
        if (element_pattern->angles_deg.size() != cut.angles_deg.size())
            throw std::invalid_argument("element pattern angle grid does not match cut grid");
        for (std::size_t i = 0; i < cut.angles_deg.size(); ++i)
            if (std::abs(element_pattern->angles_deg[i] - cut.angles_deg[i]) > 1e-9)
                throw std::invalid_argument("element pattern angle grid does not match cut grid");
    }

    const std::vector<double> mags = array_factor_magnitudes(spec, frequency_hz, cut.angles_deg);
    cut.values_db.reserve(mags.size());
    for (std::size_t i = 0; i < mags.size(); ++i) {
        double db = to_db20(mags[i]);
        if (element_pattern)
            db += element_pattern->values_db[i];
        cut.values_db.push_back(db);
    }
    const double peak = *std::max_element(cut.values_db.begin(), cut.values_db.end());
    for (double& v : cut.values_db)
        v -= peak;
    return cut;
}

double grating_lobe_onset(double spacing_m) {
    if (!(spacing_m > 0.0))
        throw std::domain_error("element spacing must be positive");
    return kSpeedOfLight / spacing_m;
}

}  // namespace tcva
