// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcva {

// Exact SI value, m/s.
inline constexpr double kSpeedOfLight = 299792458.0;

// Linear magnitudes below this floor are reported as kDbFloor instead of -inf
// so that traces stay plottable and comparable.
inline constexpr double kDbFloorLinear = 1e-12;
inline constexpr double kDbFloor = -240.0;

// 20*log10 for field quantities (|S|, |Gamma|), floored at kDbFloor.
inline double to_db20(double linear) {
    if (!(linear > kDbFloorLinear))
        return kDbFloor;
    return 20.0 * std::log10(linear);
}

// 10*log10 for power quantities, floored consistently with to_db20.
inline double to_db10(double power) {
    if (!(power > kDbFloorLinear * kDbFloorLinear))
        return kDbFloor;
    return 10.0 * std::log10(power);
}

inline double from_db20(double db) { return std::pow(10.0, db / 20.0); }

enum class Polarization { x, y };

inline const char* to_string(Polarization p) { return p == Polarization::x ? "x" : "y"; }

inline Polarization parse_polarization(const std::string& s) {
    if (s == "x" || s == "X")
        return Polarization::x;
    if (s == "y" || s == "Y")
        return Polarization::y;
    throw std::invalid_argument("unknown polarization '" + s + "' (expected x or y)");
}

// Invalid or unconstructible geometry (curves that miss the clip box,
// inconsistent dimensions, ...).
class geometry_error : public std::runtime_error {
public:
    explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. Message carries file name and line where known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem / OS level failure, distinct from validation errors for exit codes.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tcva
