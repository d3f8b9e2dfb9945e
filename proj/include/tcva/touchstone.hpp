// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcva/common.hpp"

namespace tcva {

// Frequency sweep of complex N x N scattering matrices. Immutable in spirit:
// construct, validate, then read.
struct NPortNetwork {
    int ports = 0;
    double reference_impedance = 50.0;
    std::vector<std::string> port_labels;        // optional, size ports when present
    std::vector<double> frequencies_hz;          // strictly increasing, > 0
    std::vector<std::complex<double>> s;         // row-major N*N per frequency

    std::size_t points() const { return frequencies_hz.size(); }

    const std::complex<double>& at(std::size_t f_idx, int i, int j) const {
        return s[f_idx * ports * ports + static_cast<std::size_t>(i) * ports + j];
    }
    std::complex<double>& at(std::size_t f_idx, int i, int j) {
        return s[f_idx * ports * ports + static_cast<std::size_t>(i) * ports + j];
    }
    std::span<const std::complex<double>> matrix(std::size_t f_idx) const {
        return {s.data() + f_idx * ports * ports, static_cast<std::size_t>(ports) * ports};
    }

    // Throws std::invalid_argument on structural problems (dimension
    // mismatch, non-monotonic frequency, non-finite entries); returns
    // warnings for soft issues (|S| above 1 for a passive network).
    std::vector<std::string> validate() const;
};

enum class TouchstoneFormat { ri, ma, db };
enum class FrequencyUnit { hz, khz, mhz, ghz };

TouchstoneFormat parse_touchstone_format(const std::string& name);
double frequency_unit_scale(FrequencyUnit u);

struct TouchstoneParseResult {
    NPortNetwork network;
    std::vector<std::string> warnings;
};

// Touchstone v1.0 text. The port count cannot always be derived from the
// data, so it comes from the .sNp file extension or an explicit hint
// (nports_hint > 0). The 2-port column order quirk (S11 S21 S12 S22) is
// honored; Y/Z/H/G parameter files are rejected; v2.0 is out of scope.
TouchstoneParseResult parse_touchstone(std::string_view text, int nports_hint,
                                       const std::string& origin = "<memory>");

// Reads the file and infers N from the .sNp extension.
TouchstoneParseResult load_touchstone(const std::string& path);

// Emits Touchstone v1.0 with 12 significant digits, `R <z0>`, LF endings,
// and the 2-port column order quirk.
std::string write_touchstone(const NPortNetwork& n, TouchstoneFormat format,
                             FrequencyUnit unit = FrequencyUnit::ghz);

// Subnetwork restricted to `subset` (0-based, distinct, in range), keeping
// the subset order and all frequencies.
NPortNetwork select_ports(const NPortNetwork& n, std::span<const int> subset);

// Sidecar port map: classifies every port of a network by array position and
// polarization. CSV rows `port_index,row,col,polarization` with 1-based port
// indices on file (0-based in memory).
struct PortInfo {
    int row = 0;
    int col = 0;
    Polarization polarization = Polarization::x;
};

using PortMap = std::vector<PortInfo>;

PortMap parse_port_map(std::string_view text, int nports,
                       const std::string& origin = "<memory>");
PortMap load_port_map(const std::string& path, int nports);

}  // namespace tcva
