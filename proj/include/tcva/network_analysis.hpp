// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tcva/common.hpp"
#include "tcva/touchstone.hpp"

namespace tcva {

// Incident-wave coefficients, one per port. Scale is immaterial for TARC
// (which is normalized by the total incident power) but the vector must not
// be all-zero.
struct ExcitationVector {
    std::vector<std::complex<double>> amplitudes;
};

// Frequency series of a scalar quantity, dB unless flagged.
struct FrequencyTrace {
    std::vector<double> frequencies_hz;
    std::vector<double> values;
    bool values_in_db = true;
};

// Total active reflection coefficient: per frequency compute b = S a and
// sqrt(sum |b_i|^2 / sum |a_i|^2). tarc() reports it in dB (20 log10, floored
// at kDbFloor); tarc_linear() returns the linear values.
std::vector<double> tarc_linear(const NPortNetwork& n, const ExcitationVector& e);
FrequencyTrace tarc(const NPortNetwork& n, const ExcitationVector& e);

// Active reflection coefficient of one port under simultaneous excitation:
// Gamma_port = (sum_j S_pj a_j) / a_port, reported as 20 log10 |Gamma|.
// a_port == 0 is an error: the quantity is undefined, and silently returning
// zero would hide port-map mistakes.
FrequencyTrace active_reflection(const NPortNetwork& n, const ExcitationVector& e, int port);

// Uniform equi-phase excitation of the centre-row ports of one polarization
// (amplitude 1/sqrt(count) on those ports, 0 elsewhere). Requires an odd
// number of distinct rows for that polarization.
ExcitationVector centre_row_equiphase(const PortMap& map, Polarization pol);

struct BandInterval {
    double f_low = 0.0;
    double f_high = 0.0;
};

// Maximal frequency intervals where the trace is at or below threshold_db.
// Crossings are located by linear interpolation in (frequency, dB); intervals
// are clipped to the trace span. Requires at least two points.
std::vector<BandInterval> band_edges(const FrequencyTrace& t, double threshold_db);

enum class CouplingCategory { adjacent_co_pol, non_adjacent_co_pol, cross_pol };

const char* to_string(CouplingCategory c);

// Pair classification: same polarization and unit row/col separation is
// adjacent; same polarization otherwise non-adjacent; different polarization
// is cross-pol.
CouplingCategory classify_pair(const PortInfo& a, const PortInfo& b);

struct CouplingExtreme {
    double level_db = kDbFloor;
    double frequency_hz = 0.0;
    int port_i = -1;  // 0-based; -1 when the category has no pairs
    int port_j = -1;
};

struct PairTrace {
    int port_i = 0;
    int port_j = 0;
    CouplingCategory category = CouplingCategory::cross_pol;
    FrequencyTrace trace;
};

struct CouplingReport {
    CouplingExtreme adjacent_co_pol;
    CouplingExtreme non_adjacent_co_pol;
    CouplingExtreme cross_pol;
    std::vector<PairTrace> pairs;  // ordered pairs i != j
};

CouplingReport coupling_report(const NPortNetwork& n, const PortMap& map);

// Scalar match conversions.
double vswr_to_gamma(double vswr);             // (VSWR-1)/(VSWR+1), vswr >= 1
double gamma_to_vswr(double gamma_mag);        // (1+|G|)/(1-|G|), 0 <= |G| < 1
double mismatch_loss_db(double gamma_mag);     // 10 log10(1-|G|^2), <= 0
double realized_gain_db(double gain_db, double gamma_mag);  // gain + mismatch loss

}  // namespace tcva
