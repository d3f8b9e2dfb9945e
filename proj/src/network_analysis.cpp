// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tcva/network_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tcva/kernels.hpp"

namespace tcva {

namespace {

void check_excitation(const NPortNetwork& n, const ExcitationVector& e) {
    if (e.amplitudes.size() != static_cast<std::size_t>(n.ports))
        throw std::invalid_argument("excitation vector has " +
                                    std::to_string(e.amplitudes.size()) + " entries for a " +
                                    std::to_string(n.ports) + "-port network");
    double power = 0.0;
    for (const auto& a : e.amplitudes)
        power += std::norm(a);
    if (!(power > 0.0))
        throw std::invalid_argument("excitation vector must not be all-zero");
}

}  // namespace

std::vector<double> tarc_linear(const NPortNetwork& n, const ExcitationVector& e) {
    check_excitation(n, e);
    const auto& k = kernels::active_kernels();
    const std::size_t nf = n.points();
    const std::size_t np = static_cast<std::size_t>(n.ports);

    std::vector<std::complex<double>> b(nf * np);
    k.complex_matvec_sweep(n.s.data(), nf, np, e.amplitudes.data(), b.data());

    std::vector<double> b_sq(nf * np);
    k.magnitude_sq(b.data(), b.size(), b_sq.data());

    double incident = 0.0;
    for (const auto& a : e.amplitudes)
        incident += std::norm(a);

    std::vector<double> out(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        double reflected = 0.0;
        for (std::size_t i = 0; i < np; ++i)
            reflected += b_sq[f * np + i];
        out[f] = std::sqrt(reflected / incident);
    }
    return out;
}

FrequencyTrace tarc(const NPortNetwork& n, const ExcitationVector& e) {
    FrequencyTrace t;
    t.frequencies_hz = n.frequencies_hz;
    const std::vector<double> lin = tarc_linear(n, e);
    t.values.reserve(lin.size());
    for (double v : lin)
        t.values.push_back(to_db20(v));
    return t;
}

FrequencyTrace active_reflection(const NPortNetwork& n, const ExcitationVector& e, int port) {
    check_excitation(n, e);
    if (port < 0 || port >= n.ports)
        throw std::invalid_argument("port index out of range");
    const std::complex<double> a_port = e.amplitudes[static_cast<std::size_t>(port)];
    if (std::norm(a_port) == 0.0)
        throw std::invalid_argument("active reflection is undefined for an unexcited port (a = 0)");

    FrequencyTrace t;
    t.frequencies_hz = n.frequencies_hz;
    t.values.reserve(n.points());
    for (std::size_t f = 0; f < n.points(); ++f) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < n.ports; ++j)
            acc += n.at(f, port, j) * e.amplitudes[static_cast<std::size_t>(j)];
        t.values.push_back(to_db20(std::abs(acc / a_port)));
    }
    return t;
}

ExcitationVector centre_row_equiphase(const PortMap& map, Polarization pol) {
    std::set<int> rows;
    for (const PortInfo& p : map)
        if (p.polarization == pol)
            rows.insert(p.row);
    if (rows.empty())
        throw std::invalid_argument(std::string("port map has no ") + to_string(pol) +
                                    "-polarized ports");
    if (rows.size() % 2 == 0)
        throw std::invalid_argument("centre-row excitation needs an odd number of rows; port map has " +
                                    std::to_string(rows.size()));
    const int centre = *std::next(rows.begin(), static_cast<long>(rows.size() / 2));

    ExcitationVector e;
    e.amplitudes.assign(map.size(), {0.0, 0.0});
    std::size_t count = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i].polarization == pol && map[i].row == centre)
            ++count;
    const double amp = 1.0 / std::sqrt(static_cast<double>(count));
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i].polarization == pol && map[i].row == centre)
            e.amplitudes[i] = {amp, 0.0};
    return e;
}

std::vector<BandInterval> band_edges(const FrequencyTrace& t, double threshold_db) {
    if (t.frequencies_hz.size() != t.values.size())
        throw std::invalid_argument("trace frequency/value lengths differ");
    if (t.frequencies_hz.size() < 2)
        throw std::invalid_argument("band edge extraction needs at least two trace points");

    std::vector<BandInterval> intervals;
    const auto& f = t.frequencies_hz;
    const auto& v = t.values;

    bool inside = v[0] <= threshold_db;
    double start = inside ? f[0] : 0.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const bool below = v[i] <= threshold_db;
        if (below == inside)
            continue;
        // Linear interpolation of the crossing in (frequency, dB).
        const double cross = f[i - 1] + (threshold_db - v[i - 1]) / (v[i] - v[i - 1]) *
                                            (f[i] - f[i - 1]);
        if (below) {
            start = cross;
        } else {
            intervals.push_back({start, cross});
        }
        inside = below;
    }
    if (inside)
        intervals.push_back({start, f.back()});
    return intervals;
}

const char* to_string(CouplingCategory c) {
    switch (c) {
        case CouplingCategory::adjacent_co_pol: return "adjacent_co_pol";
        case CouplingCategory::non_adjacent_co_pol: return "non_adjacent_co_pol";
        case CouplingCategory::cross_pol: return "cross_pol";
    }
    return "?";
}

CouplingCategory classify_pair(const PortInfo& a, const PortInfo& b) {
    if (a.polarization != b.polarization)
        return CouplingCategory::cross_pol;
    const int dr = std::abs(a.row - b.row);
    const int dc = std::abs(a.col - b.col);
    if (dr + dc == 1)
        return CouplingCategory::adjacent_co_pol;
    return CouplingCategory::non_adjacent_co_pol;
}

CouplingReport coupling_report(const NPortNetwork& n, const PortMap& map) {
    if (map.size() != static_cast<std::size_t>(n.ports))
        throw std::invalid_argument("port map has " + std::to_string(map.size()) +
                                    " entries for a " + std::to_string(n.ports) +
                                    "-port network");
    const auto& k = kernels::active_kernels();

    CouplingReport report;
    std::vector<std::complex<double>> sweep(n.points());
    std::vector<double> mag_sq(n.points());

    for (int i = 0; i < n.ports; ++i) {
        for (int j = 0; j < n.ports; ++j) {
            if (i == j)
                continue;
            const CouplingCategory cat = classify_pair(map[static_cast<std::size_t>(i)],
                                                       map[static_cast<std::size_t>(j)]);
            for (std::size_t f = 0; f < n.points(); ++f)
                sweep[f] = n.at(f, i, j);
            k.magnitude_sq(sweep.data(), sweep.size(), mag_sq.data());

            PairTrace pair;
            pair.port_i = i;
            pair.port_j = j;
            pair.category = cat;
            pair.trace.frequencies_hz = n.frequencies_hz;
            pair.trace.values.reserve(n.points());

            CouplingExtreme& ext = cat == CouplingCategory::adjacent_co_pol
                                       ? report.adjacent_co_pol
                                       : cat == CouplingCategory::non_adjacent_co_pol
                                             ? report.non_adjacent_co_pol
                                             : report.cross_pol;
            for (std::size_t f = 0; f < n.points(); ++f) {
                const double db = to_db20(std::sqrt(mag_sq[f]));
                pair.trace.values.push_back(db);
                if (ext.port_i < 0 || db > ext.level_db) {
                    ext.level_db = db;
                    ext.frequency_hz = n.frequencies_hz[f];
                    ext.port_i = i;
                    ext.port_j = j;
                }
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

double vswr_to_gamma(double vswr) {
    if (!(vswr >= 1.0))
        throw std::domain_error("VSWR must be >= 1");
    return (vswr - 1.0) / (vswr + 1.0);
}

double gamma_to_vswr(double gamma_mag) {
    if (!(gamma_mag >= 0.0) || gamma_mag >= 1.0)
        throw std::domain_error("|Gamma| must be in [0, 1)");
    return (1.0 + gamma_mag) / (1.0 - gamma_mag);
}

double mismatch_loss_db(double gamma_mag) {
    if (!(gamma_mag >= 0.0) || gamma_mag >= 1.0)
        throw std::domain_error("|Gamma| must be in [0, 1)");
    return 10.0 * std::log10(1.0 - gamma_mag * gamma_mag);
}

double realized_gain_db(double gain_db, double gamma_mag) {
    return gain_db + mismatch_loss_db(gamma_mag);
}

}  // namespace tcva
