// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "tcva/config.hpp"

namespace tcva::cli {

// Shared logging switch, set from TCVA_LOG (quiet|info|debug).
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

struct GeomOptions {
    std::string pol = "both";  // x, y or both
    std::vector<std::string> formats = {"svg", "csv"};
    std::string out_dir;
};

struct SnpOptions {
    std::string input;
    std::vector<int> ports;  // 1-based subset, empty = all
    std::string write_path;
    std::string data_format = "RI";
    std::string freq_unit = "GHz";
};

struct TarcOptions {
    std::string input;       // overrides config
    std::string portmap;     // overrides config
    std::string excitation;  // overrides config
    std::vector<std::string> pols;  // selected polarizations; empty = from excitation
    std::vector<double> thresholds;  // overrides config when non-empty
    std::string out_dir;
};

struct BandsOptions {
    std::string trace_path;
    std::vector<double> thresholds;
    std::string out_dir;
};

struct CouplingOptions {
    std::string input;
    std::string portmap;
    std::string out_dir;
};

struct PatternOptions {
    std::vector<double> frequencies_ghz;
    int count = 0;            // 0 = from config
    double spacing_mm = 0.0;  // 0 = from config
    double steering_deg = 0.0;
    std::string out_dir;
};

struct CompareOptions {
    std::string entries_path;
    std::string out_dir;
};

int run_geom(const ProjectConfig& cfg, const GeomOptions& opt);
int run_snp(const SnpOptions& opt);
int run_tarc(const ProjectConfig& cfg, const TarcOptions& opt);
int run_bands(const ProjectConfig& cfg, const BandsOptions& opt);
int run_coupling(const ProjectConfig& cfg, const CouplingOptions& opt);
int run_pattern(const ProjectConfig& cfg, const PatternOptions& opt);
int run_compare(const ProjectConfig& cfg, const CompareOptions& opt);

}  // namespace tcva::cli
