// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: geometry generation and S-parameter post-processing
// for tightly-coupled dual-polarized Vivaldi arrays.
//
// Exit codes: 0 success, 1 usage/validation error, 2 I/O error.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tcva/io_util.hpp"

using namespace tcva;

int main(int argc, char** argv) {
    CLI::App app{"Tightly-coupled Vivaldi array toolkit: parametric antenna geometry "
                 "and multi-port S-parameter analysis"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    app.add_option("--config", config_path, "Project config file (key = value sections)")
        ->configurable(false);

    cli::GeomOptions geom;
    int rows_override = 0, cols_override = 0;
    auto* cmd_geom = app.add_subcommand("geom", "Generate element and array outlines");
    cmd_geom->add_option("--pol", geom.pol, "Polarization: x, y or both")->default_str("both");
    cmd_geom->add_option("--format", geom.formats, "Output formats: svg, csv, dxf (repeatable)")->delimiter(',');
    cmd_geom->add_option("--out", geom.out_dir, "Output directory");
    cmd_geom->add_option("--rows", rows_override, "Array rows override");
    cmd_geom->add_option("--cols", cols_override, "Array cols override");

    cli::SnpOptions snp;
    auto* cmd_snp = app.add_subcommand("snp", "Inspect or convert a Touchstone file");
    cmd_snp->add_option("--in", snp.input, "Touchstone .sNp input")->required();
    cmd_snp->add_option("--ports", snp.ports, "1-based port subset to keep")->delimiter(',');
    cmd_snp->add_option("--write", snp.write_path, "Write the (converted) network here");
    cmd_snp->add_option("--data-format", snp.data_format, "RI, MA or DB")->default_str("RI");
    cmd_snp->add_option("--freq-unit", snp.freq_unit, "Hz, kHz, MHz or GHz")->default_str("GHz");

    cli::TarcOptions tarc;
    auto* cmd_tarc = app.add_subcommand("tarc", "Total active reflection coefficient and band edges");
    cmd_tarc->add_option("--in", tarc.input, "Touchstone .sNp input");
    cmd_tarc->add_option("--portmap", tarc.portmap, "Port map CSV");
    cmd_tarc->add_option("--excitation", tarc.excitation,
                         "Excitation CSV or preset centre-row-equiphase:<pol>");
    cmd_tarc->add_option("--pol", tarc.pols, "Polarization preset shorthand (repeatable)")->delimiter(',');
    cmd_tarc->add_option("--threshold", tarc.thresholds, "Band threshold in dB (repeatable)")->delimiter(',');
    cmd_tarc->add_option("--out", tarc.out_dir, "Output directory");

    cli::BandsOptions bands;
    auto* cmd_bands = app.add_subcommand("bands", "Band edges of a trace CSV");
    cmd_bands->add_option("--trace", bands.trace_path, "Trace CSV (f_hz,value_db)")->required();
    cmd_bands->add_option("--threshold", bands.thresholds, "Band threshold in dB (repeatable)")->delimiter(',');
    cmd_bands->add_option("--out", bands.out_dir, "Output directory");

    cli::CouplingOptions coupling;
    auto* cmd_coupling = app.add_subcommand("coupling", "Coupling category report");
    cmd_coupling->add_option("--in", coupling.input, "Touchstone .sNp input");
    cmd_coupling->add_option("--portmap", coupling.portmap, "Port map CSV");
    cmd_coupling->add_option("--out", coupling.out_dir, "Output directory");

    cli::PatternOptions pattern;
    auto* cmd_pattern = app.add_subcommand("pattern", "Uniform array pattern cuts");
    cmd_pattern->add_option("--freq", pattern.frequencies_ghz, "Frequency in GHz (repeatable)")->delimiter(',');
    cmd_pattern->add_option("--n", pattern.count, "Elements per row");
    cmd_pattern->add_option("--spacing-mm", pattern.spacing_mm, "Element spacing in mm");
    cmd_pattern->add_option("--steering-deg", pattern.steering_deg,
                            "Progressive phase per element, degrees");
    cmd_pattern->add_option("--out", pattern.out_dir, "Output directory");

    cli::CompareOptions compare;
    auto* cmd_compare = app.add_subcommand("compare", "Scaled-gain comparison table");
    cmd_compare->add_option("--entries", compare.entries_path,
                            "CSV label,n,d_mm,f_ghz,gain_dbi[,vswr]");
    cmd_compare->add_option("--out", compare.out_dir, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        ProjectConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
        if (rows_override > 0)
            cfg.rows = rows_override;
        if (cols_override > 0)
            cfg.cols = cols_override;
        const auto out_or = [&cfg](const std::string& dir) {
            return dir.empty() ? cfg.output_dir : dir;
        };

        if (cmd_geom->parsed()) {
            geom.out_dir = out_or(geom.out_dir);
            return cli::run_geom(cfg, geom);
        }
        if (cmd_snp->parsed())
            return cli::run_snp(snp);
        if (cmd_tarc->parsed()) {
            tarc.out_dir = out_or(tarc.out_dir);
            return cli::run_tarc(cfg, tarc);
        }
        if (cmd_bands->parsed()) {
            bands.out_dir = out_or(bands.out_dir);
            return cli::run_bands(cfg, bands);
        }
        if (cmd_coupling->parsed()) {
            coupling.out_dir = out_or(coupling.out_dir);
            return cli::run_coupling(cfg, coupling);
        }
        if (cmd_pattern->parsed()) {
            pattern.out_dir = out_or(pattern.out_dir);
            return cli::run_pattern(cfg, pattern);
        }
        if (cmd_compare->parsed()) {
            compare.out_dir = out_or(compare.out_dir);
            return cli::run_compare(cfg, compare);
        }
        std::cerr << "error: no subcommand selected\n";
        return 1;
    } catch (const io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
