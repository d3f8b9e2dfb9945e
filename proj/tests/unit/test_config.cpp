// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "tcva/config.hpp"
#include "tcva/io_util.hpp"

using namespace tcva;

TEST_CASE("default config mirrors the prototype dimension table") {
    const ProjectConfig c = default_config();
    CHECK(c.taper_x.c_inner == doctest::Approx(0.03069));
    CHECK(c.dims_x.element_width == doctest::Approx(28.03));
    CHECK(c.dims_y.element_width == doctest::Approx(28.13));
    CHECK(c.dims_x.spacing_clearance == doctest::Approx(0.0));
    CHECK(c.dims_y.spacing_clearance == doctest::Approx(0.10));
    CHECK(c.dims_x.pitch() == doctest::Approx(24.13));
    CHECK(c.dims_y.pitch() == doctest::Approx(24.13));
    CHECK(c.rows == 3);
    CHECK(c.cols == 3);
}

TEST_CASE("config sections override defaults with flags intact") {
    const char* text =
        "# project file\n"
        "[element.x]\n"
        "w_ol = 3.5   ; tighter overlap\n"
        "[array]\n"
        "rows = 2\n"
        "cols = 5\n"
        "[analysis]\n"
        "touchstone = data/sweep.s6p\n"
        "thresholds = -6, -10, -14\n"
        "[output]\n"
        "dir = results\n";
    const ProjectConfig c = parse_config(text);
    CHECK(c.dims_x.overlap == doctest::Approx(3.5));
    CHECK(c.dims_y.overlap == doctest::Approx(4.0));  // untouched
    CHECK(c.rows == 2);
    CHECK(c.cols == 5);
    CHECK(c.touchstone_path == "data/sweep.s6p");
    REQUIRE(c.thresholds_db.size() == 3);
    CHECK(c.thresholds_db[2] == doctest::Approx(-14.0));
    CHECK(c.output_dir == "results");
}

TEST_CASE("shared taper section applies to both polarizations") {
    const char* text =
        "[taper]\n"
        "c_i = 0.04\n"
        "[taper.y]\n"
        "c_i = 0.05\n";
    const ProjectConfig c = parse_config(text);
    CHECK(c.taper_x.c_inner == doctest::Approx(0.04));
    CHECK(c.taper_y.c_inner == doctest::Approx(0.05));
}

TEST_CASE("unknown keys and malformed lines are rejected") {
    CHECK_THROWS_AS(parse_config("[element.x]\nbogus = 1\n"), parse_error);
    CHECK_THROWS_AS(parse_config("[nowhere]\nk = 1\n"), parse_error);
    CHECK_THROWS_AS(parse_config("[array]\nrows\n"), parse_error);
    CHECK_THROWS_AS(parse_config("[array]\nrows = many\n"), parse_error);
}

TEST_CASE("trace CSV round trip") {
    FrequencyTrace t;
    t.frequencies_hz = {1e9, 2.5e9, 17e9};
    t.values = {-3.25, -11.5, -0.875};
    const FrequencyTrace back = trace_from_csv(trace_to_csv(t));
    REQUIRE(back.frequencies_hz.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.frequencies_hz[i] == doctest::Approx(t.frequencies_hz[i]).epsilon(1e-9));
        CHECK(back.values[i] == doctest::Approx(t.values[i]).epsilon(1e-9));
    }
    CHECK_THROWS_AS(trace_from_csv("f_hz,value_db\n"), parse_error);
}

TEST_CASE("excitation CSV parsing") {
    const ExcitationVector e = parse_excitation_csv("port,real,imag\n2,0.5,-0.5\n", 3);
    CHECK(std::abs(e.amplitudes[0]) == 0.0);
    CHECK(e.amplitudes[1].real() == doctest::Approx(0.5));
    CHECK(e.amplitudes[1].imag() == doctest::Approx(-0.5));
    CHECK_THROWS_AS(parse_excitation_csv("9,1,0\n", 3), parse_error);
    CHECK_THROWS_AS(parse_excitation_csv("", 3), parse_error);
}
