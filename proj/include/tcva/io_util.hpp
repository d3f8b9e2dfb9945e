// Copyright (c) tcva contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "tcva/common.hpp"
#include "tcva/network_analysis.hpp"

namespace tcva {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

// Report-style number formatting: %.6g with '.' decimal separator.
std::string format_num(double v);

// Trace CSV: header `f_hz,value_db` then one row per point.
std::string trace_to_csv(const FrequencyTrace& t);
FrequencyTrace trace_from_csv(std::string_view text, const std::string& origin = "<memory>");
FrequencyTrace load_trace(const std::string& path);

// Excitation CSV rows `port,real,imag` (1-based ports), or the named preset
// `centre-row-equiphase:<pol>` resolved against a port map.
ExcitationVector parse_excitation_csv(std::string_view text, int nports,
                                      const std::string& origin = "<memory>");

}  // namespace tcva
