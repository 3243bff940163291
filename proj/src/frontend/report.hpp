// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "frontend/compute.hpp"

namespace compdesign::frontend {

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// Curves documents hold two tables; CSV export picks one.
enum class CurvesPanel { Survival, Sensitivity };

std::optional<CurvesPanel> parse_curves_panel(std::string_view name);

// Renders a document produced by compute(op, ...). Tables print effect
// measures with 4 decimals and sample sizes as integers; scalar results
// print as "[1] x" with 4 significant digits. JSON keeps full precision.
std::string render(Operation op, const json& doc, OutputFormat format, CurvesPanel panel = CurvesPanel::Survival);

// Shortest decimal text that reads back as the same double.
std::string shortest(double x);

}  // namespace compdesign::frontend
