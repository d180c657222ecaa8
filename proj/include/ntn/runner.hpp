#pragma once

#include "ntn/config.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace ntn {

struct ResultRow {
    std::string sweep_param;            // empty when not sweeping
    std::optional<double> sweep_value;  // field units, as configured
    std::optional<double> p_out_analytic;
    std::optional<double> p_out_mc;
    std::optional<double> mc_ci95;      // half width of the 95% interval
    double runtime_ms = 0.0;
};

// Executes the configured modes; one row per sweep value (one row total when
// not sweeping).
std::vector<ResultRow> run(const RunConfig& cfg);

// CSV with a '#'-prefixed metadata block, a fixed header and %.12g values.
// Absent values render as empty fields.
void emit_csv(std::ostream& os, const RunConfig& cfg, const std::vector<ResultRow>& rows);

} // namespace ntn
