#pragma once

// Verification reports: rows of (value, oracle, discrepancy, tolerance),
// serialized as canonical JSON (sorted keys, %.15g floats) or as CSV.

#include <zetaquant/factors.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace zetaquant {

struct ReportRow {
    std::string label;
    Complex value{0.0, 0.0};
    std::optional<Complex> oracle;
    double discrepancy = 0.0;
    double tolerance = 0.0;
    /// Unchecked rows are informational and never fail.
    bool checked = false;

    bool pass() const noexcept { return !checked || discrepancy <= tolerance; }
};

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<ReportRow> rows;
    /// Structured extras (recognized polynomials, moduli, ...).
    nlohmann::json details = nlohmann::json::object();
    /// Omitted from the output when unset, which keeps runs comparable byte for byte.
    std::optional<double> runtime_ms;

    bool pass() const noexcept;
};

/// |value / oracle - 1|, or |value - oracle| when the oracle is 0.
double relative_discrepancy(Complex value, Complex oracle);

ReportRow checked_row(std::string label, Complex value, Complex oracle, double tol);
/// Checked row whose discrepancy is |value - oracle|.
ReportRow absolute_row(std::string label, Complex value, Complex oracle, double tol);
/// Checked pass/fail row: value 1 when ok, discrepancy 0 or 1 against tolerance 0.
ReportRow flag_row(std::string label, bool ok);
ReportRow info_row(std::string label, Complex value);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Compact JSON with sorted keys and %.15g numbers; non-finite numbers become null.
std::string canonical_dump(const nlohmann::json& j);

std::string render_json(const Report& r);
/// Columns: label,re,im,oracle_re,oracle_im,disc.
std::string render_csv(const Report& r);

} // namespace zetaquant
