#include <zetaquant/report.hpp>

#include <cmath>
#include <limits>
#include <cstdio>

namespace zetaquant {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

double number_from(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

Complex complex_from(const json& j) { return {number_from(j.at("re")), number_from(j.at("im"))}; }

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void dump(const json& j, std::string& out) {
    switch (j.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += json(it.key()).dump();
            out += ':';
            dump(it.value(), out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ',';
            dump(j[i], out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float:
        out += format_double(j.get<double>());
        break;
    default:
        out += j.dump();
    }
}

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return format_double(v);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

bool Report::pass() const noexcept {
    for (const auto& r : rows) {
        if (!r.pass()) return false;
    }
    return true;
}

double relative_discrepancy(Complex value, Complex oracle) {
    if (oracle == Complex(0.0)) return std::abs(value);
    return std::abs(value / oracle - 1.0);
}

ReportRow checked_row(std::string label, Complex value, Complex oracle, double tol) {
    ReportRow r;
    r.label = std::move(label);
    r.value = value;
    r.oracle = oracle;
    r.discrepancy = relative_discrepancy(value, oracle);
    if (std::isnan(r.discrepancy)) r.discrepancy = INFINITY;
    r.tolerance = tol;
    r.checked = true;
    return r;
}

ReportRow absolute_row(std::string label, Complex value, Complex oracle, double tol) {
    ReportRow r = checked_row(std::move(label), value, oracle, tol);
    r.discrepancy = std::abs(value - oracle);
    if (std::isnan(r.discrepancy)) r.discrepancy = INFINITY;
    return r;
}

ReportRow flag_row(std::string label, bool ok) {
    ReportRow r;
    r.label = std::move(label);
    r.value = ok ? 1.0 : 0.0;
    r.discrepancy = ok ? 0.0 : 1.0;
    r.tolerance = 0.0;
    r.checked = true;
    return r;
}

ReportRow info_row(std::string label, Complex value) {
    ReportRow r;
    r.label = std::move(label);
    r.value = value;
    return r;
}

json to_json(const Report& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{
            {"label", row.label},
            {"value", complex_json(row.value)},
            {"oracle", row.oracle ? complex_json(*row.oracle) : json(nullptr)},
            {"discrepancy", row.discrepancy},
            {"tolerance", row.tolerance},
            {"checked", row.checked},
            {"pass", row.pass()},
        });
    }
    json out{
        {"command", r.command}, {"inputs", r.inputs}, {"rows", rows}, {"details", r.details}, {"pass", r.pass()},
    };
    if (r.runtime_ms) out["runtime_ms"] = *r.runtime_ms;
    return out;
}

Report report_from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.details = j.value("details", json::object());
    if (j.contains("runtime_ms")) r.runtime_ms = j.at("runtime_ms").get<double>();
    for (const auto& row : j.at("rows")) {
        ReportRow x;
        x.label = row.at("label").get<std::string>();
        x.value = complex_from(row.at("value"));
        if (!row.at("oracle").is_null()) x.oracle = complex_from(row.at("oracle"));
        const auto& d = row.at("discrepancy");
        x.discrepancy = d.is_null() ? INFINITY : d.get<double>();
        const auto& t = row.at("tolerance");
        x.tolerance = t.is_null() ? INFINITY : t.get<double>();
        x.checked = row.at("checked").get<bool>();
        r.rows.push_back(std::move(x));
    }
    return r;
}

std::string canonical_dump(const json& j) {
    std::string out;
    dump(j, out);
    return out;
}

std::string render_json(const Report& r) { return canonical_dump(to_json(r)); }

std::string render_csv(const Report& r) {
    std::string out = "label,re,im,oracle_re,oracle_im,disc\n";
    for (const auto& row : r.rows) {
        out += csv_field(row.label) + ',' + csv_number(row.value.real()) + ',' + csv_number(row.value.imag()) + ',';
        if (row.oracle) {
            out += csv_number(row.oracle->real()) + ',' + csv_number(row.oracle->imag());
        } else {
            out += ',';
        }
        out += ',' + (row.oracle || row.checked ? csv_number(row.discrepancy) : std::string());
        out += '\n';
    }
    return out;
}

} // namespace zetaquant
