#include <doctest.h>

#include <zetaquant/report.hpp>

#include <cmath>
#include <limits>

using namespace zetaquant;

namespace {

Report sample() {
    Report r;
    r.command = "gamma";
    r.inputs = {{"terms", 1000}, {"points", "0.5,2+1i"}};
    r.rows.push_back(checked_row("Gamma(0.5)", 1.7724538509055159, 1.7724538509055160, 1e-5));
    r.rows.push_back(absolute_row("zero", Complex(-0.0, 0.0), 0.0, 0.0));
    r.rows.push_back(info_row("tail", std::numeric_limits<double>::infinity()));
    r.rows.push_back(flag_row("ok", true));
    r.details["moduli"] = {1.7320508075688772, 0.1};
    return r;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("pass is the conjunction of checked rows") {
    Report r = sample();
    CHECK(r.pass());
    r.rows.push_back(checked_row("bad", 2.0, 1.0, 0.5));
    CHECK_FALSE(r.pass());
    r.rows.back().checked = false;
    CHECK(r.pass());
}

TEST_CASE("relative discrepancy") {
    CHECK(relative_discrepancy(1.1, 1.0) == doctest::Approx(0.1));
    CHECK(relative_discrepancy(0.25, 0.0) == 0.25);
    CHECK(flag_row("x", false).discrepancy > flag_row("x", false).tolerance);
}

TEST_CASE("JSON round-trips byte for byte") {
    const std::string first = render_json(sample());
    const Report back = report_from_json(nlohmann::json::parse(first));
    CHECK(render_json(back) == first);
    CHECK(first.find(":-0,") == std::string::npos);
    CHECK(first.find(":-0}") == std::string::npos);
    CHECK(first.find("null") != std::string::npos);
    CHECK(first.find("runtime_ms") == std::string::npos);

    Report timed = sample();
    timed.runtime_ms = 12.5;
    const std::string t = render_json(timed);
    CHECK(t.find("\"runtime_ms\":12.5") != std::string::npos);
    CHECK(render_json(report_from_json(nlohmann::json::parse(t))) == t);
}

TEST_CASE("canonical dump sorts keys and uses %.15g") {
    const nlohmann::json j = {{"b", 0.1}, {"a", 1.0 / 3.0}, {"c", {{"z", 1}, {"y", -0.0}}}};
    CHECK(canonical_dump(j) == R"({"a":0.333333333333333,"b":0.1,"c":{"y":0,"z":1}})");
}

TEST_CASE("CSV columns") {
    const std::string csv = render_csv(sample());
    CHECK(csv.rfind("label,re,im,oracle_re,oracle_im,disc\n", 0) == 0);
    CHECK(csv.find("Gamma(0.5),1.77245385090552,0,1.77245385090552,0,") != std::string::npos);
    CHECK(csv.find("tail,inf,0,,,") != std::string::npos);
}

}
