// zetaquant: command-line driver. Every subcommand prints one report
// (JSON or CSV) and exits 0 when all checked rows pass, 1 when a check
// fails, 2 on usage or input errors.

#include <zetaquant/bergman.hpp>
#include <zetaquant/dense_oracles.hpp>
#include <zetaquant/errors.hpp>
#include <zetaquant/ffcurves.hpp>
#include <zetaquant/recon.hpp>
#include <zetaquant/regdet.hpp>
#include <zetaquant/report.hpp>
#include <zetaquant/special.hpp>
#include <zetaquant/verify.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace zetaquant;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s, std::string_view whole) {
    double v = 0.0;
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    const char* first = s.data() + (s.front() == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("not a number: " + std::string(whole));
    return v;
}

/// Accepts "a", "bi", "a+bi", "a-bi" (j also allowed for i).
Complex parse_complex(std::string s) {
    std::erase(s, ' ');
    if (s.empty()) throw UsageError("empty complex value");
    const std::string whole = s;
    const char last = s.back();
    if (last != 'i' && last != 'j') return {parse_real(s, whole), 0.0};
    s.pop_back();
    // split at the last sign that is not an exponent sign or the leading sign
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    if (cut == std::string::npos) return {0.0, parse_real(s, whole)};
    return {parse_real(std::string_view(s).substr(0, cut), whole),
            parse_real(std::string_view(s).substr(cut), whole)};
}

std::vector<Complex> parse_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::string label_of(Complex z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

struct Common {
    std::string format = "json";
    double tol = -1.0;  // < 0: the subcommand default
    bool no_timing = false;
    std::uint64_t seed = 20260417;

    double tolerance(double fallback) const { return tol >= 0.0 ? tol : fallback; }
};

struct Args {
    Common common;
    double alpha = 0.5;
    int order = 1;
    std::size_t terms = 0;
    std::string points;
    std::string zeros;
    std::string curve;
    std::string diag;
    std::string diag_file;
    std::string z = "1";
    std::string fixture = "sinc";
    std::size_t prime_bound = 10000;
    std::string fixtures = ZETAQUANT_FIXTURE_DIR;
    double kappa = 0.0;
};

std::filesystem::path zeros_file(const Args& a) {
    return a.zeros.empty() ? std::filesystem::path(a.fixtures) / "zeta_zeros_100k.txt" : std::filesystem::path(a.zeros);
}

Report cmd_regdet(const Args& a) {
    std::vector<Complex> diag;
    if (!a.diag.empty()) diag = parse_list(a.diag);
    if (!a.diag_file.empty()) {
        std::ifstream in(a.diag_file);
        if (!in) throw UsageError("cannot open " + a.diag_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line.front() == '#') continue;
            diag.push_back(parse_complex(line));
        }
    }
    if (diag.empty()) throw UsageError("regdet needs --diag or --diag-file");
    const Complex z = parse_complex(a.z);
    TailModel tail = FiniteTail{};
    if (a.kappa > 0.0) tail = PowerLawTail{a.kappa};
    const DiagonalOperator op = from_diagonal(diag, tail);

    RegDetRequest req;
    req.order = a.order;
    req.z = z;
    if (a.terms > 0) req.truncation = a.terms;
    const DetResult d = det_p(op, req);

    Report r;
    r.command = "regdet";
    r.inputs = {{"entries", diag.size()}, {"order", a.order}, {"z", complex_json(z)}};
    if (a.kappa > 0.0) r.inputs["kappa"] = a.kappa;
    if (std::holds_alternative<FiniteTail>(tail) && diag.size() <= static_cast<std::size_t>(kOracleDimBound)) {
        DenseMatrix<double> A = DenseMatrix<double>::Zero(static_cast<Eigen::Index>(diag.size()),
                                                          static_cast<Eigen::Index>(diag.size()));
        for (std::size_t i = 0; i < diag.size(); ++i) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
        const Complex dense = matrix_det_p_routes(A, a.order, -z).lhs;
        r.rows.push_back(checked_row("det_" + std::to_string(a.order) + "(I - zD)", d.value, dense, a.common.tolerance(1e-12)));
    } else {
        r.rows.push_back(info_row("det_" + std::to_string(a.order) + "(I - zD)", d.value));
    }
    r.details["tail_estimate"] = d.tail_estimate;
    if (d.zero_index) r.details["zero_index"] = *d.zero_index;
    return r;
}

Report cmd_bergman(const Args& a) {
    const std::size_t N = a.terms > 0 ? a.terms : 2000;
    const int k_max = a.order > 1 ? a.order : 20;
    const BergmanParams params(a.alpha);
    Report r;
    r.command = "bergman";
    r.inputs = {{"alpha", a.alpha}, {"terms", N}, {"k_max", k_max}};
    const double tol = a.common.tolerance(1e-6);
    for (std::size_t n = 0; n <= 10; ++n) {
        r.rows.push_back(checked_row("||z^" + std::to_string(n) + "||^2 vs quadrature", weight_norm_sq(n, a.alpha),
                                     weight_norm_sq_quadrature(n, a.alpha, 1e-10), tol));
    }
    const Eigen::VectorXd g = shift_weights(params, std::min<std::size_t>(N, 1001));
    double worst = 0.0;
    for (Eigen::Index n = 0; n < g.size(); ++n) {
        worst = std::max(worst, std::abs(shift_weight_from_norms(params, static_cast<std::size_t>(n)) / g[n] - 1.0));
    }
    ReportRow routes = flag_row("gamma_n: Gamma ratio vs norm ratio", true);
    routes.value = worst;
    routes.discrepancy = worst;
    routes.tolerance = 1e-12;
    r.rows.push_back(routes);
    if (N >= 10000) {
        r.rows.push_back(absolute_row("log-log slope of gamma_n on [N/10, N]",
                                      gamma_asymptotic_fit(params, N / 10, N), 1.0 - 1.0 / a.alpha, 0.03));
    }
    const ShiftTruncation tr(params, N);
    const NormCheckReport nc = truncation_norm_checks(tr, k_max);
    for (int k = 1; k <= k_max; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        ReportRow row = flag_row("||T^" + std::to_string(k) + "|| <= bound", nc.power_norms[i] <= nc.bounds[i]);
        row.value = nc.power_norms[i];
        row.oracle = nc.bounds[i];
        r.rows.push_back(row);
    }
    r.details["root_norms"] = nc.root_norms;
    r.details["root_norms_decreasing"] = nc.root_norms_decreasing;
    const std::vector<Complex> cubic{1.0, 2.0, -1.0, 0.5};
    const TranslationReport t = translation_check(tr, Complex(2.0, 1.0), cubic);
    ReportRow tr_row = flag_row("exp(-sT) f = f(z - s), s = 2+i", true);
    tr_row.value = t.max_discrepancy;
    tr_row.discrepancy = t.max_discrepancy;
    tr_row.tolerance = 1e-10;
    r.rows.push_back(tr_row);
    const BergmanIdealReport cls = bergman_ideal_class(params, 3);
    r.details["slope"] = cls.slope;
    r.details["p_star"] = cls.cls.p_star ? json(*cls.cls.p_star) : json(nullptr);
    return r;
}

Report cmd_gamma(const Args& a) {
    const std::size_t N = a.terms > 0 ? a.terms : 1000000;
    const auto pts = parse_list(a.points.empty() ? "0.5,1,1.5,2+1i" : a.points);
    const DiagonalOperator op = gamma_operator(N);
    Report r;
    r.command = "gamma";
    r.inputs = {{"terms", N}, {"points", a.points}};
    for (Complex z : pts) {
        const ReconResult v = gamma_reconstruct(z, op);
        r.rows.push_back(checked_row("Gamma(" + label_of(z) + ")", v.value, gamma_oracle(z), a.common.tolerance(1e-5)));
    }
    return r;
}

Report cmd_xi(const Args& a) {
    const ZeroDataset data = load_zero_dataset(zeros_file(a));
    const std::size_t N = a.terms > 0 ? a.terms : data.count();
    const auto pts = parse_list(a.points.empty() ? "0.5,1,2,3,0.5+1i,0.5+5i" : a.points);
    const DiagonalOperator op = xi_operator(data, N);
    Report r;
    r.command = "xi";
    r.inputs = {{"terms", N}, {"points", a.points}, {"zeros", zeros_file(a).filename().string()}};
    for (Complex s : pts) {
        const ReconResult v = xi_reconstruct(s, op);
        r.rows.push_back(checked_row("xi(" + label_of(s) + ")", v.value, xi_oracle(s), a.common.tolerance(1e-3)));
        r.details["tail_estimates"].push_back(v.tail_estimate);
    }
    return r;
}

Report cmd_zeta(const Args& a) {
    const ZeroDataset data = load_zero_dataset(zeros_file(a));
    const std::size_t N = a.terms > 0 ? a.terms : data.count();
    const auto pts = parse_list(a.points.empty() ? "2,3,0,-1" : a.points);
    const DiagonalOperator xi_op = xi_operator(data, N);
    const DiagonalOperator gamma_op = gamma_operator(1000000);
    Report r;
    r.command = "zeta";
    r.inputs = {{"terms", N}, {"gamma_terms", 1000000}, {"points", a.points},
                {"zeros", zeros_file(a).filename().string()}};
    for (Complex s : pts) {
        const ReconResult v = zeta_reconstruct(s, xi_op, gamma_op);
        r.rows.push_back(checked_row("zeta(" + label_of(s) + ")", v.value, zeta_oracle(s), a.common.tolerance(2e-3)));
    }
    return r;
}

Report cmd_euler(const Args& a) {
    const auto pts = parse_list(a.points.empty() ? "2,3" : a.points);
    Report r;
    r.command = "euler";
    r.inputs = {{"prime_bound", a.prime_bound}, {"points", a.points}};
    for (Complex s : pts) {
        r.rows.push_back(checked_row("prod_p (1 - p^-s)^-1 at s=" + label_of(s), euler_product_det(s, a.prime_bound),
                                     zeta_oracle(s), a.common.tolerance(5e-5)));
    }
    return r;
}

Report cmd_hadamard(const Args& a) {
    HadamardData data;
    std::function<Complex(Complex)> oracle;
    std::string name;
    if (a.fixture == "sinc") {
        data = sinc_fixture(a.terms > 0 ? a.terms : 1000000);
        oracle = sinc_oracle;
        name = "sin(pi z)/(pi z)";
    } else if (a.fixture == "linear") {
        data = linear_fixture(false);
        oracle = [](Complex z) { return 1.0 - z; };
        name = "1 - z";
    } else if (a.fixture == "linear-exp") {
        data = linear_fixture(true);
        oracle = [](Complex z) { return std::exp(z) * (1.0 - z); };
        name = "e^z (1 - z)";
    } else {
        throw UsageError("unknown fixture '" + a.fixture + "' (sinc, linear, linear-exp)");
    }
    const auto pts = parse_list(a.points.empty() ? "0.5,1.5,2.5i" : a.points);
    const DiagonalOperator op = from_zeros(data.zeros, data.tail);
    Report r;
    r.command = "hadamard";
    r.inputs = {{"fixture", a.fixture}, {"zeros", data.zeros.expanded_size()}, {"points", a.points}};
    for (Complex z : pts) {
        const ReconResult v = hadamard_reconstruct(data, op, z);
        r.rows.push_back(checked_row(name + " at z=" + label_of(z), v.value, oracle(z), a.common.tolerance(1e-5)));
    }
    return r;
}

json bigints(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.convert_to<long long>());
    return out;
}

Report cmd_curve(const Args& a) {
    if (a.curve.empty()) throw UsageError("curve-zeta needs --curve FILE");
    const PlaneCurve curve = load_curve(a.curve);
    const unsigned M = a.terms > 0 ? static_cast<unsigned>(a.terms) : 4;
    const LocalZeta lz = local_zeta(curve, M);
    Report r;
    r.command = "curve-zeta";
    r.inputs = {{"curve", std::filesystem::path(a.curve).filename().string()}, {"q", curve.q()}, {"terms", M},
                {"seed", a.common.seed}};
    r.details["counts"] = bigints(lz.counts);
    r.details["numerator"] = bigints(lz.numerator);
    r.details["genus"] = lz.genus;
    const WeilReport w = weil_rh_check(lz, a.common.tolerance(1e-12));
    r.details["moduli"] = w.moduli;
    ReportRow rh = flag_row("|alpha| = sqrt(q) for every inverse root", w.pass);
    rh.value = w.max_rel_deviation;
    r.rows.push_back(rh);
    r.rows.push_back(flag_row("Weil bound for n <= " + std::to_string(M), weil_bound_holds(lz)));
    r.rows.push_back(flag_row("functional equation of P", functional_equation_holds(lz)));
    std::vector<Complex> pts;
    if (!a.points.empty()) {
        pts = parse_list(a.points);
    } else {
        std::mt19937_64 rng(a.common.seed);
        std::uniform_real_distribution<double> re(1.5, 3.0), im(-10.0, 10.0);
        for (int i = 0; i < 5; ++i) {
            const double x = re(rng);
            pts.emplace_back(x, im(rng));
        }
    }
    for (Complex s : pts) {
        const CurveZetaValue v = curve_zeta_det_form(lz, s);
        r.rows.push_back(checked_row("Z(s) det form at s=" + label_of(s), v.value, v.direct, 1e-10));
    }
    return r;
}

Report cmd_verify_all(const Args& a) {
    VerifyOptions opts;
    opts.fixture_dir = a.fixtures;
    opts.seed = a.common.seed;
    if (!a.zeros.empty()) opts.zero_file = a.zeros;
    Report r;
    r.command = "verify-all";
    r.inputs = {{"seed", opts.seed}};
    for (const Criterion& c : acceptance_criteria()) {
        const Report sub = run_criterion(c.id, opts);
        const std::string prefix = "[" + std::to_string(c.id) + "] ";
        for (ReportRow row : sub.rows) {
            row.label = prefix + row.label;
            r.rows.push_back(std::move(row));
        }
        r.details["criteria"][std::to_string(c.id)] = {{"title", c.title}, {"pass", sub.pass()}};
    }
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetaquant: operator determinants and zeta reconstructions"};
    app.require_subcommand(1);
    Args a;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", a.common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tol", a.common.tol, "override the default tolerance");
        sub->add_option("--seed", a.common.seed, "seed for randomized inputs");
        sub->add_flag("--no-timing", a.common.no_timing, "omit runtime_ms");
        sub->add_option("--fixtures", a.fixtures, "fixture directory");
    };
    auto points = [&](CLI::App* sub) { sub->add_option("--points", a.points, "comma-separated complex points"); };

    auto* regdet = app.add_subcommand("regdet", "det_p(I - zD) of a diagonal operator");
    regdet->add_option("--diag", a.diag, "comma-separated diagonal entries");
    regdet->add_option("--diag-file", a.diag_file, "one diagonal entry per line");
    regdet->add_option("--order", a.order, "regularization order p");
    regdet->add_option("--z", a.z, "evaluation point");
    regdet->add_option("--terms", a.terms, "truncation length");
    regdet->add_option("--kappa", a.kappa, "power-law tail exponent (finite tail when omitted)");
    common(regdet);

    auto* bergman = app.add_subcommand("bergman", "weighted Bergman space checks");
    bergman->add_option("--alpha", a.alpha, "weight exponent in (0, 1]");
    bergman->add_option("--terms", a.terms, "truncation N");
    bergman->add_option("--order", a.order, "largest power k");
    common(bergman);

    auto* gamma = app.add_subcommand("gamma", "Gamma from its poles");
    gamma->add_option("--terms", a.terms, "number of factors");
    points(gamma);
    common(gamma);

    auto* xi = app.add_subcommand("xi", "xi from zero heights");
    xi->add_option("--zeros", a.zeros, "zero height file");
    xi->add_option("--terms", a.terms, "number of heights used");
    points(xi);
    common(xi);

    auto* zeta = app.add_subcommand("zeta", "zeta from three determinants");
    zeta->add_option("--zeros", a.zeros, "zero height file");
    zeta->add_option("--terms", a.terms, "number of heights used");
    points(zeta);
    common(zeta);

    auto* euler = app.add_subcommand("euler", "Euler product as Fredholm determinants");
    euler->add_option("--prime-bound", a.prime_bound, "largest prime used");
    points(euler);
    common(euler);

    auto* hadamard = app.add_subcommand("hadamard", "Hadamard products of named fixtures");
    hadamard->add_option("--fixture", a.fixture, "sinc, linear or linear-exp");
    hadamard->add_option("--terms", a.terms, "zero pairs for sinc");
    points(hadamard);
    common(hadamard);

    auto* curve = app.add_subcommand("curve-zeta", "zeta function of a curve over F_q");
    curve->add_option("--curve", a.curve, "curve file")->required();
    curve->add_option("--terms", a.terms, "number of point counts");
    points(curve);
    common(curve);

    auto* verify = app.add_subcommand("verify-all", "full acceptance suite");
    verify->add_option("--zeros", a.zeros, "zero height file");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (*regdet) report = cmd_regdet(a);
        else if (*bergman) report = cmd_bergman(a);
        else if (*gamma) report = cmd_gamma(a);
        else if (*xi) report = cmd_xi(a);
        else if (*zeta) report = cmd_zeta(a);
        else if (*euler) report = cmd_euler(a);
        else if (*hadamard) report = cmd_hadamard(a);
        else if (*curve) report = cmd_curve(a);
        else report = cmd_verify_all(a);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!a.common.no_timing) {
        report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << (a.common.format == "csv" ? render_csv(report) : render_json(report) + "\n");
    return report.pass() ? 0 : 1;
}
