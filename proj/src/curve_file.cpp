#include <zetaquant/ffcurves.hpp>

#include <zetaquant/errors.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace zetaquant {

namespace {

using Key = std::tuple<unsigned, unsigned, unsigned>;

unsigned read_uint(const std::string& s, std::size_t& i, std::size_t line) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected a number", line);
    unsigned long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<unsigned>(s[i] - '0');
        if (v > 1000000000ULL) throw ParseError("number too large", line);
        ++i;
    }
    return static_cast<unsigned>(v);
}

/// Sum of signed terms c x^a y^b z^c, accumulated into acc with the given sign.
void parse_sum(const std::string& text, const std::string& vars, long long sign, std::map<Key, long long>& acc,
               std::size_t line) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw ParseError("empty polynomial", line);
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        long long term_sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            term_sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", line);
        }
        first = false;
        long long coeff = 1;
        bool any = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = read_uint(s, i, line);
            any = true;
        }
        unsigned e[3] = {0, 0, 0};
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (s[i] == '*') {
                if (!any || i + 1 >= s.size() || vars.find(s[i + 1]) == std::string::npos) {
                    throw ParseError("'*' must join two factors", line);
                }
                ++i;
                continue;
            }
            const auto pos = vars.find(s[i]);
            if (pos == std::string::npos) throw ParseError(std::string("unexpected '") + s[i] + "'", line);
            ++i;
            unsigned power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                power = read_uint(s, i, line);
            }
            e[std::string("xyz").find(vars[pos])] += power;
            any = true;
        }
        if (!any) throw ParseError("empty term", line);
        acc[{e[0], e[1], e[2]}] += sign * term_sign * coeff;
    }
}

std::vector<Term> parse_polynomial(const std::string& text, const std::string& vars, std::size_t line) {
    std::map<Key, long long> acc;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        parse_sum(text, vars, 1, acc, line);
    } else {
        if (text.find('=', eq + 1) != std::string::npos) throw ParseError("more than one '='", line);
        parse_sum(text.substr(0, eq), vars, 1, acc, line);
        parse_sum(text.substr(eq + 1), vars, -1, acc, line);
    }
    std::vector<Term> out;
    for (const auto& [key, c] : acc) {
        if (c != 0) out.push_back({c, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
    }
    return out;
}

} // namespace

PlaneCurve parse_curve(std::istream& in) {
    PlaneCurve curve;
    bool have_field = false;
    bool have_poly = false;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key)) continue;
        std::string rest;
        std::getline(ls, rest);
        std::istringstream rs(rest);
        if (key == "field") {
            long long p = 0, k = 0;
            std::string extra;
            if (!(rs >> p >> k) || (rs >> extra)) throw ParseError("expected `field p k`", line);
            if (p < 2 || k < 1) throw ParseError("field needs p >= 2 and k >= 1", line);
            curve.p = static_cast<std::uint32_t>(p);
            curve.k = static_cast<std::uint32_t>(k);
            have_field = true;
        } else if (key == "affine" || key == "projective") {
            if (have_poly) throw ParseError("curve polynomial given twice", line);
            curve.form = key == "affine" ? CurveForm::affine : CurveForm::projective;
            curve.terms = parse_polynomial(rest, key == "affine" ? "xy" : "xyz", line);
            have_poly = true;
        } else if (key == "infinity") {
            long long n = -1;
            std::string extra;
            if (!(rs >> n) || n < 0 || (rs >> extra)) throw ParseError("expected `infinity <count>`", line);
            curve.points_at_infinity = static_cast<std::uint64_t>(n);
        } else if (key == "genus") {
            long long g = -1;
            std::string extra;
            if (!(rs >> g) || g < 0 || (rs >> extra)) throw ParseError("expected `genus <g>`", line);
            curve.genus_hint = static_cast<unsigned>(g);
        } else {
            throw ParseError("unknown directive `" + key + "`", line);
        }
    }
    if (!have_field) throw ParseError("missing `field p k`", line);
    if (!have_poly) throw ParseError("missing `affine` or `projective` polynomial", line);
    if (curve.form == CurveForm::projective && curve.points_at_infinity != 0) {
        throw ParseError("`infinity` applies to affine curves only", line);
    }
    curve.validate();
    return curve;
}

PlaneCurve load_curve(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open curve file " + path.string());
    return parse_curve(in);
}

std::string format_polynomial(const std::vector<Term>& terms) {
    std::vector<Term> sorted = terms;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Term& a, const Term& b) {
        return std::make_tuple(a.degree(), a.ey, a.ex) > std::make_tuple(b.degree(), b.ey, b.ex);
    });
    std::string out;
    for (const Term& t : sorted) {
        const long long mag = t.coeff < 0 ? -t.coeff : t.coeff;
        if (out.empty()) {
            if (t.coeff < 0) out += "-";
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        std::string mono;
        auto var = [&](char v, unsigned e) {
            if (e == 0) return;
            if (!mono.empty()) mono += " ";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var('x', t.ex);
        var('y', t.ey);
        var('z', t.ez);
        if (mono.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + " ";
            out += mono;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace zetaquant
