#include <zetaquant/zero_dataset.hpp>

#include <zetaquant/errors.hpp>

#include <charconv>
#include <cmath>
#include <fstream>

namespace zetaquant {

ZeroDataset parse_zero_dataset(std::istream& in, std::string source) {
    ZeroDataset out;
    out.source = std::move(source);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        double t = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, t);
        if (ec != std::errc() || ptr != end) throw ParseError("not a decimal height", lineno);
        if (!std::isfinite(t) || t <= 0.0) throw ParseError("height must be positive", lineno);
        if (!out.heights.empty() && t <= out.heights.back()) {
            throw ParseError("heights must be strictly increasing", lineno);
        }
        out.heights.push_back(t);
    }
    return out;
}

ZeroDataset load_zero_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open zero dataset " + path.string());
    return parse_zero_dataset(in, path.string());
}

} // namespace zetaquant
