#pragma once

// Heights t_k > 0 of zeros 1/2 + i t_k of the Riemann zeta function, one
// decimal per line as in the LMFDB first-zeros tables.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace zetaquant {

struct ZeroDataset {
    std::vector<double> heights;  ///< strictly increasing, positive
    std::string source;

    std::size_t count() const noexcept { return heights.size(); }
};

/// Blank lines and lines starting with '#' are skipped. Throws ParseError
/// carrying the 1-based line number on malformed or non-increasing input.
ZeroDataset parse_zero_dataset(std::istream& in, std::string source = "<stream>");

ZeroDataset load_zero_dataset(const std::filesystem::path& path);

} // namespace zetaquant
