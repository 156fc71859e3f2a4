#pragma once

// The acceptance suite: ten criteria, each producing a report whose checked
// rows carry their own tolerances. Shared by `zetaquant verify-all` and the
// acceptance test binary.

#include <zetaquant/report.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace zetaquant {

struct VerifyOptions {
    std::filesystem::path fixture_dir;
    std::uint64_t seed = 20260417;
    /// Heights file; defaults to fixture_dir / zeta_zeros_100k.txt.
    std::filesystem::path zero_file;

    std::filesystem::path zeros_path() const;
};

struct Criterion {
    int id;
    std::string title;
};

const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion. Errors inside a check become failing rows.
Report run_criterion(int id, const VerifyOptions& opts);

} // namespace zetaquant
