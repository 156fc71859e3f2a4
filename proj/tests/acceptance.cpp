// One PASS/FAIL line per acceptance criterion; failing rows are listed
// underneath. Exit status is nonzero when any criterion fails.

#include <zetaquant/verify.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    zetaquant::VerifyOptions opts;
    opts.fixture_dir = argc > 1 ? argv[1] : ZETAQUANT_FIXTURE_DIR;
    if (const char* seed = std::getenv("ZETAQUANT_SEED")) opts.seed = std::strtoull(seed, nullptr, 10);

    int failed = 0;
    for (const auto& c : zetaquant::acceptance_criteria()) {
        const auto start = std::chrono::steady_clock::now();
        const zetaquant::Report r = zetaquant::run_criterion(c.id, opts);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::size_t ok = 0, checked = 0;
        for (const auto& row : r.rows) {
            if (!row.checked) continue;
            ++checked;
            if (row.pass()) ++ok;
        }
        std::printf("%s criterion %2d: %s (%zu/%zu checks, %.1f s)\n", r.pass() ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), ok, checked, secs);
        if (!r.pass()) {
            ++failed;
            for (const auto& row : r.rows) {
                if (!row.pass()) {
                    std::printf("       %s: discrepancy %.3g > %.3g\n", row.label.c_str(), row.discrepancy,
                                row.tolerance);
                }
            }
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
