#pragma once

#include <zetaquant/factors.hpp>

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace zetaquant {

/// Worker cap: hardware concurrency, limited by ZETAQUANT_THREADS when set.
std::size_t worker_count();

/// Fixed chunk length of every parallel reduction. Chunk boundaries do not
/// depend on the worker count, so results are bit-identical for any cap.
inline constexpr std::size_t kReductionChunk = std::size_t{1} << 15;

struct LogSum {
    Complex sum;
    /// First index whose factor vanished exactly; sum is meaningless when set.
    std::optional<std::size_t> zero_index;
};

/// Compensated sum of term(i) for i in [0, count). A term returning
/// std::nullopt marks an exactly vanishing factor.
template <class Term>
LogSum chunked_log_sum(std::size_t count, const Term& term) {
    const std::size_t chunks = (count + kReductionChunk - 1) / kReductionChunk;
    struct Partial {
        CompensatedSum<double> acc;
        std::optional<std::size_t> zero;
        std::exception_ptr error;
    };
    std::vector<Partial> partial(chunks);

    auto run_chunk = [&](std::size_t c) {
        Partial& out = partial[c];
        try {
            const std::size_t end = std::min(count, (c + 1) * kReductionChunk);
            for (std::size_t i = c * kReductionChunk; i < end; ++i) {
                const std::optional<Complex> t = term(i);
                if (!t) {
                    out.zero = i;
                    return;
                }
                out.acc += *t;
            }
        } catch (...) {
            out.error = std::current_exception();
        }
    };

    const std::size_t workers = std::min(worker_count(), chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
            });
        }
        for (auto& th : pool) th.join();
    }

    LogSum result{};
    CompensatedSum<double> total;
    for (const Partial& p : partial) {
        if (p.error) std::rethrow_exception(p.error);
        if (p.zero) {
            result.zero_index = p.zero;
            return result;
        }
        total += p.acc;
    }
    result.sum = total.value();
    return result;
}

} // namespace zetaquant
