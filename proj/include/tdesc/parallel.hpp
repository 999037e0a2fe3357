#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace tdesc {

// Worker count for the exhaustive verifiers: TDESC_WORKERS, default 1.
inline int worker_count_from_env() {
    const char* raw = std::getenv("TDESC_WORKERS");
    if (!raw) return 1;
    int n = std::atoi(raw);
    if (n < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && n > static_cast<int>(hw) * 4) n = static_cast<int>(hw) * 4;
    return n;
}

// Runs body(i) for i in [0, count); results are reduced per index so the
// outcome is independent of the thread schedule. body must be pure. Returns
// the lowest-index failure message, if any.
template <class Body>
std::optional<std::string> parallel_find_failure(size_t count, int workers, Body body) {
    if (workers <= 1 || count < 64) {
        for (size_t i = 0; i < count; ++i)
            if (auto failure = body(i)) return failure;
        return std::nullopt;
    }
    size_t w = static_cast<size_t>(workers);
    std::vector<std::optional<std::pair<size_t, std::string>>> slots(w);
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (size_t t = 0; t < w; ++t) {
        threads.emplace_back([&, t]() {
            std::optional<std::pair<size_t, std::string>> best;
            for (size_t i = t; i < count; i += w) {
                if (auto failure = body(i)) {
                    best = {i, *failure};
                    break; // indices grow within a stripe; first hit is minimal
                }
            }
            slots[t] = std::move(best);
        });
    }
    for (auto& th : threads) th.join();
    std::optional<std::pair<size_t, std::string>> best;
    for (const auto& s : slots)
        if (s && (!best || s->first < best->first)) best = s;
    if (best) return best->second;
    return std::nullopt;
}

} // namespace tdesc
