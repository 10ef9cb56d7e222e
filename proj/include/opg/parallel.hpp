#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace opg {

/// Knobs shared by the heavier operations. A zero thread count means "use the
/// hardware"; a zero expansion limit means unlimited.
struct RunOptions {
    int threads = 1;
    std::uint64_t max_expansions = 0;
};

/// Thrown when a search exceeds its node-expansion budget. Carries how much
/// had been completed so a caller can report the partial result instead of
/// silently truncating.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(const std::string& what, std::uint64_t partial)
        : std::runtime_error(what), partial_(partial) {}
    std::uint64_t partial_count() const { return partial_; }

private:
    std::uint64_t partial_;
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

/// Shared expansion budget. Workers charge in batches; the first breach wins
/// and everyone unwinds.
class ExpansionMeter {
public:
    explicit ExpansionMeter(std::uint64_t limit)
        : limit_(limit == 0 ? UINT64_MAX : limit) {}

    void charge(std::uint64_t amount) {
        if (amount == 0) return;
        const std::uint64_t now = spent_.fetch_add(amount, std::memory_order_relaxed) + amount;
        if (now > limit_)
            throw resource_limit_error("node-expansion limit of " + std::to_string(limit_) +
                                           " exceeded",
                                       0);
    }

    std::uint64_t spent() const { return spent_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> spent_{0};
    std::uint64_t limit_;
};

/// Deterministic chunked parallel map over [0, count).
///
/// The chunk grid depends only on `count` and `chunk_size`, never on the
/// thread count; results come back ordered by chunk index, so any reduction
/// applied in order is bit-identical across schedules.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::uint64_t count, int threads, std::uint64_t chunk_size,
                               Fn&& fn) {
    if (chunk_size == 0) chunk_size = 1;
    const std::uint64_t chunks = count == 0 ? 0 : (count + chunk_size - 1) / chunk_size;
    std::vector<Result> results(static_cast<std::size_t>(chunks));
    if (chunks == 0) return results;

    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(threads)), chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            results[c] = fn(c * chunk_size, std::min(count, (c + 1) * chunk_size));
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&]() {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunks) return;
            try {
                results[c] = fn(c * chunk_size, std::min(count, (c + 1) * chunk_size));
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace opg
