#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "blockerlab/errors.hpp"

namespace blockerlab {

/// C(n, k), saturating at the maximum of uint64.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

/// Advances a sorted s-subset of [0, m) to its lexicographic successor.
inline bool next_combination(std::vector<int>& c, int m) {
    const int s = static_cast<int>(c.size());
    int i = s - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - s + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

/// The s-subset of [0, m) with the given lexicographic rank.
inline std::vector<int> unrank_combination(int m, int s, std::uint64_t rank) {
    std::vector<int> c;
    int next = 0;
    for (int pos = 0; pos < s; ++pos) {
        for (;; ++next) {
            auto block = binomial(m - next - 1, s - pos - 1);
            if (rank < block) break;
            rank -= block;
        }
        c.push_back(next++);
    }
    return c;
}

/// Counts predicate evaluations against a fixed ceiling. A level is admitted
/// only if its full size fits the remaining budget, so whether a search
/// raises CapacityExceeded does not depend on thread count or luck.
class Budget {
public:
    explicit Budget(std::uint64_t limit = 10'000'000) : limit_(limit) {}

    void admit(std::uint64_t count, const std::string& what) const {
        if (count > limit_ || used_ > limit_ - count)
            throw CapacityExceeded(what + " needs " + std::to_string(count) + " more checks; budget " +
                                   std::to_string(limit_) + ", used " + std::to_string(used_));
    }
    void charge(std::uint64_t count) { used_ += count; }

    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// Lexicographically first s-subset of [0, m) satisfying pred, or nothing.
/// With threads > 1 the rank range is split into contiguous blocks; the
/// smallest successful rank wins, so the result equals the serial one.
/// Returns the number of evaluations performed through `evaluated`.
template <class Pred>
std::optional<std::vector<int>> first_success_at_level(int m, int s, const Pred& pred, int threads,
                                                       std::uint64_t* evaluated = nullptr) {
    const std::uint64_t total = binomial(m, s);
    if (total == 0) return std::nullopt;
    threads = std::max(1, threads);
    if (threads == 1 || total < 64) {
        std::vector<int> c(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
        std::uint64_t count = 0;
        do {
            ++count;
            if (pred(c)) {
                if (evaluated) *evaluated = count;
                return c;
            }
        } while (next_combination(c, m));
        if (evaluated) *evaluated = count;
        return std::nullopt;
    }
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::uint64_t> count{0};
    std::vector<std::thread> pool;
    const std::uint64_t block = (total + static_cast<std::uint64_t>(threads) - 1) / static_cast<std::uint64_t>(threads);
    for (int t = 0; t < threads; ++t) {
        std::uint64_t begin = block * static_cast<std::uint64_t>(t);
        std::uint64_t end = std::min(total, begin + block);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            auto c = unrank_combination(m, s, begin);
            std::uint64_t local = 0;
            for (std::uint64_t r = begin; r < end && r < best.load(); ++r) {
                ++local;
                if (pred(c)) {
                    auto cur = best.load();
                    while (r < cur && !best.compare_exchange_weak(cur, r)) {
                    }
                    break;
                }
                next_combination(c, m);
            }
            count += local;
        });
    }
    for (auto& th : pool) th.join();
    if (evaluated) *evaluated = count.load();
    if (best.load() == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return unrank_combination(m, s, best.load());
}

/// Size-then-lex first success among subsets of [0, m) of size <= k.
///
/// With `monotone` (every superset of a success succeeds), level success is
/// monotone in the size, and levels are probed from both ends, cheapest
/// first; the result is still the first set in size-then-lex order.
template <class Pred>
std::optional<std::vector<int>> first_success_up_to(int m, int k, const Pred& pred, bool monotone, Budget& budget,
                                                     int threads = 1) {
    k = std::min(k, m);
    if (k < 0) return std::nullopt;
    auto probe = [&](int s) {
        budget.admit(binomial(m, s), "subset enumeration at size " + std::to_string(s));
        std::uint64_t used = 0;
        auto r = first_success_at_level(m, s, pred, threads, &used);
        budget.charge(used);
        return r;
    };
    if (!monotone) {
        for (int s = 0; s <= k; ++s)
            if (auto r = probe(s)) return r;
        return std::nullopt;
    }
    int lo = -1;     // largest size known to fail
    int hi = k + 1;  // smallest size known to succeed
    std::optional<std::vector<int>> at_hi;
    while (hi - lo > 1) {
        int down = lo + 1;
        int up = hi - 1;
        if (binomial(m, down) <= binomial(m, up)) {
            auto r = probe(down);
            if (r) return r;
            lo = down;
        } else {
            auto r = probe(up);
            if (r) {
                hi = up;
                at_hi = std::move(r);
            } else {
                lo = up;
            }
        }
    }
    if (hi == k + 1) return std::nullopt;
    return at_hi;
}

}  // namespace blockerlab
