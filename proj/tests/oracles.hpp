#pragma once

// Brute-force reference implementations used only by tests. Everything here
// favors the most literal possible enumeration over cleverness so that it
// stays an independent check on the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

// Number of partitions of j into at most r parts, by explicitly walking all
// weakly decreasing part lists.
inline std::int64_t count_partitions_max_parts(int j, int r) {
    std::function<std::int64_t(int, int, int)> go = [&](int rem, int maxpart,
                                                        int slots) -> std::int64_t {
        if (rem == 0) {
            return 1;
        }
        if (slots == 0 || maxpart == 0) {
            return 0;
        }
        std::int64_t total = 0;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            total += go(rem - p, p, slots - 1);
        }
        return total;
    };
    return go(j, j, r);
}

// Conjugate of a partition computed by filling the Young diagram cell by
// cell and counting column heights.
inline std::vector<int> conjugate_by_grid(const std::vector<int>& parts) {
    if (parts.empty()) {
        return {};
    }
    std::vector<std::vector<char>> grid;
    for (int p : parts) {
        grid.emplace_back(static_cast<size_t>(p), char(1));
    }
    std::vector<int> cols(static_cast<size_t>(parts.front()), 0);
    for (const auto& row : grid) {
        for (size_t c = 0; c < row.size(); ++c) {
            cols[c] += 1;
        }
    }
    return cols;
}

// All partitions of n, largest part first, in the order produced by a
// first-part-descending recursion.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            go(rem - p, p);
            cur.pop_back();
        }
    };
    go(n, n);
    return out;
}

// Number of partitions of n into parts that pairwise differ by at least 2,
// by explicit enumeration. Counts the empty partition for n = 0.
inline std::int64_t count_difference_two_partitions(int n) {
    std::function<std::int64_t(int, int)> go = [&](int rem, int maxpart) -> std::int64_t {
        if (rem == 0) {
            return 1;
        }
        std::int64_t total = 0;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            total += go(rem - p, p - 2);
        }
        return total;
    };
    return go(n, n);
}

}  // namespace oracles
