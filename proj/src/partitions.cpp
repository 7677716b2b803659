#include "qpchar/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qpchar {

namespace {

void check_weakly_decreasing_nonnegative(const std::vector<int>& v, const char* what) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
            throw std::invalid_argument(std::string(what) + " has a negative entry");
        }
        if (i > 0 && v[i] > v[i - 1]) {
            throw std::invalid_argument(std::string(what) + " is not weakly decreasing");
        }
    }
}

std::vector<int> strip_trailing_zeros(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
    return v;
}

}  // namespace

void DualChargeType::normalize() {
    for (auto& color : rows) {
        color = strip_trailing_zeros(std::move(color));
    }
}

DualChargeType DualChargeType::normalized() const {
    DualChargeType d = *this;
    d.normalize();
    return d;
}

bool operator==(const DualChargeType& a, const DualChargeType& b) {
    return a.normalized().rows == b.normalized().rows;
}

bool operator<(const DualChargeType& a, const DualChargeType& b) {
    return a.normalized().rows < b.normalized().rows;
}

void validate_partition(const Partition& p) {
    check_weakly_decreasing_nonnegative(p, "partition");
    if (!p.empty() && p.back() == 0) {
        throw std::invalid_argument("partition parts must be positive");
    }
}

Partition conjugate(const Partition& p) {
    validate_partition(p);
    if (p.empty()) {
        return {};
    }
    Partition out(static_cast<size_t>(p.front()), 0);
    for (int part : p) {
        for (int j = 0; j < part; ++j) {
            out[static_cast<size_t>(j)] += 1;
        }
    }
    return out;
}

Coeff count_partitions_max_parts(int j, int r) {
    if (j < 0 || r < 0) {
        throw std::invalid_argument("count_partitions_max_parts needs j, r >= 0");
    }
    if (j == 0) {
        return 1;
    }
    // p(j, parts <= r) via the standard recurrence
    // p(j, r) = p(j, r-1) + p(j-r, r); parts beyond j never matter.
    const int rc = std::min(r, j);
    std::vector<std::vector<Coeff>> table(static_cast<size_t>(j + 1),
                                          std::vector<Coeff>(static_cast<size_t>(rc + 1), 0));
    for (int rr = 0; rr <= rc; ++rr) {
        table[0][static_cast<size_t>(rr)] = 1;
    }
    for (int jj = 1; jj <= j; ++jj) {
        for (int rr = 1; rr <= rc; ++rr) {
            Coeff v = table[static_cast<size_t>(jj)][static_cast<size_t>(rr - 1)];
            if (jj >= rr) {
                v += table[static_cast<size_t>(jj - rr)][static_cast<size_t>(rr)];
            }
            table[static_cast<size_t>(jj)][static_cast<size_t>(rr)] = v;
        }
    }
    return table[static_cast<size_t>(j)][static_cast<size_t>(rc)];
}

long long minsum_same_color(const Partition& charges) {
    validate_partition(charges);
    long long total = 0;
    for (size_t p = 0; p < charges.size(); ++p) {
        total += charges[p];
        for (size_t q = 0; q < p; ++q) {
            total += 2LL * std::min(charges[p], charges[q]);
        }
    }
    return total;
}

long long minsum_cross_color(const Partition& charges_a, const Partition& charges_b,
                             CrossDoubling doubling) {
    validate_partition(charges_a);
    validate_partition(charges_b);
    const long long fa = doubling == CrossDoubling::double_a ? 2 : 1;
    const long long fb = doubling == CrossDoubling::double_b ? 2 : 1;
    long long total = 0;
    for (int na : charges_a) {
        for (int nb : charges_b) {
            total += std::min(fa * na, fb * nb);
        }
    }
    return total;
}

long long quadratic_same_color(const std::vector<int>& dual) {
    check_weakly_decreasing_nonnegative(dual, "dual-charge row list");
    long long total = 0;
    for (int r : dual) {
        total += static_cast<long long>(r) * r;
    }
    return total;
}

long long quadratic_cross_color(const std::vector<int>& dual_a, const std::vector<int>& dual_b,
                                CrossPairing pairing) {
    check_weakly_decreasing_nonnegative(dual_a, "dual-charge row list");
    check_weakly_decreasing_nonnegative(dual_b, "dual-charge row list");
    auto row = [](const std::vector<int>& v, size_t s) -> long long {
        return s < v.size() ? v[s] : 0;
    };
    long long total = 0;
    if (pairing == CrossPairing::aligned) {
        const size_t n = std::min(dual_a.size(), dual_b.size());
        for (size_t s = 0; s < n; ++s) {
            total += static_cast<long long>(dual_a[s]) * dual_b[s];
        }
    } else {
        for (size_t s = 0; s < dual_a.size(); ++s) {
            total += dual_a[s] * (row(dual_b, 2 * s) + row(dual_b, 2 * s + 1));
        }
    }
    return total;
}

}  // namespace qpchar
