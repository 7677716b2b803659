#pragma once

// Partition utilities: conjugation, bounded-part counts, and the min-sum /
// quadratic-form identities that connect charge-types with their conjugate
// dual-charge-types. Conventions: partitions are stored largest part first,
// matching the charge indexing where p = 1 carries the largest charge.

#include <vector>

#include "qpchar/series.hpp"

namespace qpchar {

// Weakly decreasing list of positive parts; empty = partition of 0.
using Partition = std::vector<int>;

// Per-color weakly decreasing row counts r_i^(1) >= r_i^(2) >= ... >= 0.
// Trailing zero rows carry no information; equality ignores them.
struct DualChargeType {
    std::vector<std::vector<int>> rows;

    // Strips trailing zeros from every color's row list.
    void normalize();
    DualChargeType normalized() const;

    friend bool operator==(const DualChargeType& a, const DualChargeType& b);
    friend bool operator<(const DualChargeType& a, const DualChargeType& b);
};

// Throws std::invalid_argument unless parts are positive and weakly
// decreasing.
void validate_partition(const Partition& p);

// Transpose of the Young diagram: entry j of the result counts the parts
// of p that are >= j+1.
Partition conjugate(const Partition& p);

// p_r(j): partitions of j with at most r parts. Exact integer since the
// same counts appear as series coefficients elsewhere.
Coeff count_partitions_max_parts(int j, int r);

// Sum over particles p of (n_p + 2 * sum_{p' < p} min{n_p, n_p'}), the
// minimal same-color energy total for a charge list.
long long minsum_same_color(const Partition& charges);

enum class CrossDoubling { none, double_a, double_b };

// Sum over all pairs (p, q) of min{f(a_p), g(b_q)} where the side selected
// by `doubling` enters with its charges doubled.
long long minsum_cross_color(const Partition& charges_a, const Partition& charges_b,
                             CrossDoubling doubling);

// Sum of squared rows of a dual-charge-type column.
long long quadratic_same_color(const std::vector<int>& dual);

enum class CrossPairing { aligned, folded };

// aligned: sum_s a^(s) * b^(s).
// folded:  sum_s a^(s) * (b^(2s-1) + b^(2s)), rows past the end read as 0.
// These are the conjugate-side forms of the min-sum identities: aligned
// matches minsum_cross_color with no doubling, folded matches it with one
// side doubled (dual_a must then be the conjugate of the doubled side).
long long quadratic_cross_color(const std::vector<int>& dual_a, const std::vector<int>& dual_b,
                                CrossPairing pairing);

}  // namespace qpchar
