#pragma once

// Characters of principal subspaces computed two more ways: a fermionic
// sum over dual-charge-types R (one partition of row counts per color)
// weighted by q^{Q(R)} times Gaussian-style pochhammer factors, and, in
// the unbounded-level case, a bosonic product over positive roots. A
// brute-force PBW monomial count backs the bosonic product, and a
// comparison helper reports the first coefficient where two series split.

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qpchar/partitions.hpp"
#include "qpchar/qpbasis.hpp"
#include "qpchar/rootsys.hpp"
#include "qpchar/series.hpp"

namespace qpchar {

// Family, rank, and level for the fermionic sum. The level bounds how many
// rows each color of R may carry; Verma removes the bound.
struct FermionicShape {
    AlgebraFamily family;
    int rank;
    Level level;
};

// Rank bounds per family, level >= 1 when finite.
void validate_fermionic_shape(const FermionicShape& shape);

// Maximum number of rows allowed for the given 0-based color, or nullopt
// when the level puts no bound (Verma). Colors coupled by the long/short
// root fold admit twice the level: for B that is the last color, for C all
// colors except the last. Out-of-range colors throw std::invalid_argument.
std::optional<int> row_limit(const FermionicShape& shape, int color);

// The exponent Q(R): the sum over colors of the squared row lengths minus
// the nearest-neighbor coupling terms (aligned between unfolded neighbors,
// index-doubled across the fold). R must have `rank` rows-lists, each
// weakly decreasing and nonnegative, with normalized lengths within
// row_limit; violations throw std::invalid_argument.
long long quadratic_exponent(const DualChargeType& R, const FermionicShape& shape);

// Exactly the normalized dual-charge-types with quadratic_exponent <= qmax,
// paired with their exponents and sorted ascending by DualChargeType's
// ordering. The search walks colors along the coupling chain with
// Cauchy-Schwarz budgets on the squared-row sums, then filters by the
// exact exponent; `options` carries the same widen-and-recheck saturation
// control as the quasi-particle enumeration.
std::vector<std::pair<DualChargeType, long long>> enumerate_dual_charge_types(
    const FermionicShape& shape, int qmax, const EnumerateOptions& options = {});

// Sum over enumerate_dual_charge_types of
//   q^{Q(R)} * prod_i prod_s pochhammer_inverse(r_i^(s) - r_i^(s+1))
//             * prod_i y_i^{sum_s r_i^(s)},
// the last row of each color differencing against zero.
TruncatedSeries fermionic_character(const FermionicShape& shape, int qmax);

// Product over all positive roots alpha and all mode degrees 1 <= m <= qmax
// of 1 / (1 - q^m y^alpha), truncated past q^qmax.
TruncatedSeries bosonic_character_verma(const RootSystem& rs, int qmax);

// The same series obtained by enumerating PBW monomials directly: finite
// multisets of (positive root, mode >= 1) with total mode degree <= qmax,
// each contributing q^{total} y^{summed roots}. No series inversion is
// involved, so this is an independent check on bosonic_character_verma.
TruncatedSeries pbw_monomial_count_verma(const RootSystem& rs, int qmax);

struct ComparisonReport {
    bool equal = false;
    int qmax = 0;
    // Set when unequal: the lexicographically first exponent whose
    // coefficients differ, with the coefficient from each side (absent
    // terms count as zero).
    std::optional<std::tuple<ExponentVector, Coeff, Coeff>> first_mismatch;
};

// Coefficient-by-coefficient comparison of two series; both must share the
// same rank and qmax or std::invalid_argument is thrown.
ComparisonReport verify_equal(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace qpchar
