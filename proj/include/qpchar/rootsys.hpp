#pragma once

// Positive-root data for types A, B, C in simple-root coordinates. This is
// all the bosonic product and PBW enumeration need: a root enters them only
// through its coordinate vector (c_1..c_l), i.e. the y-weight y^alpha.

#include <optional>
#include <string>
#include <vector>

namespace qpchar {

enum class AlgebraFamily { A, B, C };

// "A" / "B" / "C".
std::string family_name(AlgebraFamily family);
// Accepts the single letters (upper or lower case); empty on anything else.
std::optional<AlgebraFamily> parse_family(const std::string& text);

struct RootSystem {
    AlgebraFamily family;
    int rank;
};

// Coefficients c_i of a root sum c_i * alpha_i; entries in {0, 1, 2}.
using RootCoords = std::vector<int>;

// Rank bounds: A needs l >= 1, B needs l >= 2, C needs l >= 3. Throws
// std::invalid_argument otherwise.
void validate_root_system(const RootSystem& rs);

// All positive roots, sorted lexicographically on coordinates.
// Counts: l^2 for B and C, l(l+1)/2 for A on l simple roots.
std::vector<RootCoords> positive_roots(const RootSystem& rs);

// B -> (1,2,...,2); C -> (2,...,2,1); A -> (1,...,1).
RootCoords highest_root(const RootSystem& rs);

}  // namespace qpchar
