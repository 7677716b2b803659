#include "qpchar/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpchar {

std::string family_name(AlgebraFamily family) {
    switch (family) {
        case AlgebraFamily::A: return "A";
        case AlgebraFamily::B: return "B";
        case AlgebraFamily::C: return "C";
    }
    throw std::logic_error("unreachable family tag");
}

std::optional<AlgebraFamily> parse_family(const std::string& text) {
    if (text == "A" || text == "a") return AlgebraFamily::A;
    if (text == "B" || text == "b") return AlgebraFamily::B;
    if (text == "C" || text == "c") return AlgebraFamily::C;
    return std::nullopt;
}

void validate_root_system(const RootSystem& rs) {
    int min_rank = 0;
    switch (rs.family) {
        case AlgebraFamily::A: min_rank = 1; break;
        case AlgebraFamily::B: min_rank = 2; break;
        case AlgebraFamily::C: min_rank = 3; break;
    }
    if (rs.rank < min_rank) {
        throw std::invalid_argument("family " + family_name(rs.family) + " needs rank >= " +
                                    std::to_string(min_rank) + ", got " +
                                    std::to_string(rs.rank));
    }
}

std::vector<RootCoords> positive_roots(const RootSystem& rs) {
    validate_root_system(rs);
    const int l = rs.rank;
    std::vector<RootCoords> roots;
    auto make = [l](int ones_from, int ones_to, int twos_from, int twos_to, bool last_one) {
        RootCoords c(static_cast<size_t>(l), 0);
        for (int i = ones_from; i <= ones_to; ++i) c[static_cast<size_t>(i - 1)] = 1;
        for (int i = twos_from; i <= twos_to; ++i) c[static_cast<size_t>(i - 1)] = 2;
        if (last_one) c[static_cast<size_t>(l - 1)] = 1;
        return c;
    };

    switch (rs.family) {
        case AlgebraFamily::A:
            for (int i = 1; i <= l; ++i) {
                for (int j = i; j <= l; ++j) {
                    roots.push_back(make(i, j, 1, 0, false));
                }
            }
            break;
        case AlgebraFamily::B:
            // alpha_i + ... + alpha_{j-1}
            for (int i = 1; i < l; ++i) {
                for (int j = i + 1; j <= l; ++j) {
                    roots.push_back(make(i, j - 1, 1, 0, false));
                }
            }
            // alpha_i + ... + alpha_{j-1} + 2 alpha_j + ... + 2 alpha_l
            for (int i = 1; i < l; ++i) {
                for (int j = i + 1; j <= l; ++j) {
                    roots.push_back(make(i, j - 1, j, l, false));
                }
            }
            // alpha_i + ... + alpha_l
            for (int i = 1; i <= l; ++i) {
                roots.push_back(make(i, l, 1, 0, false));
            }
            break;
        case AlgebraFamily::C:
            // alpha_i + ... + alpha_{j-1}
            for (int i = 1; i < l; ++i) {
                for (int j = i + 1; j <= l; ++j) {
                    roots.push_back(make(i, j - 1, 1, 0, false));
                }
            }
            // alpha_i + ... + alpha_{j-1} + 2 alpha_j + ... + 2 alpha_{l-1} + alpha_l
            for (int i = 1; i < l; ++i) {
                for (int j = i + 1; j <= l; ++j) {
                    roots.push_back(make(i, j - 1, j, l - 1, true));
                }
            }
            // 2 alpha_i + ... + 2 alpha_{l-1} + alpha_l
            for (int i = 1; i <= l; ++i) {
                roots.push_back(make(1, 0, i, l - 1, true));
            }
            break;
    }

    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
        throw std::logic_error("positive root list contains a duplicate");
    }
    return roots;
}

RootCoords highest_root(const RootSystem& rs) {
    validate_root_system(rs);
    const int l = rs.rank;
    RootCoords c(static_cast<size_t>(l), 2);
    switch (rs.family) {
        case AlgebraFamily::A:
            std::fill(c.begin(), c.end(), 1);
            break;
        case AlgebraFamily::B:
            c[0] = 1;
            break;
        case AlgebraFamily::C:
            c[static_cast<size_t>(l - 1)] = 1;
            break;
    }
    return c;
}

}  // namespace qpchar
