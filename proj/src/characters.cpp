#include "qpchar/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpchar {

void validate_fermionic_shape(const FermionicShape& shape) {
    validate_subspace_spec({shape.family, shape.rank, shape.level});
}

std::optional<int> row_limit(const FermionicShape& shape, int color) {
    validate_fermionic_shape(shape);
    if (color < 0 || color >= shape.rank) {
        throw std::invalid_argument("color index " + std::to_string(color) + " out of range");
    }
    if (shape.level.is_verma()) {
        return std::nullopt;
    }
    const int k = shape.level.k();
    const bool last = color == shape.rank - 1;
    switch (shape.family) {
        case AlgebraFamily::A: return k;
        case AlgebraFamily::B: return last ? 2 * k : k;
        case AlgebraFamily::C: return last ? k : 2 * k;
    }
    throw std::logic_error("unreachable family tag");
}

namespace {

void validate_dual_charge_type(const DualChargeType& R, const FermionicShape& shape) {
    if (static_cast<int>(R.rows.size()) != shape.rank) {
        throw std::invalid_argument("dual-charge-type has " + std::to_string(R.rows.size()) +
                                    " colors, expected " + std::to_string(shape.rank));
    }
    for (int i = 0; i < shape.rank; ++i) {
        const auto& rows = R.rows[static_cast<size_t>(i)];
        int nonzero = 0;
        for (size_t s = 0; s < rows.size(); ++s) {
            if (rows[s] < 0) {
                throw std::invalid_argument("row counts must be >= 0");
            }
            if (s > 0 && rows[s] > rows[s - 1]) {
                throw std::invalid_argument("row counts within a color must be weakly decreasing");
            }
            if (rows[s] > 0) {
                nonzero = static_cast<int>(s) + 1;
            }
        }
        const std::optional<int> limit = row_limit(shape, i);
        if (limit && nonzero > *limit) {
            throw std::invalid_argument("color " + std::to_string(i + 1) + " has " +
                                        std::to_string(nonzero) + " rows, level allows " +
                                        std::to_string(*limit));
        }
    }
}

// The coupled color pairs entering Q(R), each as (dual_a, dual_b, pairing)
// indices into R.rows; for a folded pair dual_a is the side whose rows
// appear undoubled, i.e. the conjugate of the doubled charge side.
struct Coupling {
    int a;
    int b;
    CrossPairing pairing;
};

std::vector<Coupling> couplings_of(AlgebraFamily family, int rank) {
    std::vector<Coupling> out;
    switch (family) {
        case AlgebraFamily::A:
            for (int i = 1; i < rank; ++i) {
                out.push_back({i - 1, i, CrossPairing::aligned});
            }
            break;
        case AlgebraFamily::B:
            for (int i = 1; i < rank - 1; ++i) {
                out.push_back({i - 1, i, CrossPairing::aligned});
            }
            out.push_back({rank - 2, rank - 1, CrossPairing::folded});
            break;
        case AlgebraFamily::C:
            for (int i = 1; i < rank - 1; ++i) {
                out.push_back({i - 1, i, CrossPairing::aligned});
            }
            out.push_back({rank - 1, rank - 2, CrossPairing::folded});
            break;
    }
    return out;
}

long long isqrt_floor(long long x) {
    if (x < 0) {
        throw std::logic_error("isqrt of negative value");
    }
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Dual-charge-type search. Structurally the same chain walk as the charge
// search in the quasi-particle module, restated on the conjugate side:
// colors are processed from the uncoupled end, T(rows) = sum_s (r^(s))^2
// replaces the per-color minimal energy S, and the cross terms are the
// exact aligned/folded forms. Cauchy-Schwarz bounds a cross term by
// sqrt(T_a T_b) (folded: sqrt(2 T_a T_b)), which is the same inequality
// the charge search squares away, so the budget arithmetic carries over
// unchanged. A cap on row values alone would not be sound here: Q(R) can
// be strictly smaller than the largest row count, so the search must let
// large rows ride on coupled neighbors exactly as large charges do.
class RowSearch {
  public:
    RowSearch(const FermionicShape& shape, int qmax, int margin)
        : shape_(shape), qmax_(qmax), qeff_(static_cast<long long>(qmax) + margin) {
        if (shape.family == AlgebraFamily::C) {
            for (int i = shape.rank - 1; i >= 0; --i) order_.push_back(i);
        } else {
            for (int i = 0; i < shape.rank; ++i) order_.push_back(i);
        }
        kappa_sq_.assign(order_.size(), 0);
        for (size_t t = 1; t < order_.size(); ++t) {
            const int cur = order_[t];
            const bool folded = (shape.family == AlgebraFamily::B && cur == shape.rank - 1) ||
                                (shape.family == AlgebraFamily::C && cur == shape.rank - 2);
            kappa_sq_[t] = folded ? 2 : 1;
        }
    }

    std::vector<std::pair<DualChargeType, long long>> run() {
        rows_.assign(static_cast<size_t>(shape_.rank), {});
        out_.clear();
        step(0, 0, 0);
        return std::move(out_);
    }

  private:
    bool is_last(size_t t) const { return t + 1 == order_.size(); }

    bool close_viable(size_t t, long long partial, long long tval) const {
        if (is_last(t)) {
            return partial <= qmax_;  // exact: nothing follows
        }
        if (shape_.family == AlgebraFamily::C && t == 0) {
            const long long l = shape_.rank;
            return l * partial - (l - 1) * tval <= l * qeff_;
        }
        return 2 * partial - tval <= 2 * qeff_;
    }

    long long extend_budget(size_t t, long long partial, long long t_prev) const {
        if (t == 0) {
            if (shape_.family == AlgebraFamily::C) {
                return shape_.rank * qeff_;
            }
            return shape_.rank == 1 ? qeff_ : 2 * qeff_;
        }
        const long long a = is_last(t) ? 2 : 1;
        const long long b = 2 * (partial - qeff_);
        const long long d = 4 * kappa_sq_[t] * t_prev;
        const long long linear_max = b <= 0 ? -b / a : -1;
        if (d == 0) {
            return linear_max;
        }
        const long long disc = d * (d - 4 * a * b);
        if (disc < 0) {
            return linear_max;
        }
        long long s = (d - 2 * a * b + isqrt_floor(disc)) / (2 * a * a);
        auto viable = [&](long long x) {
            if (x < 0) return false;
            const long long lin = a * x + b;
            return lin <= 0 || lin * lin <= d * x;
        };
        while (viable(s + 1)) ++s;
        while (s >= 0 && !viable(s)) --s;
        return std::max(s, linear_max);
    }

    long long cross_term(size_t t) const {
        if (t == 0) {
            return 0;
        }
        const auto& prev = rows_[static_cast<size_t>(order_[t - 1])];
        const auto& cur = rows_[static_cast<size_t>(order_[t])];
        // In both folded pairs (B: colors l-1, l; C: colors l, l-1) the
        // previously processed color is the undoubled side dual_a.
        const CrossPairing pairing =
            kappa_sq_[t] == 2 ? CrossPairing::folded : CrossPairing::aligned;
        return quadratic_cross_color(prev, cur, pairing);
    }

    void step(size_t t, long long partial, long long t_prev) {
        grow(t, partial, extend_budget(t, partial, t_prev), 0);
    }

    // Extends the row list of the color at step t; every prefix is also
    // closed and handed to the next step.
    void grow(size_t t, long long partial, long long t_budget, long long t_cur) {
        std::vector<int>& rows = rows_[static_cast<size_t>(order_[t])];
        const long long partial_t = partial + t_cur - cross_term(t);
        if (close_viable(t, partial_t, t_cur)) {
            if (is_last(t)) {
                out_.push_back({DualChargeType{rows_}, partial_t});
            } else {
                step(t + 1, partial_t, t_cur);
            }
        }
        const std::optional<int> limit = row_limit(shape_, order_[t]);
        if (limit && static_cast<int>(rows.size()) >= *limit) {
            return;
        }
        long long maxrow = rows.empty() ? std::numeric_limits<int>::max() : rows.back();
        for (long long r = 1; r <= maxrow; ++r) {
            const long long t_new = t_cur + r * r;
            if (t_new > t_budget) {
                break;
            }
            rows.push_back(static_cast<int>(r));
            grow(t, partial, t_budget, t_new);
            rows.pop_back();
        }
    }

    FermionicShape shape_;
    long long qmax_;
    long long qeff_;
    std::vector<int> order_;
    std::vector<int> kappa_sq_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<DualChargeType, long long>> out_;
};

}  // namespace

long long quadratic_exponent(const DualChargeType& R, const FermionicShape& shape) {
    validate_fermionic_shape(shape);
    validate_dual_charge_type(R, shape);
    long long q = 0;
    for (const auto& rows : R.rows) {
        q += quadratic_same_color(rows);
    }
    for (const Coupling& c : couplings_of(shape.family, shape.rank)) {
        q -= quadratic_cross_color(R.rows[static_cast<size_t>(c.a)],
                                   R.rows[static_cast<size_t>(c.b)], c.pairing);
    }
    return q;
}

std::vector<std::pair<DualChargeType, long long>> enumerate_dual_charge_types(
    const FermionicShape& shape, int qmax, const EnumerateOptions& options) {
    validate_fermionic_shape(shape);
    if (qmax < 0) {
        throw std::invalid_argument("qmax must be >= 0");
    }
    if (options.bound_margin < 0) {
        throw std::invalid_argument("bound_margin must be >= 0");
    }

    auto run_once = [&](int margin) {
        RowSearch search(shape, qmax, margin);
        auto result = search.run();
        std::sort(result.begin(), result.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return result;
    };

    auto result = run_once(options.bound_margin);
    if (options.saturation_check) {
        if (run_once(options.bound_margin + 2) != result) {
            throw std::logic_error(
                "saturation self-check failed: widening the search bounds changed the "
                "enumeration");
        }
    }
    return result;
}

TruncatedSeries fermionic_character(const FermionicShape& shape, int qmax) {
    validate_fermionic_shape(shape);
    TruncatedSeries out(shape.rank, qmax);
    std::map<int, TruncatedSeries> poch_cache;
    auto poch = [&](int d) -> const TruncatedSeries& {
        auto it = poch_cache.find(d);
        if (it == poch_cache.end()) {
            it = poch_cache.emplace(d, pochhammer_inverse(d, shape.rank, qmax)).first;
        }
        return it->second;
    };
    for (const auto& [R, q] : enumerate_dual_charge_types(shape, qmax)) {
        std::vector<int> color_type(static_cast<size_t>(shape.rank), 0);
        for (int i = 0; i < shape.rank; ++i) {
            for (int r : R.rows[static_cast<size_t>(i)]) {
                color_type[static_cast<size_t>(i)] += r;
            }
        }
        TruncatedSeries term = TruncatedSeries::monomial(
            shape.rank, qmax, {static_cast<int>(q), color_type}, 1);
        for (const auto& rows : R.rows) {
            for (size_t s = 0; s < rows.size(); ++s) {
                const int next = s + 1 < rows.size() ? rows[s + 1] : 0;
                const int d = rows[s] - next;
                if (d > 0) {
                    term = mul(term, poch(d));
                }
            }
        }
        // Accumulate in place; rebuilding the sum per type would copy the
        // whole accumulator once per dual-charge-type.
        for (const auto& [e, c] : term.terms()) {
            out.add_term(e, c);
        }
    }
    return out;
}

TruncatedSeries bosonic_character_verma(const RootSystem& rs, int qmax) {
    validate_root_system(rs);
    if (qmax < 0) {
        throw std::invalid_argument("qmax must be >= 0");
    }
    TruncatedSeries out = TruncatedSeries::constant(rs.rank, qmax, 1);
    for (const RootCoords& alpha : positive_roots(rs)) {
        for (int m = 1; m <= qmax; ++m) {
            out = mul(out, inv_one_minus_monomial({m, alpha}, rs.rank, qmax));
        }
    }
    return out;
}

TruncatedSeries pbw_monomial_count_verma(const RootSystem& rs, int qmax) {
    validate_root_system(rs);
    if (qmax < 0) {
        throw std::invalid_argument("qmax must be >= 0");
    }
    const std::vector<RootCoords> roots = positive_roots(rs);
    TruncatedSeries out(rs.rank, qmax);
    ExponentVector cur{0, std::vector<int>(static_cast<size_t>(rs.rank), 0)};

    // One multiset of (root, mode) per leaf: modes of each root are chosen
    // weakly increasing, so distinct leaves are distinct multisets.
    std::function<void(size_t)> pick_root = [&](size_t idx) {
        if (idx == roots.size()) {
            out.add_term(cur, 1);
            return;
        }
        std::function<void(int)> pick_modes = [&](int min_mode) {
            pick_root(idx + 1);
            for (int m = min_mode; cur.dq + m <= qmax; ++m) {
                cur.dq += m;
                for (int i = 0; i < rs.rank; ++i) {
                    cur.dy[static_cast<size_t>(i)] += roots[idx][static_cast<size_t>(i)];
                }
                pick_modes(m);
                cur.dq -= m;
                for (int i = 0; i < rs.rank; ++i) {
                    cur.dy[static_cast<size_t>(i)] -= roots[idx][static_cast<size_t>(i)];
                }
            }
        };
        pick_modes(1);
    };
    pick_root(0);
    return out;
}

ComparisonReport verify_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.rank() != b.rank()) {
        throw std::invalid_argument("cannot compare series of different rank");
    }
    if (a.qmax() != b.qmax()) {
        throw std::invalid_argument("cannot compare series of different truncation order");
    }
    ComparisonReport report;
    report.qmax = a.qmax();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            report.first_mismatch = {ia->first, ia->second, 0};
            return report;
        }
        if (ia == a.terms().end() || ib->first < ia->first) {
            report.first_mismatch = {ib->first, 0, ib->second};
            return report;
        }
        if (ia->second != ib->second) {
            report.first_mismatch = {ia->first, ia->second, ib->second};
            return report;
        }
        ++ia;
        ++ib;
    }
    report.equal = true;
    return report;
}

}  // namespace qpchar
