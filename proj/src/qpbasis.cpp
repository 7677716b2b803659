#include "qpchar/qpbasis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpchar {

Level Level::finite(int k) {
    if (k < 1) {
        throw std::invalid_argument("finite level must be >= 1, got " + std::to_string(k));
    }
    return Level(false, k);
}

Level Level::verma() { return Level(true, 0); }

int Level::k() const {
    if (verma_) {
        throw std::logic_error("the Verma case has no finite level");
    }
    return k_;
}

void validate_subspace_spec(const SubspaceSpec& spec) {
    validate_root_system({spec.family, spec.rank});
}

void validate_monomial(const QuasiParticleMonomial& mono, int rank) {
    if (static_cast<int>(mono.colors.size()) != rank) {
        throw std::invalid_argument("monomial has " + std::to_string(mono.colors.size()) +
                                    " colors, expected " + std::to_string(rank));
    }
    for (const auto& color : mono.colors) {
        for (size_t p = 0; p < color.size(); ++p) {
            if (color[p].charge < 1) {
                throw std::invalid_argument("quasi-particle charges must be >= 1");
            }
            if (p > 0) {
                if (color[p].charge > color[p - 1].charge) {
                    throw std::invalid_argument("charges within a color must be weakly decreasing");
                }
                if (color[p].charge == color[p - 1].charge &&
                    color[p].energy > color[p - 1].energy) {
                    throw std::invalid_argument(
                        "energies among equal charges must be weakly decreasing");
                }
            }
        }
    }
}

Partition charge_type(const QuasiParticleMonomial& mono, int color) {
    validate_monomial(mono, static_cast<int>(mono.colors.size()));
    if (color < 0 || color >= static_cast<int>(mono.colors.size())) {
        throw std::invalid_argument("color index " + std::to_string(color) + " out of range");
    }
    Partition parts;
    for (const auto& particle : mono.colors[static_cast<size_t>(color)]) {
        parts.push_back(particle.charge);
    }
    return parts;
}

std::vector<int> dual_charge_type(const QuasiParticleMonomial& mono, int color) {
    return conjugate(charge_type(mono, color));
}

DualChargeType full_dual_charge_type(const QuasiParticleMonomial& mono) {
    DualChargeType d;
    for (int i = 0; i < static_cast<int>(mono.colors.size()); ++i) {
        d.rows.push_back(dual_charge_type(mono, i));
    }
    return d;
}

GradedWeight graded_weight(const QuasiParticleMonomial& mono) {
    validate_monomial(mono, static_cast<int>(mono.colors.size()));
    GradedWeight w;
    for (const auto& color : mono.colors) {
        int r = 0;
        for (const auto& particle : color) {
            w.total_degree -= particle.energy;
            r += particle.charge;
        }
        w.color_type.push_back(r);
    }
    return w;
}

namespace {

// Largest allowed charge for a color at a finite level; -1 = unbounded.
int charge_cap(const SubspaceSpec& spec, int color) {
    if (spec.level.is_verma()) {
        return -1;
    }
    const int k = spec.level.k();
    const bool last = color == spec.rank - 1;
    switch (spec.family) {
        case AlgebraFamily::A: return k;
        case AlgebraFamily::B: return last ? 2 * k : k;
        case AlgebraFamily::C: return last ? k : 2 * k;
    }
    throw std::logic_error("unreachable family tag");
}

// The color whose charges enter a given color's energy bound, and the
// factor applied to the partner charges inside the min.
struct Partner {
    int color = -1;
    int factor = 1;
};

Partner partner_of(AlgebraFamily family, int rank, int color) {
    switch (family) {
        case AlgebraFamily::A:
            return {color - 1, 1};
        case AlgebraFamily::B:
            if (color == rank - 1) return {rank - 2, 2};
            return {color - 1, 1};
        case AlgebraFamily::C:
            if (color == rank - 1) return {-1, 1};
            if (color == rank - 2) return {rank - 1, 2};
            return {color + 1, 1};
    }
    throw std::logic_error("unreachable family tag");
}

// Upper bound on m for particle p (0-based) of `color`, given every
// color's charge partition.
long long energy_bound(AlgebraFamily family, int rank, const std::vector<Partition>& charges,
                       int color, size_t p) {
    const auto& own = charges[static_cast<size_t>(color)];
    const long long n = own[p];
    long long bound = -n;
    const Partner par = partner_of(family, rank, color);
    if (par.color >= 0) {
        for (int q : charges[static_cast<size_t>(par.color)]) {
            bound += std::min(static_cast<long long>(par.factor) * q, n);
        }
    }
    for (size_t pp = 0; pp < p; ++pp) {
        bound -= 2 * std::min<long long>(own[pp], n);
    }
    return bound;
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

// Charge-configuration search.
//
// Colors are processed from the uncoupled end (B/A: 1..l, C: l..1) so each
// energy bound only references already-chosen charges. For a charge list
// lambda write S(lambda) = sum_p (2p-1) n_p, the minimal energy total the
// color can reach on its own. The exact minimal total degree of a full
// configuration is sum_i S(lambda_i) - sum of cross-color min-sums, one per
// coupled pair. Pruning rests on two facts:
//
//  * Cauchy-Schwarz on conjugate rows: an aligned cross term is at most
//    sqrt(S_a S_b) and a folded one at most sqrt(2 S_a S_b).
//  * Chasing that bound down the remaining chain shows the unprocessed
//    colors can lower the total by at most S_t/2 once at least one coupled
//    step remains (and not at all after the last), while for C the first
//    processed color admits the telescoped bound total >= S/l.
//
// All viability tests below are these inequalities with the square roots
// eliminated by squaring, evaluated in 64-bit integers.
class ChargeSearch {
  public:
    ChargeSearch(const SubspaceSpec& spec, int qmax, int margin)
        : spec_(spec), qmax_(qmax), qeff_(static_cast<long long>(qmax) + margin) {
        if (spec.family == AlgebraFamily::C) {
            for (int i = spec.rank - 1; i >= 0; --i) order_.push_back(i);
        } else {
            for (int i = 0; i < spec.rank; ++i) order_.push_back(i);
        }
        kappa_sq_.assign(order_.size(), 0);
        for (size_t t = 1; t < order_.size(); ++t) {
            const int cur = order_[t];
            const bool folded = (spec.family == AlgebraFamily::B && cur == spec.rank - 1) ||
                                (spec.family == AlgebraFamily::C && cur == spec.rank - 2);
            kappa_sq_[t] = folded ? 2 : 1;
        }
    }

    struct Config {
        std::vector<Partition> charges;
        long long min_degree;
    };

    std::vector<Config> run() {
        charges_.assign(static_cast<size_t>(spec_.rank), {});
        out_.clear();
        step(0, 0, 0);
        return std::move(out_);
    }

  private:
    bool is_last(size_t t) const { return t + 1 == order_.size(); }

    // True when a configuration whose processed part reaches `partial`
    // with S(last processed color) = s can still finish within qeff_.
    bool close_viable(size_t t, long long partial, long long s) const {
        if (is_last(t)) {
            return partial <= qmax_;  // exact: nothing follows
        }
        if (spec_.family == AlgebraFamily::C && t == 0) {
            const long long l = spec_.rank;
            return l * partial - (l - 1) * s <= l * qeff_;
        }
        return 2 * partial - s <= 2 * qeff_;
    }

    // Largest S(lambda) the color at step t can carry and still admit some
    // completion, given the exact partial sum and the previous color's S.
    long long extend_budget(size_t t, long long partial, long long s_prev) const {
        if (t == 0) {
            if (spec_.family == AlgebraFamily::C) {
                return spec_.rank * qeff_;
            }
            return spec_.rank == 1 ? qeff_ : 2 * qeff_;
        }
        const long long a = is_last(t) ? 2 : 1;
        const long long b = 2 * (partial - qeff_);
        const long long d = 4 * kappa_sq_[t] * s_prev;
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
        const auto& prev = charges_[static_cast<size_t>(order_[t - 1])];
        const auto& cur = charges_[static_cast<size_t>(order_[t])];
        // In both folded couplings (B: colors l-1 into l; C: l into l-1)
        // the previously processed color is the doubled side.
        const CrossDoubling doubling =
            kappa_sq_[t] == 2 ? CrossDoubling::double_a : CrossDoubling::none;
        return minsum_cross_color(prev, cur, doubling);
    }

    void step(size_t t, long long partial, long long s_prev) {
        grow(t, partial, extend_budget(t, partial, s_prev), 0);
    }

    // Extends the partition of the color at step t; every prefix is also
    // closed and handed to the next step.
    void grow(size_t t, long long partial, long long s_budget, long long s_cur) {
        Partition& lam = charges_[static_cast<size_t>(order_[t])];
        const long long partial_t = partial + s_cur - cross_term(t);
        if (close_viable(t, partial_t, s_cur)) {
            if (is_last(t)) {
                out_.push_back({charges_, partial_t});
            } else {
                step(t + 1, partial_t, s_cur);
            }
        }
        const int cap = charge_cap(spec_, order_[t]);
        long long maxpart = lam.empty() ? std::numeric_limits<int>::max() : lam.back();
        if (cap >= 0) {
            maxpart = std::min<long long>(maxpart, cap);
        }
        const long long weight = 2 * static_cast<long long>(lam.size()) + 1;
        for (long long n = 1; n <= maxpart; ++n) {
            const long long s_new = s_cur + weight * n;
            if (s_new > s_budget) {
                break;
            }
            lam.push_back(static_cast<int>(n));
            grow(t, partial, s_budget, s_new);
            lam.pop_back();
        }
    }

    SubspaceSpec spec_;
    long long qmax_;
    long long qeff_;
    std::vector<int> order_;
    std::vector<int> kappa_sq_;
    std::vector<Partition> charges_;
    std::vector<Config> out_;
};

// Expands one charge configuration into monomials. Setting every energy to
// its upper bound realizes the minimal degree exactly (equal-charge bounds
// drop by 2n step to step, meeting the gap condition with equality), and
// every admissible energy assignment is the maximal one minus nonnegative
// per-particle excesses that are weakly increasing along equal-charge runs.
void expand_energies(const SubspaceSpec& spec, const ChargeSearch::Config& cfg, int qmax,
                     std::vector<QuasiParticleMonomial>& out) {
    struct Slot {
        int color;
        int charge;
        long long bound;
        bool continues_run;  // same charge as the previous slot of this color
    };
    std::vector<Slot> slots;
    for (int i = 0; i < spec.rank; ++i) {
        const auto& lam = cfg.charges[static_cast<size_t>(i)];
        for (size_t p = 0; p < lam.size(); ++p) {
            slots.push_back({i, lam[p], energy_bound(spec.family, spec.rank, cfg.charges, i, p),
                             p > 0 && lam[p] == lam[p - 1]});
        }
    }
    const long long slack = qmax - cfg.min_degree;
    std::vector<long long> excess(slots.size(), 0);

    std::vector<std::vector<QuasiParticle>> colors(static_cast<size_t>(spec.rank));
    auto emit = [&]() {
        for (auto& c : colors) {
            c.clear();
        }
        for (size_t idx = 0; idx < slots.size(); ++idx) {
            colors[static_cast<size_t>(slots[idx].color)].push_back(
                {slots[idx].charge, static_cast<int>(slots[idx].bound - excess[idx])});
        }
        out.push_back({colors});
    };

    std::function<void(size_t, long long)> rec = [&](size_t idx, long long used) {
        if (idx == slots.size()) {
            emit();
            return;
        }
        const long long lo = slots[idx].continues_run ? excess[idx - 1] : 0;
        for (long long e = lo; used + e <= slack; ++e) {
            excess[idx] = e;
            rec(idx + 1, used + e);
        }
    };
    rec(0, 0);
}

}  // namespace

bool is_admissible(const QuasiParticleMonomial& mono, const SubspaceSpec& spec) {
    validate_subspace_spec(spec);
    validate_monomial(mono, spec.rank);

    std::vector<Partition> charges;
    for (int i = 0; i < spec.rank; ++i) {
        charges.push_back(charge_type(mono, i));
    }
    for (int i = 0; i < spec.rank; ++i) {
        const int cap = charge_cap(spec, i);
        const auto& color = mono.colors[static_cast<size_t>(i)];
        for (size_t p = 0; p < color.size(); ++p) {
            if (cap >= 0 && color[p].charge > cap) {
                return false;
            }
            if (color[p].energy > energy_bound(spec.family, spec.rank, charges, i, p)) {
                return false;
            }
            if (p > 0 && color[p].charge == color[p - 1].charge &&
                color[p].energy > color[p - 1].energy - 2 * color[p].charge) {
                return false;
            }
        }
    }
    return true;
}

std::vector<QuasiParticleMonomial> enumerate_admissible(const SubspaceSpec& spec, int qmax,
                                                        const EnumerateOptions& options) {
    validate_subspace_spec(spec);
    if (qmax < 0) {
        throw std::invalid_argument("qmax must be >= 0");
    }
    if (options.bound_margin < 0) {
        throw std::invalid_argument("bound_margin must be >= 0");
    }

    auto run_once = [&](int margin) {
        ChargeSearch search(spec, qmax, margin);
        std::vector<QuasiParticleMonomial> monomials;
        for (const auto& cfg : search.run()) {
            expand_energies(spec, cfg, qmax, monomials);
        }
        std::sort(monomials.begin(), monomials.end(),
                  [&](const QuasiParticleMonomial& a, const QuasiParticleMonomial& b) {
                      return compare(a, b, spec.family) < 0;
                  });
        return monomials;
    };

    std::vector<QuasiParticleMonomial> result = run_once(options.bound_margin);
    if (options.saturation_check) {
        if (run_once(options.bound_margin + 2) != result) {
            throw std::logic_error(
                "saturation self-check failed: widening the search bounds changed the "
                "enumeration");
        }
    }
    return result;
}

TruncatedSeries graded_dimension_series(const SubspaceSpec& spec, int qmax) {
    TruncatedSeries out(spec.rank, qmax);
    for (const auto& mono : enumerate_admissible(spec, qmax)) {
        const GradedWeight w = graded_weight(mono);
        out.add_term({static_cast<int>(w.total_degree), w.color_type}, 1);
    }
    return out;
}

std::strong_ordering compare(const QuasiParticleMonomial& a, const QuasiParticleMonomial& b,
                             AlgebraFamily family) {
    if (a.colors.size() != b.colors.size()) {
        throw std::invalid_argument("cannot compare monomials of different rank");
    }
    const int rank = static_cast<int>(a.colors.size());
    std::vector<int> order;
    if (family == AlgebraFamily::C) {
        for (int i = 0; i < rank; ++i) order.push_back(i);
    } else {
        for (int i = rank - 1; i >= 0; --i) order.push_back(i);
    }
    for (int i : order) {
        const auto& ca = a.colors[static_cast<size_t>(i)];
        const auto& cb = b.colors[static_cast<size_t>(i)];
        const size_t n = std::min(ca.size(), cb.size());
        for (size_t u = 0; u < n; ++u) {
            if (auto c = ca[u].charge <=> cb[u].charge; c != 0) {
                return c;
            }
        }
        if (auto c = ca.size() <=> cb.size(); c != 0) {
            return c;  // the exhausted color compares smaller
        }
    }
    for (int i : order) {
        const auto& ca = a.colors[static_cast<size_t>(i)];
        const auto& cb = b.colors[static_cast<size_t>(i)];
        for (size_t u = 0; u < ca.size(); ++u) {
            if (auto c = ca[u].energy <=> cb[u].energy; c != 0) {
                return c;
            }
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace qpchar
