#pragma once

// Quasi-particle monomial bases: admissibility conditions, exhaustive
// enumeration under a q-degree budget, and the resulting graded-dimension
// series. A monomial is a choice, per color i, of particles with positive
// charges n_{p,i} and integer energy indices m_{p,i}; the particle
// x_{n alpha_i}(m) contributes q^{-m} and y_i^{n} to the grading.

#include <compare>
#include <vector>

#include "qpchar/partitions.hpp"
#include "qpchar/rootsys.hpp"
#include "qpchar/series.hpp"

namespace qpchar {

// Either a finite level k >= 1 or the unbounded (generalized Verma) case.
class Level {
  public:
    static Level finite(int k);
    static Level verma();

    bool is_verma() const { return verma_; }
    // Only valid for finite levels.
    int k() const;

    friend bool operator==(const Level&, const Level&) = default;

  private:
    Level(bool verma, int k) : verma_(verma), k_(k) {}
    bool verma_;
    int k_;
};

struct SubspaceSpec {
    AlgebraFamily family;
    int rank;
    Level level;
};

// Rank bounds per family, level >= 1 when finite.
void validate_subspace_spec(const SubspaceSpec& spec);

struct QuasiParticle {
    int charge;  // n_{p,i} >= 1
    int energy;  // m_{p,i}; the particle contributes q^{-m}

    friend auto operator<=>(const QuasiParticle&, const QuasiParticle&) = default;
};

// colors[i] lists the particles of color i+1 with charges weakly
// decreasing; among equal charges the energies must be weakly decreasing
// (canonical form; admissibility then forces a strict gap).
struct QuasiParticleMonomial {
    std::vector<std::vector<QuasiParticle>> colors;

    friend bool operator==(const QuasiParticleMonomial&, const QuasiParticleMonomial&) = default;
};

struct GradedWeight {
    long long total_degree = 0;   // sum of -m over all particles
    std::vector<int> color_type;  // r_i = sum of charges of color i+1
};

// Throws std::invalid_argument unless mono has `rank` colors and satisfies
// the canonical-ordering invariants above.
void validate_monomial(const QuasiParticleMonomial& mono, int rank);

// Charge list of one color as a partition (largest first). `color` is a
// 0-based index; out of range throws std::invalid_argument.
Partition charge_type(const QuasiParticleMonomial& mono, int color);

// Conjugate of charge_type for one color.
std::vector<int> dual_charge_type(const QuasiParticleMonomial& mono, int color);

// All colors' conjugates bundled.
DualChargeType full_dual_charge_type(const QuasiParticleMonomial& mono);

GradedWeight graded_weight(const QuasiParticleMonomial& mono);

// Checks the level charge caps, the per-particle energy upper bounds
// (coupling each color to its partner color's charges), and the
// equal-charge gap m_{p+1} <= m_p - 2n. Malformed monomials throw;
// condition violations return false.
bool is_admissible(const QuasiParticleMonomial& mono, const SubspaceSpec& spec);

struct EnumerateOptions {
    // Widens every internal search bound without changing the output
    // contract; used by the saturation self-check.
    int bound_margin = 0;
    // Re-run with bound_margin + 2 and require identical output. Guards the
    // unbounded-charge (Verma) case against truncation leaks.
    bool saturation_check = true;
};

// Exactly the admissible monomials with total_degree <= qmax, each once,
// sorted ascending by `compare`.
std::vector<QuasiParticleMonomial> enumerate_admissible(const SubspaceSpec& spec, int qmax,
                                                        const EnumerateOptions& options = {});

// Sum of q^total_degree * prod_i y_i^{r_i} over enumerate_admissible.
TruncatedSeries graded_dimension_series(const SubspaceSpec& spec, int qmax);

// Total order on canonical monomials of one family and rank: lexicographic
// on per-color charge lists, colors traversed from the uncoupled end
// (B/A: color l down to 1; C: color 1 up to l), an exhausted color
// comparing smaller; ties broken the same way on energy lists.
std::strong_ordering compare(const QuasiParticleMonomial& a, const QuasiParticleMonomial& b,
                             AlgebraFamily family);

}  // namespace qpchar
