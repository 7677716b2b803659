#pragma once

// Truncated multivariate formal power series over exact integers.
//
// A series lives in Z[y_1..y_l][[q]] truncated at a fixed q-degree qmax:
// terms with q-degree > qmax are discarded, y-degrees are never truncated.
// Every operation keeps the term map canonical (no explicit zeros), so
// operator== is semantic equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <vector>

namespace qpchar {

// Exact integer coefficient type. Graded dimensions grow fast enough that
// 64-bit overflow is a real risk at larger qmax, so everything is exact.
using Coeff = boost::multiprecision::cpp_int;

// Exponent of a single monomial q^dq * y_1^dy[0] * ... * y_l^dy[l-1].
// Ordering is lexicographic on (dq, dy), which is also the order used for
// serialization and for reporting the first mismatch between two series.
struct ExponentVector {
    int dq = 0;
    std::vector<int> dy;

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

class TruncatedSeries {
  public:
    // The zero series in rank variables truncated at qmax.
    TruncatedSeries(int rank, int qmax);

    static TruncatedSeries constant(int rank, int qmax, Coeff c);
    static TruncatedSeries monomial(int rank, int qmax, const ExponentVector& e, Coeff c);

    int rank() const { return rank_; }
    int qmax() const { return qmax_; }

    // Canonical term map: sorted by (dq, dy), no zero coefficients,
    // every key has dq in [0, qmax] and dy of length rank with entries >= 0.
    const std::map<ExponentVector, Coeff>& terms() const { return terms_; }

    // Coefficient of e, zero if absent. Throws std::invalid_argument if e
    // is malformed for this series (wrong rank or negative exponents).
    Coeff coefficient(const ExponentVector& e) const;

    // Adds c * q^e.dq * y^e.dy. Terms beyond the truncation order are
    // dropped; a cancellation that reaches zero removes the key.
    void add_term(const ExponentVector& e, const Coeff& c);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    int rank_;
    int qmax_;
    std::map<ExponentVector, Coeff> terms_;

    void check_exponent(const ExponentVector& e) const;
};

// Sum and product. Both operands must agree on rank and qmax; a mismatch is
// a structural error (std::invalid_argument), not a value-level one.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Expansion of 1 / (1 - q^m.dq * y^m.dy) = sum_{k>=0} (q^dq y^dy)^k up to
// the truncation order. Requires m.dq >= 1 so the geometric series is
// well-defined under truncation; m.dq == 0 throws std::domain_error.
TruncatedSeries inv_one_minus_monomial(const ExponentVector& m, int rank, int qmax);

// Expansion of 1 / ((1-q)(1-q^2)...(1-q^r)), the generating function for
// partitions into parts of size at most r (equivalently, at most r parts).
// r == 0 gives the constant series 1.
TruncatedSeries pochhammer_inverse(int r, int rank, int qmax);

// Substitutes y_i = 1 for every i, collapsing all terms of equal q-degree.
TruncatedSeries specialize_y(const TruncatedSeries& s);

}  // namespace qpchar
