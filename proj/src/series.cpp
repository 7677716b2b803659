#include "qpchar/series.hpp"

#include <stdexcept>
#include <string>

namespace qpchar {

namespace {

void check_shape(int rank, int qmax) {
    if (rank < 1) {
        throw std::invalid_argument("series rank must be >= 1, got " + std::to_string(rank));
    }
    if (qmax < 0) {
        throw std::invalid_argument("series qmax must be >= 0, got " + std::to_string(qmax));
    }
}

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.rank() != b.rank() || a.qmax() != b.qmax()) {
        throw std::invalid_argument(
            "series shape mismatch: (rank " + std::to_string(a.rank()) + ", qmax " +
            std::to_string(a.qmax()) + ") vs (rank " + std::to_string(b.rank()) + ", qmax " +
            std::to_string(b.qmax()) + ")");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int rank, int qmax) : rank_(rank), qmax_(qmax) {
    check_shape(rank, qmax);
}

TruncatedSeries TruncatedSeries::constant(int rank, int qmax, Coeff c) {
    TruncatedSeries s(rank, qmax);
    s.add_term(ExponentVector{0, std::vector<int>(static_cast<size_t>(rank), 0)}, c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int rank, int qmax, const ExponentVector& e, Coeff c) {
    TruncatedSeries s(rank, qmax);
    s.add_term(e, c);
    return s;
}

void TruncatedSeries::check_exponent(const ExponentVector& e) const {
    if (static_cast<int>(e.dy.size()) != rank_) {
        throw std::invalid_argument("exponent has " + std::to_string(e.dy.size()) +
                                    " y-entries, series rank is " + std::to_string(rank_));
    }
    if (e.dq < 0) {
        throw std::invalid_argument("negative q-exponent " + std::to_string(e.dq));
    }
    for (int d : e.dy) {
        if (d < 0) {
            throw std::invalid_argument("negative y-exponent " + std::to_string(d));
        }
    }
}

Coeff TruncatedSeries::coefficient(const ExponentVector& e) const {
    check_exponent(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void TruncatedSeries::add_term(const ExponentVector& e, const Coeff& c) {
    check_exponent(e);
    if (c == 0 || e.dq > qmax_) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries out = a;
    for (const auto& [e, c] : b.terms()) {
        out.add_term(e, c);
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries out(a.rank(), a.qmax());
    ExponentVector e;
    e.dy.resize(static_cast<size_t>(a.rank()));
    for (const auto& [ea, ca] : a.terms()) {
        const int budget = a.qmax() - ea.dq;
        for (const auto& [eb, cb] : b.terms()) {
            // Terms are sorted by dq first, so once b's dq exceeds the
            // remaining budget no later term of b can contribute.
            if (eb.dq > budget) {
                break;
            }
            e.dq = ea.dq + eb.dq;
            for (size_t i = 0; i < e.dy.size(); ++i) {
                e.dy[i] = ea.dy[i] + eb.dy[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

TruncatedSeries inv_one_minus_monomial(const ExponentVector& m, int rank, int qmax) {
    check_shape(rank, qmax);
    TruncatedSeries out(rank, qmax);
    // Validate m against the target shape before using it.
    TruncatedSeries probe(rank, qmax);
    probe.add_term(m, 1);
    if (m.dq < 1) {
        throw std::domain_error("cannot invert 1 - m for a monomial of q-degree 0");
    }
    ExponentVector e{0, std::vector<int>(static_cast<size_t>(rank), 0)};
    for (int k = 0; k * m.dq <= qmax; ++k) {
        e.dq = k * m.dq;
        for (size_t i = 0; i < e.dy.size(); ++i) {
            e.dy[i] = k * m.dy[i];
        }
        out.add_term(e, 1);
    }
    return out;
}

TruncatedSeries pochhammer_inverse(int r, int rank, int qmax) {
    check_shape(rank, qmax);
    if (r < 0) {
        throw std::invalid_argument("pochhammer_inverse needs r >= 0, got " + std::to_string(r));
    }
    TruncatedSeries out = TruncatedSeries::constant(rank, qmax, 1);
    ExponentVector m{0, std::vector<int>(static_cast<size_t>(rank), 0)};
    // Factors with j > qmax only contribute their leading 1.
    for (int j = 1; j <= r && j <= qmax; ++j) {
        m.dq = j;
        out = mul(out, inv_one_minus_monomial(m, rank, qmax));
    }
    return out;
}

TruncatedSeries specialize_y(const TruncatedSeries& s) {
    TruncatedSeries out(s.rank(), s.qmax());
    ExponentVector e{0, std::vector<int>(static_cast<size_t>(s.rank()), 0)};
    for (const auto& [es, c] : s.terms()) {
        e.dq = es.dq;
        out.add_term(e, c);
    }
    return out;
}

}  // namespace qpchar
