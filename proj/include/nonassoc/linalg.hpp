#pragma once

// Dense exact linear algebra over rationals: elimination, rank, determinant,
// nullspaces, linear solves, characteristic/minimal polynomials and rational
// root extraction. Everything is exact; no floating point.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace nonassoc {

using RatVector = std::vector<Rational>;

class RatMatrix {
   public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        RatMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        RatMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
        RatMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
        return r;
    }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    RatVector apply(const RatVector& v) const {
        RatVector r(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    RatMatrix transpose() const {
        RatMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        Rational t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // In-place reduced row echelon form. Returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t lead = 0;
        for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
            std::size_t sel = lead;
            while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != lead)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap((*this)(sel, j), (*this)(lead, j));
            Rational inv = (*this)(lead, col);
            for (std::size_t j = 0; j < cols_; ++j) (*this)(lead, j) /= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == lead) continue;
                Rational f = (*this)(i, col);
                if (f == 0) continue;
                for (std::size_t j = 0; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(lead, j);
            }
            pivots.push_back(col);
            ++lead;
        }
        return pivots;
    }

    std::size_t rank() const {
        RatMatrix c = *this;
        return c.rref().size();
    }

    Rational det() const {
        if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
        RatMatrix m = *this;
        Rational d(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t sel = col;
            while (sel < rows_ && m(sel, col) == 0) ++sel;
            if (sel == rows_) return Rational(0);
            if (sel != col) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
                d = -d;
            }
            d *= m(col, col);
            Rational inv = m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                Rational f = m(i, col) / inv;
                if (f == 0) continue;
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    // Basis of {v : Mv = 0}, one vector per free column.
    std::vector<RatVector> nullspace() const {
        RatMatrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<RatVector> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            RatVector v(cols_, Rational(0));
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One solution of Mx = b, or nullopt if inconsistent.
    std::optional<RatVector> solve(const RatVector& b) const {
        RatMatrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        RatVector x(cols_, Rational(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
        return x;
    }

    std::optional<RatMatrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        RatMatrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = 1;
        }
        auto pivots = aug.rref();
        if (pivots.size() != rows_ || pivots.back() != rows_ - 1) return std::nullopt;
        RatMatrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

   private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Monic characteristic polynomial coefficients c (low degree first, c.back()=1)
// via the Faddeev–LeVerrier recurrence.
inline RatVector char_poly(const RatMatrix& m) {
    std::size_t n = m.rows();
    RatVector c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix mk = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational ck = -mk.trace() / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

// All rational roots of a rational-coefficient polynomial (low degree first),
// with multiplicity stripped (each root listed once). Also reports whether the
// polynomial splits into rational linear factors.
struct RationalRoots {
    std::vector<Rational> roots;
    bool splits_completely = false;
};

inline Rational poly_eval(const RatVector& c, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

inline RationalRoots rational_roots(RatVector c) {
    RationalRoots out;
    // Strip trailing zero coefficients (degree detection).
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.size() == 1) return out;
    // Clear denominators to integer coefficients.
    Integer lcm(1);
    for (const auto& q : c) {
        Integer d = q.get_den();
        Integer g = gcd(lcm, d);
        lcm = lcm / g * d;
    }
    std::vector<Integer> ic;
    ic.reserve(c.size());
    for (const auto& q : c) ic.push_back(Integer(q * Rational(lcm)));
    // Root 0 first.
    RatVector work = c;
    auto deflate = [&work](const Rational& r) {
        // Synthetic division by (x - r); assumes r is a root.
        RatVector q(work.size() - 1, Rational(0));
        Rational carry = work.back();
        for (std::size_t i = work.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = work[i] + r * carry;
        }
        work = std::move(q);
    };
    // Candidate roots p/q with p | constant term, q | leading coefficient.
    std::size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    std::vector<Rational> candidates;
    candidates.push_back(Rational(0));
    if (lo < ic.size()) {
        Integer a0 = abs(ic[lo]);
        Integer an = abs(ic.back());
        // Divisor enumeration is only affordable for modest coefficients; for
        // larger ones fall back to a fixed grid of small-height candidates.
        const Integer cap(1000000);
        if (a0 <= cap && an <= cap) {
            std::vector<Integer> ps, qs;
            for (Integer d(1); d * d <= a0; ++d)
                if (a0 % d == 0) {
                    ps.push_back(d);
                    ps.push_back(a0 / d);
                }
            for (Integer d(1); d * d <= an; ++d)
                if (an % d == 0) {
                    qs.push_back(d);
                    qs.push_back(an / d);
                }
            for (const auto& p : ps)
                for (const auto& q : qs) {
                    Rational r = make_rational(p, q);
                    candidates.push_back(r);
                    candidates.push_back(-r);
                }
        } else {
            for (long p = 1; p <= 24; ++p)
                for (long q = 1; q <= 24; ++q) {
                    Rational r = make_rational(p, q);
                    candidates.push_back(r);
                    candidates.push_back(-r);
                }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        if (work.size() <= 1) break;
        if (poly_eval(work, r) != 0) continue;
        out.roots.push_back(r);
        while (work.size() > 1 && poly_eval(work, r) == 0) deflate(r);
    }
    out.splits_completely = (work.size() <= 1);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

// Exact polynomial division; returns remainder of a / b (coefficients low first).
inline RatVector poly_mod(RatVector a, const RatVector& b) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    RatVector d = b;
    while (d.size() > 1 && d.back() == 0) d.pop_back();
    if (d.size() == 1 && d[0] == 0) throw std::invalid_argument("polynomial division by zero");
    while (a.size() >= d.size() && !(a.size() == 1 && a[0] == 0)) {
        Rational f = a.back() / d.back();
        std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= f * d[i];
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (a.size() < d.size()) break;
    }
    return a;
}

}  // namespace nonassoc
