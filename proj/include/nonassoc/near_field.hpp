#pragma once

// One-sided distributive systems over binary64: the twisted quaternion
// near-field, twisted octonions, determinant-twisted matrix products, the
// symmetric product, distributor calculus, kernel/center probes, and the
// limit-product probe. Floating point is used because the twist factor
// involves log/exp; fixed tolerances and explicit seeds keep runs
// reproducible.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "octonion.hpp"
#include "rational.hpp"

namespace nonassoc {

struct spectrum_violation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Quaternions / octonions over double
// ---------------------------------------------------------------------------

struct ApproxQuaternion {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};  // basis (1, i, j, k)

    static ApproxQuaternion one() { return {{1.0, 0.0, 0.0, 0.0}}; }
    static ApproxQuaternion real(double r) { return {{r, 0.0, 0.0, 0.0}}; }

    ApproxQuaternion operator+(const ApproxQuaternion& o) const {
        ApproxQuaternion r;
        for (int k = 0; k < 4; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    ApproxQuaternion operator-(const ApproxQuaternion& o) const {
        ApproxQuaternion r;
        for (int k = 0; k < 4; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    ApproxQuaternion operator*(double s) const {
        ApproxQuaternion r;
        for (int k = 0; k < 4; ++k) r.c[k] = c[k] * s;
        return r;
    }
    ApproxQuaternion conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
    double norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }
    double abs() const { return std::sqrt(norm()); }
    bool is_zero(double eps = 0.0) const { return abs() <= eps; }
};

inline ApproxQuaternion quat_mul(const ApproxQuaternion& a, const ApproxQuaternion& b) {
    return {{a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
             a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
             a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
             a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0]}};
}

inline ApproxQuaternion quat_inv(const ApproxQuaternion& a) {
    double n = a.norm();
    return a.conj() * (1.0 / n);
}

inline double quat_dist(const ApproxQuaternion& a, const ApproxQuaternion& b) {
    return (a - b).abs();
}

struct ApproxOctonion {
    std::array<double, 8> c{};  // basis (1, e1..e7)

    static ApproxOctonion one() {
        ApproxOctonion r;
        r.c[0] = 1.0;
        return r;
    }
    ApproxOctonion operator+(const ApproxOctonion& o) const {
        ApproxOctonion r;
        for (int k = 0; k < 8; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    ApproxOctonion operator-(const ApproxOctonion& o) const {
        ApproxOctonion r;
        for (int k = 0; k < 8; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    ApproxOctonion operator*(double s) const {
        ApproxOctonion r;
        for (int k = 0; k < 8; ++k) r.c[k] = c[k] * s;
        return r;
    }
    ApproxOctonion conj() const {
        ApproxOctonion r = *this * -1.0;
        r.c[0] = c[0];
        return r;
    }
    double norm() const {
        double n = 0.0;
        for (int k = 0; k < 8; ++k) n += c[k] * c[k];
        return n;
    }
    double abs() const { return std::sqrt(norm()); }
};

inline ApproxOctonion oct_mul(const ApproxOctonion& a, const ApproxOctonion& b) {
    const auto& t = detail::oct_table();
    ApproxOctonion r;
    for (int i = 0; i < 8; ++i) {
        if (a.c[i] == 0.0) continue;
        for (int j = 0; j < 8; ++j) {
            if (b.c[j] == 0.0) continue;
            r.c[t.index[i][j]] += a.c[i] * b.c[j] * static_cast<double>(t.sign[i][j]);
        }
    }
    return r;
}

inline ApproxOctonion oct_inv(const ApproxOctonion& a) { return a.conj() * (1.0 / a.norm()); }

// ---------------------------------------------------------------------------
// Twisted quaternion near-field
// ---------------------------------------------------------------------------

struct NearFieldParams {
    double w = 1.0;
    ApproxQuaternion i_axis{{0.0, 1.0, 0.0, 0.0}};  // unit imaginary quaternion
    // The historical convention uses 1/w in the exponent instead of w.
    bool reciprocal_convention = false;

    double effective_w() const { return reciprocal_convention ? 1.0 / w : w; }
};

// P_xi = exp(i_axis * w * log N(xi)); unit modulus, so its inverse is the
// conjugate. The axis direction spans, together with 1, a commutative complex
// subfield of the quaternions.
inline ApproxQuaternion twist_factor(const ApproxQuaternion& xi, const NearFieldParams& p) {
    double theta = p.effective_w() * std::log(xi.norm());
    return ApproxQuaternion::one() * std::cos(theta) + p.i_axis * std::sin(theta);
}

inline ApproxQuaternion kalscheuer_mul(const ApproxQuaternion& xi, const ApproxQuaternion& eta,
                                       const NearFieldParams& p) {
    if (xi.is_zero() || eta.is_zero()) return ApproxQuaternion{};
    ApproxQuaternion P = twist_factor(xi, p);
    return quat_mul(quat_mul(xi, P), quat_mul(eta, P.conj()));
}

// n-th power of xi under the twisted product, closed form (xi*P)^n * P^{-n}.
inline ApproxQuaternion kalscheuer_power(const ApproxQuaternion& xi, unsigned n,
                                         const NearFieldParams& p) {
    if (n == 0) return ApproxQuaternion::one();
    if (xi.is_zero()) return ApproxQuaternion{};
    ApproxQuaternion P = twist_factor(xi, p);
    ApproxQuaternion base = quat_mul(xi, P);
    ApproxQuaternion acc = base;
    for (unsigned k = 1; k < n; ++k) acc = quat_mul(acc, base);
    ApproxQuaternion Pinv_n = ApproxQuaternion::one();
    for (unsigned k = 0; k < n; ++k) Pinv_n = quat_mul(Pinv_n, P.conj());
    return quat_mul(acc, Pinv_n);
}

// ---------------------------------------------------------------------------
// Twisted octonions: the parenthesized product xi * (P * eta * P^{-1})
// ---------------------------------------------------------------------------

struct TwistedOctonionParams {
    double w = 1.0;
    std::size_t i_axis_index = 1;  // which imaginary unit carries the twist
};

inline ApproxOctonion oct_twist_factor(const ApproxOctonion& xi, const TwistedOctonionParams& p) {
    double theta = p.w * std::log(xi.norm());
    ApproxOctonion P;
    P.c[0] = std::cos(theta);
    P.c[p.i_axis_index] = std::sin(theta);
    return P;
}

inline ApproxOctonion twisted_octonion_mul(const ApproxOctonion& xi, const ApproxOctonion& eta,
                                           const TwistedOctonionParams& p) {
    double n = xi.norm();
    if (n == 0.0 || eta.abs() == 0.0) return ApproxOctonion{};
    ApproxOctonion P = oct_twist_factor(xi, p);
    return oct_mul(xi, oct_mul(P, oct_mul(eta, P.conj())));
}

// Closed-form n-th power (xi*P)^n * P^{-n}, with the left-normed association
// for the alternative octonion product.
inline ApproxOctonion twisted_octonion_power(const ApproxOctonion& xi, unsigned n,
                                             const TwistedOctonionParams& p) {
    if (n == 0) return ApproxOctonion::one();
    if (xi.norm() == 0.0) return ApproxOctonion{};
    ApproxOctonion P = oct_twist_factor(xi, p);
    ApproxOctonion base = oct_mul(xi, P);
    ApproxOctonion acc = base;
    for (unsigned k = 1; k < n; ++k) acc = oct_mul(acc, base);
    for (unsigned k = 0; k < n; ++k) acc = oct_mul(acc, P.conj());
    return acc;
}

// ---------------------------------------------------------------------------
// Dense real matrices over double (for the determinant-twisted product)
// ---------------------------------------------------------------------------

struct DMatrix {
    std::size_t n = 0;
    std::vector<double> a;  // row-major

    DMatrix() = default;
    explicit DMatrix(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static DMatrix identity(std::size_t dim) {
        DMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }
    DMatrix operator+(const DMatrix& o) const {
        DMatrix r(n);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
        return r;
    }
    DMatrix operator-(const DMatrix& o) const {
        DMatrix r(n);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
        return r;
    }
    DMatrix operator*(double s) const {
        DMatrix r(n);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
        return r;
    }
    DMatrix operator*(const DMatrix& o) const {
        DMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                double v = (*this)(i, k);
                if (v == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }
    double max_abs() const {
        double m = 0.0;
        for (double v : a) m = std::max(m, std::fabs(v));
        return m;
    }
};

inline double dmat_dist(const DMatrix& x, const DMatrix& y) { return (x - y).max_abs(); }

// Determinant by partial-pivot LU.
inline double dmat_det(DMatrix m) {
    double det = 1.0;
    for (std::size_t k = 0; k < m.n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < m.n; ++i)
            if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
        if (m(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < m.n; ++j) std::swap(m(piv, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < m.n; ++i) {
            double f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < m.n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

// Matrix exponential by scaling-and-squaring over a Taylor series.
inline DMatrix dmat_exp(const DMatrix& m) {
    double scale = m.max_abs() * static_cast<double>(m.n);
    int squarings = 0;
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    double factor = std::ldexp(1.0, -squarings);
    DMatrix x = m * factor;
    DMatrix result = DMatrix::identity(m.n);
    DMatrix term = DMatrix::identity(m.n);
    for (int k = 1; k <= 24; ++k) {
        term = term * x * (1.0 / k);
        result = result + term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

// Characteristic polynomial coefficients c[0..n] (monic, c[0] = 1) by the
// Faddeev–LeVerrier trace recursion.
inline std::vector<double> dmat_char_poly(const DMatrix& m) {
    std::size_t n = m.n;
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    DMatrix mk = DMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        DMatrix am = m * mk;
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[k] = -tr / static_cast<double>(k);
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[k];
    }
    return c;
}

// Numeric gate for the twist generator: the spectrum must be purely imaginary
// and closed under negation. A spectrum symmetric under negation forces all
// odd characteristic coefficients to vanish; writing the even part as a
// polynomial in s = lambda^2, purely imaginary roots force factors (s + w^2),
// so every coefficient of that polynomial must be non-negative.
inline void validate_twist_generator(const DMatrix& mu, double tol = 1e-9) {
    std::vector<double> coeff = dmat_char_poly(mu);
    std::size_t n = mu.n;
    double norm = std::max(1.0, mu.max_abs());
    double scale = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        scale *= norm;
        if (k % 2 == 1 && std::fabs(coeff[k]) > tol * scale)
            throw spectrum_violation_error(
                "twist generator spectrum is not symmetric under negation");
        if (k % 2 == 0 && coeff[k] < -tol * scale)
            throw spectrum_violation_error("twist generator has non-imaginary eigenvalues");
    }
}

// Default twist generator: block-diagonal planar rotation generator with
// eigenvalues ±i (and one zero row when the dimension is odd).
inline DMatrix default_twist_generator(std::size_t n) {
    DMatrix mu(n);
    for (std::size_t b = 0; b + 1 < n; b += 2) {
        mu(b, b + 1) = -1.0;
        mu(b + 1, b) = 1.0;
    }
    return mu;
}

struct TwistedMatrixParams {
    double w = 1.0;
    DMatrix mu;           // validated twist generator
    double det_eps = 1e-12;  // |det| at or below this counts as zero

    static TwistedMatrixParams standard(std::size_t n, double w = 1.0) {
        TwistedMatrixParams p;
        p.w = w;
        p.mu = default_twist_generator(n);
        validate_twist_generator(p.mu);
        return p;
    }
};

inline DMatrix matrix_twist_factor(const DMatrix& xi, const TwistedMatrixParams& p) {
    double d = dmat_det(xi);
    if (std::fabs(d) <= p.det_eps) return DMatrix::identity(xi.n);
    return dmat_exp(p.mu * (p.w * std::log(std::fabs(d))));
}

inline DMatrix twisted_matrix_mul(const DMatrix& xi, const DMatrix& eta,
                                  const TwistedMatrixParams& p) {
    validate_twist_generator(p.mu);
    DMatrix P = matrix_twist_factor(xi, p);
    double d = dmat_det(xi);
    DMatrix Pinv = (std::fabs(d) <= p.det_eps)
                       ? DMatrix::identity(xi.n)
                       : dmat_exp(p.mu * (-p.w * std::log(std::fabs(d))));
    return xi * P * eta * Pinv;
}

// General twisted form xi × eta = xi · e^xi · eta · e^{−xi}.
inline DMatrix general_twisted_matrix_mul(const DMatrix& xi, const DMatrix& eta) {
    return xi * dmat_exp(xi) * eta * dmat_exp(xi * -1.0);
}

// ---------------------------------------------------------------------------
// Generic probes over any supplied magma multiplication
// ---------------------------------------------------------------------------

// xi ∘ eta = ½{(xi+eta)² − xi² − eta²}: the symmetric part of any product.
template <typename T, typename Mul>
T symmetric_product(const T& x, const T& y, Mul mul) {
    T s = x + y;
    return (mul(s, s) - mul(x, x) - mul(y, y)) * 0.5;
}

// Distributor [a,b;c] = (a+b)c − ac − bc: zero iff right-distributive at (a,b,c).
template <typename T, typename Mul>
T distributor(const T& a, const T& b, const T& c, Mul mul) {
    return mul(a + b, c) - mul(a, c) - mul(b, c);
}

struct LimitProbeReport {
    bool converged = false;
    ApproxQuaternion limit;                // meaningful when converged
    std::vector<double> tail_deviations;   // successive distances along the sequence
};

// Probes a × b = lim_{λ→0} (λa)b / λ under the twisted product along a
// decreasing λ sequence; convergence = Cauchy tail within tolerance.
inline LimitProbeReport limit_product_probe(const ApproxQuaternion& a, const ApproxQuaternion& b,
                                            const NearFieldParams& p,
                                            const std::vector<double>& lambda_sequence,
                                            double tol = 1e-8) {
    LimitProbeReport rep;
    std::vector<ApproxQuaternion> vals;
    for (double lam : lambda_sequence)
        vals.push_back(kalscheuer_mul(a * lam, b, p) * (1.0 / lam));
    for (std::size_t k = 1; k < vals.size(); ++k)
        rep.tail_deviations.push_back(quat_dist(vals[k], vals[k - 1]));
    std::size_t tail = std::min<std::size_t>(4, rep.tail_deviations.size());
    bool cauchy = tail > 0;
    for (std::size_t k = rep.tail_deviations.size() - tail; k < rep.tail_deviations.size(); ++k)
        if (rep.tail_deviations[k] > tol) cauchy = false;
    rep.converged = cauchy && !vals.empty();
    if (rep.converged) rep.limit = vals.back();
    return rep;
}

inline ApproxQuaternion random_quaternion(std::mt19937_64& rng, double radius = 2.0) {
    std::uniform_real_distribution<double> d(-radius, radius);
    ApproxQuaternion q;
    for (int k = 0; k < 4; ++k) q.c[k] = d(rng);
    return q;
}

inline ApproxOctonion random_octonion(std::mt19937_64& rng, double radius = 2.0) {
    std::uniform_real_distribution<double> d(-radius, radius);
    ApproxOctonion o;
    for (int k = 0; k < 8; ++k) o.c[k] = d(rng);
    return o;
}

// ---------------------------------------------------------------------------
// Kernel / center probes for the twisted quaternion near-field
// ---------------------------------------------------------------------------

struct KernelCenterReport {
    ApproxQuaternion candidate;
    double kernel_residual = 0.0;   // max |(x+y)×c − x×c − y×c| over trials
    double center_residual = 0.0;   // max |c×a − a×c| over trials
    bool in_kernel = false;
    bool in_center = false;
    double tolerance = 1e-10;
    // A witness that the rational scalar 2 commutes with nothing generic:
    // filled only by kernel_center_rational_witness below.
};

inline KernelCenterReport kernel_center_probe(const NearFieldParams& p,
                                              const ApproxQuaternion& candidate,
                                              unsigned trials = 200, std::uint64_t seed = 1,
                                              double tol = 1e-10) {
    KernelCenterReport rep;
    rep.candidate = candidate;
    rep.tolerance = tol;
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        ApproxQuaternion x = random_quaternion(rng);
        ApproxQuaternion y = random_quaternion(rng);
        ApproxQuaternion d = distributor(
            x, y, candidate,
            [&](const ApproxQuaternion& u, const ApproxQuaternion& v) {
                return kalscheuer_mul(u, v, p);
            });
        rep.kernel_residual = std::max(rep.kernel_residual, d.abs());
        ApproxQuaternion comm = kalscheuer_mul(candidate, x, p) - kalscheuer_mul(x, candidate, p);
        rep.center_residual = std::max(rep.center_residual, comm.abs());
    }
    rep.in_kernel = rep.kernel_residual < tol;
    rep.in_center = rep.center_residual < tol;
    return rep;
}

// Elements commuting with everything have the form r·exp(−i_axis·t·log|r|)
// with t twice the twist parameter: the twist of such an element is then
// exactly undone by its own phase.
inline ApproxQuaternion center_candidate(double r, const NearFieldParams& p) {
    double theta = -2.0 * p.effective_w() * std::log(std::fabs(r));
    return (ApproxQuaternion::one() * std::cos(theta) + p.i_axis * std::sin(theta)) * r;
}

struct RationalCenterWitness {
    ApproxQuaternion a;
    double commutator_norm = 0.0;
    bool found = false;
};

// Searches for a witness that the plain scalar 2 is NOT central: 2×a ≠ a×2.
inline RationalCenterWitness rational_two_center_witness(const NearFieldParams& p,
                                                         unsigned trials = 200,
                                                         std::uint64_t seed = 1,
                                                         double threshold = 1e-3) {
    RationalCenterWitness w;
    ApproxQuaternion two = ApproxQuaternion::real(2.0);
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        ApproxQuaternion a = random_quaternion(rng);
        if (a.is_zero(1e-9)) continue;
        double r = (kalscheuer_mul(two, a, p) - kalscheuer_mul(a, two, p)).abs();
        if (r > w.commutator_norm) {
            w.commutator_norm = r;
            w.a = a;
        }
    }
    w.found = w.commutator_norm > threshold;
    return w;
}

}  // namespace nonassoc
