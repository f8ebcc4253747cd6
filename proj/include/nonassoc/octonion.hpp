#pragma once

// Octonion kernel: basis multiplication generated from the seven quaternionic
// triples, conjugation, norm, the vector-matrix (Zorn) representation over
// complex scalars, and 8×8 regular-representation matrices.

#include <array>
#include <cstddef>

#include "linalg.hpp"
#include "rational.hpp"

namespace nonassoc {

namespace detail {

struct OctTable {
    // basis products: e_i e_j = sign[i][j] * e_{index[i][j]}
    int index[8][8];
    int sign[8][8];
};

inline const OctTable& oct_table() {
    static const OctTable table = [] {
        OctTable t{};
        // Unit row/column and diagonal.
        for (int i = 0; i < 8; ++i) {
            t.index[0][i] = i;
            t.sign[0][i] = 1;
            t.index[i][0] = i;
            t.sign[i][0] = 1;
            if (i > 0) {
                t.index[i][i] = 0;
                t.sign[i][i] = -1;
            }
        }
        // Seven ordered triples (a,b,c); within each, the units multiply like
        // quaternion units: ab=c, bc=a, ca=b, anti-commuting.
        constexpr int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                       {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
        for (const auto& tr : triples) {
            int a = tr[0], b = tr[1], c = tr[2];
            auto set = [&t](int i, int j, int k) {
                t.index[i][j] = k;
                t.sign[i][j] = 1;
                t.index[j][i] = k;
                t.sign[j][i] = -1;
            };
            set(a, b, c);
            set(b, c, a);
            set(c, a, b);
        }
        return t;
    }();
    return table;
}

}  // namespace detail

// Octonion over a commutative scalar type S (exact rationals, complex
// rationals, or binary64 for the approximate structures).
template <typename S>
struct Octonion {
    std::array<S, 8> c{};

    Octonion() {
        for (auto& x : c) x = S(0);
    }

    static Octonion basis(std::size_t i) {
        Octonion o;
        o.c[i] = S(1);
        return o;
    }
    static Octonion one() { return basis(0); }
    static Octonion scalar(const S& s) {
        Octonion o;
        o.c[0] = s;
        return o;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (!(x == S(0))) return false;
        return true;
    }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend Octonion operator*(const S& s, const Octonion& a) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        const auto& t = detail::oct_table();
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) {
            if (a.c[i] == S(0)) continue;
            for (std::size_t j = 0; j < 8; ++j) {
                if (b.c[j] == S(0)) continue;
                S term = a.c[i] * b.c[j];
                if (t.sign[i][j] < 0) term = -term;
                r.c[t.index[i][j]] = r.c[t.index[i][j]] + term;
            }
        }
        return r;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

    // x* = 2ξ₀ − x: negate every imaginary coordinate.
    Octonion conj() const {
        Octonion r = -*this;
        r.c[0] = c[0];
        return r;
    }

    // N(x) = x*x = sum of squared coordinates.
    S norm() const {
        S n(0);
        for (const auto& x : c) n = n + x * x;
        return n;
    }
};

using OctonionQ = Octonion<Rational>;

template <typename S>
Octonion<S> oct_commutator(const Octonion<S>& x, const Octonion<S>& y) {
    return x * y - y * x;
}

template <typename S>
Octonion<S> oct_associator(const Octonion<S>& x, const Octonion<S>& y, const Octonion<S>& z) {
    return (x * y) * z - x * (y * z);
}

// ---------------------------------------------------------------------------
// Vector-matrix (Zorn) representation
// ---------------------------------------------------------------------------

template <typename S>
using Vec3 = std::array<S, 3>;

template <typename S>
S vdot(const Vec3<S>& a, const Vec3<S>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <typename S>
Vec3<S> vcross(const Vec3<S>& a, const Vec3<S>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// 2×2 vector-matrix [[a, u], [v, b]] with scalar diagonal and 3-vector
// off-diagonal slots.
template <typename S>
struct ZornMatrix {
    S a{0};
    S b{0};
    Vec3<S> u{S(0), S(0), S(0)};
    Vec3<S> v{S(0), S(0), S(0)};

    static ZornMatrix identity() {
        ZornMatrix z;
        z.a = S(1);
        z.b = S(1);
        return z;
    }

    friend ZornMatrix operator+(const ZornMatrix& x, const ZornMatrix& y) {
        ZornMatrix r;
        r.a = x.a + y.a;
        r.b = x.b + y.b;
        for (int k = 0; k < 3; ++k) {
            r.u[k] = x.u[k] + y.u[k];
            r.v[k] = x.v[k] + y.v[k];
        }
        return r;
    }
    friend ZornMatrix operator-(const ZornMatrix& x, const ZornMatrix& y) {
        ZornMatrix r;
        r.a = x.a - y.a;
        r.b = x.b - y.b;
        for (int k = 0; k < 3; ++k) {
            r.u[k] = x.u[k] - y.u[k];
            r.v[k] = x.v[k] - y.v[k];
        }
        return r;
    }
    friend ZornMatrix operator*(const S& s, const ZornMatrix& x) {
        ZornMatrix r;
        r.a = s * x.a;
        r.b = s * x.b;
        for (int k = 0; k < 3; ++k) {
            r.u[k] = s * x.u[k];
            r.v[k] = s * x.v[k];
        }
        return r;
    }
    friend bool operator==(const ZornMatrix& x, const ZornMatrix& y) {
        return x.a == y.a && x.b == y.b && x.u == y.u && x.v == y.v;
    }
    friend bool operator!=(const ZornMatrix& x, const ZornMatrix& y) { return !(x == y); }
};

// Vector-matrix product:
//   [[a,u],[v,b]] · [[a',u'],[v',b']] =
//   [[aa' + u·v',  au' + b'u − v×v'], [a'v + bv' + u×u',  bb' + v·u']]
template <typename S>
ZornMatrix<S> zorn_mul(const ZornMatrix<S>& x, const ZornMatrix<S>& y) {
    ZornMatrix<S> r;
    r.a = x.a * y.a + vdot(x.u, y.v);
    r.b = x.b * y.b + vdot(x.v, y.u);
    Vec3<S> cv = vcross(x.v, y.v);
    Vec3<S> cu = vcross(x.u, y.u);
    for (int k = 0; k < 3; ++k) {
        r.u[k] = x.a * y.u[k] + y.b * x.u[k] - cv[k];
        r.v[k] = y.a * x.v[k] + x.b * y.v[k] + cu[k];
    }
    return r;
}

// "Determinant" / norm form of a vector-matrix: ab − u·v.
template <typename S>
S zorn_det(const ZornMatrix<S>& x) {
    return x.a * x.b - vdot(x.u, x.v);
}

// Encoding convention (derived once by exhaustive search over the eigenpair
// conventions, locked by the homomorphism test): with i the complex scalar
// unit and the coordinate pairs (ξ₂,ξ₄), (ξ₅,ξ₆), (ξ₃,ξ₇) assigned to the
// three vector slots,
//   a   = ξ₀ + iξ₁,            b   = ξ₀ − iξ₁,
//   u_k =  (ξ_{p_k} + iξ_{q_k}),  v_k = −(ξ_{p_k} − iξ_{q_k}).
struct ZornConvention {
    int pair[3][2];   // (p_k, q_k) coordinate indices per vector slot
    int t[3];         // ±1 orientation inside each pair
    int s0;           // ±1 sign of the diagonal imaginary part
    CRational su[3];  // scale of u_k
    CRational sv[3];  // scale of v_k (su[k]*sv[k] = −1)
};

inline const ZornConvention& zorn_convention() {
    static const ZornConvention conv = [] {
        ZornConvention c{};
        const int pairs[3][2] = {{2, 4}, {5, 6}, {3, 7}};
        for (int k = 0; k < 3; ++k) {
            c.pair[k][0] = pairs[k][0];
            c.pair[k][1] = pairs[k][1];
            c.t[k] = 1;
            c.su[k] = CRational(Rational(1));
            c.sv[k] = CRational(Rational(-1));
        }
        c.s0 = 1;
        return c;
    }();
    return conv;
}

inline ZornMatrix<CRational> zorn_encode(const Octonion<CRational>& x) {
    const auto& cv = zorn_convention();
    ZornMatrix<CRational> z;
    CRational i = CRational::i();
    CRational d = CRational(Rational(cv.s0)) * i * x.c[1];
    z.a = x.c[0] + d;
    z.b = x.c[0] - d;
    for (int k = 0; k < 3; ++k) {
        CRational p = x.c[cv.pair[k][0]];
        CRational q = x.c[cv.pair[k][1]];
        CRational tq = CRational(Rational(cv.t[k])) * i * q;
        z.u[k] = cv.su[k] * (p + tq);
        z.v[k] = cv.sv[k] * (p - tq);
    }
    return z;
}

inline Octonion<CRational> zorn_decode(const ZornMatrix<CRational>& z) {
    const auto& cv = zorn_convention();
    Octonion<CRational> x;
    CRational i = CRational::i();
    CRational half(Rational(1, 2));
    x.c[0] = half * (z.a + z.b);
    x.c[1] = half * (z.a - z.b) / (CRational(Rational(cv.s0)) * i);
    for (int k = 0; k < 3; ++k) {
        CRational up = z.u[k] / cv.su[k];
        CRational vp = z.v[k] / cv.sv[k];
        x.c[cv.pair[k][0]] = half * (up + vp);
        x.c[cv.pair[k][1]] = half * (up - vp) / (CRational(Rational(cv.t[k])) * i);
    }
    return x;
}

inline Octonion<CRational> complexify(const OctonionQ& x) {
    Octonion<CRational> r;
    for (std::size_t k = 0; k < 8; ++k) r.c[k] = CRational(x.c[k]);
    return r;
}

inline ZornMatrix<CRational> zorn_encode(const OctonionQ& x) { return zorn_encode(complexify(x)); }

// decode(encode(x)) for a rational octonion, staying in rational coordinates.
inline OctonionQ zorn_roundtrip(const OctonionQ& x) {
    Octonion<CRational> d = zorn_decode(zorn_encode(x));
    OctonionQ r;
    for (std::size_t k = 0; k < 8; ++k) r.c[k] = d.c[k].re;  // imaginary parts vanish by construction
    return r;
}

// ---------------------------------------------------------------------------
// Regular-representation matrices
// ---------------------------------------------------------------------------

// L(x) with L(x)·coeffs(y) = coeffs(x·y).
inline RatMatrix left_mult_matrix(const OctonionQ& x) {
    RatMatrix m(8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
        OctonionQ col = x * OctonionQ::basis(j);
        for (std::size_t i = 0; i < 8; ++i) m(i, j) = col.c[i];
    }
    return m;
}

// R(x) with R(x)·coeffs(y) = coeffs(y·x).
inline RatMatrix right_mult_matrix(const OctonionQ& x) {
    RatMatrix m(8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
        OctonionQ col = OctonionQ::basis(j) * x;
        for (std::size_t i = 0; i < 8; ++i) m(i, j) = col.c[i];
    }
    return m;
}

}  // namespace nonassoc
