#pragma once

// Matrices over the exact octonions: the full matrix algebra, Hermitian
// families under the symmetrized product, permutation automorphisms and the
// induced gradings, the non-power-associativity reproductions, quartic
// Q-forms, and the oscillator factorization.

#include <map>

#include "builtins.hpp"
#include "octonion.hpp"
#include "structure_algebra.hpp"

namespace nonassoc {

// ---------------------------------------------------------------------------
// Full matrix algebra over the octonions
// ---------------------------------------------------------------------------

struct OctMatrix {
    std::size_t n = 0;
    std::vector<OctonionQ> e;  // row-major

    OctMatrix() = default;
    explicit OctMatrix(std::size_t size) : n(size), e(size * size) {}

    static OctMatrix identity(std::size_t size) {
        OctMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m.at(i, i) = OctonionQ::one();
        return m;
    }

    OctonionQ& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const OctonionQ& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }

    friend bool operator==(const OctMatrix& a, const OctMatrix& b) {
        return a.n == b.n && a.e == b.e;
    }
};

inline void require_same_size(const OctMatrix& a, const OctMatrix& b) {
    if (a.n != b.n) throw input_error("matrix size mismatch");
}

inline OctMatrix operator+(const OctMatrix& a, const OctMatrix& b) {
    require_same_size(a, b);
    OctMatrix r(a.n);
    for (std::size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
}

inline OctMatrix operator-(const OctMatrix& a, const OctMatrix& b) {
    require_same_size(a, b);
    OctMatrix r(a.n);
    for (std::size_t k = 0; k < a.e.size(); ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
}

inline OctMatrix operator*(const Rational& s, const OctMatrix& a) {
    OctMatrix r(a.n);
    for (std::size_t k = 0; k < a.e.size(); ++k) r.e[k] = s * a.e[k];
    return r;
}

inline OctMatrix matmul(const OctMatrix& a, const OctMatrix& b) {
    require_same_size(a, b);
    OctMatrix r(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            OctonionQ s;
            for (std::size_t k = 0; k < a.n; ++k) s = s + a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

// Symmetrized product ½(AB + BA); maps Hermitian pairs to Hermitian results.
inline OctMatrix jordan_matmul(const OctMatrix& a, const OctMatrix& b) {
    return Rational(1, 2) * (matmul(a, b) + matmul(b, a));
}

inline OctMatrix conj_transpose(const OctMatrix& a) {
    OctMatrix r(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) r.at(i, j) = a.at(j, i).conj();
    return r;
}

inline bool is_hermitian(const OctMatrix& a) { return conj_transpose(a) == a; }

inline bool is_zero(const OctMatrix& a) {
    return std::all_of(a.e.begin(), a.e.end(),
                       [](const OctonionQ& x) { return x == OctonionQ(); });
}

// ---------------------------------------------------------------------------
// Involutive permutation automorphisms
// ---------------------------------------------------------------------------

// k = 1: entry (i,j) moves to (i+n/2, j+n/2) (indices mod n);
// k = 2: conjugated entry moves to (j+n/2, i+n/2);
// k = 3: conjugate transpose; k = 4: identity.
inline OctMatrix phi_automorphism(int k, const OctMatrix& m) {
    if (k == 4) return m;
    if (k == 3) return conj_transpose(m);
    if (k != 1 && k != 2) throw input_error("automorphism index must be 1..4");
    if (m.n % 2 != 0) throw input_error("block automorphisms need even size");
    std::size_t h = m.n / 2;
    OctMatrix r(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            if (k == 1)
                r.at((i + h) % m.n, (j + h) % m.n) = m.at(i, j);
            else
                r.at((j + h) % m.n, (i + h) % m.n) = m.at(i, j).conj();
        }
    return r;
}

// ---------------------------------------------------------------------------
// Hermitian families as structure algebras
// ---------------------------------------------------------------------------

namespace detail {

// Basis of n×n Hermitian octonion matrices with the identity first:
// I, E_kk (k ≥ 1), then c·E_ij + c̄·E_ji for i < j over all octonion units c.
inline std::vector<OctMatrix> herm_basis(std::size_t n, std::vector<std::string>* names) {
    std::vector<OctMatrix> b;
    b.push_back(OctMatrix::identity(n));
    if (names) names->push_back("I");
    for (std::size_t k = 1; k < n; ++k) {
        OctMatrix m(n);
        m.at(k, k) = OctonionQ::one();
        b.push_back(std::move(m));
        if (names) names->push_back("D" + std::to_string(k + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t c = 0; c < 8; ++c) {
                OctMatrix m(n);
                m.at(i, j) = OctonionQ::basis(c);
                m.at(j, i) = OctonionQ::basis(c).conj();
                b.push_back(std::move(m));
                if (names)
                    names->push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" +
                                     (c == 0 ? "1" : "e" + std::to_string(c)) + ")");
            }
    return b;
}

// Coordinates of a Hermitian matrix in the herm_basis order.
inline RatVector herm_coords(const OctMatrix& m) {
    std::size_t n = m.n;
    RatVector v;
    v.push_back(m.at(0, 0).c[0]);
    for (std::size_t k = 1; k < n; ++k) v.push_back(m.at(k, k).c[0] - m.at(0, 0).c[0]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t c = 0; c < 8; ++c) v.push_back(m.at(i, j).c[c]);
    return v;
}

// Block embedding [[B, C], [C, B]] for the even-size graded families.
inline OctMatrix block_pp(const OctMatrix& bb, const OctMatrix& cc) {
    std::size_t h = bb.n;
    OctMatrix r(2 * h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            r.at(i, j) = bb.at(i, j);
            r.at(i + h, j + h) = bb.at(i, j);
            r.at(i, j + h) = cc.at(i, j);
            r.at(i + h, j) = cc.at(i, j);
        }
    return r;
}

// Half-block off-diagonal slots are conjugated below the diagonal except the
// (2,3) slot of the 3×3 halves, which repeats plainly. With the plain slot the
// 54-dimensional span is not closed under the matrix Jordan product, so the
// exported structure constants are the coordinate projection onto the defining
// slots (block_pp_coords); that projected algebra is commutative but not
// power-associative, unlike the fully conjugated layout, which is isomorphic
// to a direct sum of two Hermitian algebras.
inline std::vector<OctMatrix> block_pp_basis(std::size_t h, std::vector<std::string>* names) {
    std::vector<OctMatrix> b;
    OctMatrix zero(h);
    auto add_half = [&](bool cblock) {
        std::vector<OctMatrix> hs;
        std::vector<std::string> hn;
        // The B half keeps the identity-first convention; the C half lists the
        // plain E_kk diagonal units.
        if (!cblock) {
            hs.push_back(OctMatrix::identity(h));
            hn.push_back("I");
        }
        for (std::size_t k = cblock ? 0 : 1; k < h; ++k) {
            OctMatrix m(h);
            m.at(k, k) = OctonionQ::one();
            hs.push_back(std::move(m));
            hn.push_back("D" + std::to_string(k + 1));
        }
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i + 1; j < h; ++j)
                for (std::size_t c = 0; c < 8; ++c) {
                    OctMatrix m(h);
                    m.at(i, j) = OctonionQ::basis(c);
                    bool plain = (i == 1 && j == 2);
                    m.at(j, i) = plain ? OctonionQ::basis(c) : OctonionQ::basis(c).conj();
                    hs.push_back(std::move(m));
                    hn.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" +
                                 (c == 0 ? "1" : "e" + std::to_string(c)) + ")");
                }
        for (std::size_t k = 0; k < hs.size(); ++k) {
            b.push_back(cblock ? block_pp(zero, hs[k]) : block_pp(hs[k], zero));
            if (names) names->push_back((cblock ? "C:" : "B:") + hn[k]);
        }
    };
    add_half(false);
    add_half(true);
    return b;
}

inline RatVector block_pp_coords(const OctMatrix& m) {
    std::size_t h = m.n / 2;
    OctMatrix bb(h), cc(h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            bb.at(i, j) = m.at(i, j);
            cc.at(i, j) = m.at(i, j + h);
        }
    RatVector v = herm_coords(bb);
    for (std::size_t k = 0; k < h; ++k) v.push_back(cc.at(k, k).c[0]);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j)
            for (std::size_t c = 0; c < 8; ++c) v.push_back(cc.at(i, j).c[c]);
    return v;
}

inline RatVector flatten(const OctMatrix& m) {
    RatVector v;
    v.reserve(m.e.size() * 8);
    for (const auto& x : m.e)
        for (const auto& coeff : x.c) v.push_back(coeff);
    return v;
}

inline AlgebraPtr algebra_from_matrix_basis(const std::string& name,
                                            const std::vector<OctMatrix>& basis,
                                            std::vector<std::string> names,
                                            const std::function<RatVector(const OctMatrix&)>& co) {
    std::size_t d = basis.size();
    std::vector<Rational> consts(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            OctMatrix p = jordan_matmul(basis[i], basis[j]);
            RatVector v = co(p);
            for (std::size_t k = 0; k < d; ++k) {
                consts[(i * d + j) * d + k] = v[k];
                consts[(j * d + i) * d + k] = v[k];
            }
        }
    return StructureAlgebra::create(name, d, std::move(names), std::move(consts), 0);
}

}  // namespace detail

// Families: Hermitian n×n ("H2", "H3", "H4"), the even-size block-diagonal
// graded subalgebras ("l44pp" on 4×4, "l66pp" on 6×6), and the small tabled
// algebras ("U3", "U4", "U5").
inline AlgebraPtr export_structure_algebra(const std::string& family) {
    static std::map<std::string, AlgebraPtr> cache;
    auto it = cache.find(family);
    if (it != cache.end()) return it->second;

    AlgebraPtr alg;
    if (family == "H2" || family == "H3" || family == "H4") {
        std::size_t n = static_cast<std::size_t>(family[1] - '0');
        std::vector<std::string> names;
        auto basis = detail::herm_basis(n, &names);
        alg = detail::algebra_from_matrix_basis(family, basis, std::move(names),
                                                detail::herm_coords);
    } else if (family == "l44pp" || family == "l66pp") {
        std::size_t h = family == "l44pp" ? 2 : 3;
        std::vector<std::string> names;
        auto basis = detail::block_pp_basis(h, &names);
        alg = detail::algebra_from_matrix_basis(family, basis, std::move(names),
                                                detail::block_pp_coords);
    } else if (family == "U3") {
        alg = u3_algebra();
    } else if (family == "U4") {
        alg = u4_algebra();
    } else if (family == "U5") {
        alg = u5_algebra();
    } else {
        throw input_error("unknown matrix-algebra family: " + family);
    }
    cache.emplace(family, alg);
    return alg;
}

// ---------------------------------------------------------------------------
// Grading of the 4×4 Hermitian algebra by the block-swap automorphism
// ---------------------------------------------------------------------------

// Spanning set of the odd part: Hermitian X = [[P, Q], [−Q, −P]] with P
// Hermitian and Q skew-Hermitian (32 matrices).
inline std::vector<OctMatrix> grading_odd_basis() {
    std::vector<OctMatrix> out;
    auto push = [&out](const OctMatrix& p, const OctMatrix& q) {
        OctMatrix r(4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                r.at(i, j) = p.at(i, j);
                r.at(i + 2, j + 2) = Rational(-1) * p.at(i, j);
                r.at(i, j + 2) = q.at(i, j);
                r.at(i + 2, j) = Rational(-1) * q.at(i, j);
            }
        return r;
    };
    OctMatrix zero2(2);
    for (const auto& p : detail::herm_basis(2, nullptr)) out.push_back(push(p, zero2));
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t c = 1; c < 8; ++c) {
            OctMatrix q(2);
            q.at(k, k) = OctonionQ::basis(c);
            out.push_back(push(zero2, q));
        }
    for (std::size_t c = 0; c < 8; ++c) {
        OctMatrix q(2);
        q.at(0, 1) = OctonionQ::basis(c);
        q.at(1, 0) = Rational(-1) * OctonionQ::basis(c).conj();
        out.push_back(push(zero2, q));
    }
    return out;
}

struct GradingReport {
    bool even_closed = false;      // even∘even ⊆ even
    bool odd_into_even = false;    // odd∘odd ⊆ even
    bool mixed_into_odd = false;   // even∘odd ⊆ odd
    bool spaces_hermitian = false;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
};

inline GradingReport grading_check() {
    GradingReport rep;
    std::vector<OctMatrix> even = detail::block_pp_basis(2, nullptr);
    std::vector<OctMatrix> odd = grading_odd_basis();
    rep.spaces_hermitian = true;
    for (const auto& m : even) rep.spaces_hermitian = rep.spaces_hermitian && is_hermitian(m);
    for (const auto& m : odd) rep.spaces_hermitian = rep.spaces_hermitian && is_hermitian(m);

    detail::RowSpace evenspan(128), oddspan(128);
    for (const auto& m : even) evenspan.add(detail::flatten(m));
    for (const auto& m : odd) oddspan.add(detail::flatten(m));
    rep.even_dim = evenspan.rank();
    rep.odd_dim = oddspan.rank();

    rep.even_closed = rep.odd_into_even = rep.mixed_into_odd = true;
    for (const auto& a : even)
        for (const auto& b : even)
            rep.even_closed =
                rep.even_closed && evenspan.contains(detail::flatten(jordan_matmul(a, b)));
    for (const auto& a : odd)
        for (const auto& b : odd)
            rep.odd_into_even =
                rep.odd_into_even && evenspan.contains(detail::flatten(jordan_matmul(a, b)));
    for (const auto& a : even)
        for (const auto& b : odd)
            rep.mixed_into_odd =
                rep.mixed_into_odd && oddspan.contains(detail::flatten(jordan_matmul(a, b)));
    return rep;
}

// ---------------------------------------------------------------------------
// Non-power-associativity reproductions
// ---------------------------------------------------------------------------

struct RuhaakReport {
    OctonionQ square_square_entry;    // (A²∘A²) read at (0,1)
    OctonionQ cube_times_a_entry;     // ((A²∘A)∘A) read at (0,1)
    OctonionQ cube_times_a_starred;   // ((A²∘A)∘A) read at the transposed slot (1,0)
    bool distinct = false;            // A²∘A² ≠ (A²∘A)∘A as whole matrices
    bool rational_control_equal = false;  // same computation with scalar entries
};

// The 6×6 block element [[B,C],[C,B]] whose four nonzero octonion slots are
// single units: B₀₁ = ε₁ repeated plainly below the diagonal, B₀₂ = ε₄ and
// B₁₂ = ε₂ with conjugated lower copies, C₁₂ = ε₃ repeated plainly. With this
// pattern the two bracketings of the fourth Jordan power differ and the probe
// entries come out as single units with small integer coefficients.
inline OctMatrix ruhaak_element() {
    OctMatrix bb(3), cc(3);
    bb.at(0, 1) = OctonionQ::basis(1);
    bb.at(1, 0) = OctonionQ::basis(1);
    bb.at(0, 2) = OctonionQ::basis(4);
    bb.at(2, 0) = OctonionQ::basis(4).conj();
    bb.at(1, 2) = OctonionQ::basis(2);
    bb.at(2, 1) = OctonionQ::basis(2).conj();
    cc.at(1, 2) = OctonionQ::basis(3);
    cc.at(2, 1) = OctonionQ::basis(3);
    return detail::block_pp(bb, cc);
}

inline RuhaakReport ruhaak_counterexample() {
    RuhaakReport rep;
    OctMatrix a = ruhaak_element();
    OctMatrix a2 = jordan_matmul(a, a);
    OctMatrix d = jordan_matmul(a2, a2);
    OctMatrix dstar = jordan_matmul(jordan_matmul(a2, a), a);
    rep.square_square_entry = d.at(0, 1);
    rep.cube_times_a_entry = dstar.at(0, 1);
    rep.cube_times_a_starred = dstar.at(1, 0);
    rep.distinct = false;
    for (std::size_t i = 0; i < a.n && !rep.distinct; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            if (!(d.at(i, j) == dstar.at(i, j))) {
                rep.distinct = true;
                break;
            }

    // Associative control: replace every octonion unit by the scalar 1.
    OctMatrix s(a.n);
    for (std::size_t k = 0; k < a.e.size(); ++k) {
        Rational sum(0);
        for (const auto& coeff : a.e[k].c) sum += coeff;
        s.e[k] = OctonionQ::scalar(sum);
    }
    OctMatrix s2 = jordan_matmul(s, s);
    rep.rational_control_equal =
        jordan_matmul(s2, s2).at(0, 1) == jordan_matmul(jordan_matmul(s2, s), s).at(0, 1);
    return rep;
}

// ---------------------------------------------------------------------------
// Trace compatibility on the 27-dimensional Hermitian algebra
// ---------------------------------------------------------------------------

// λ(x) = ½·(real trace); on the H3 basis: λ(I) = 3/2, λ(D_k) = 1/2,
// λ(off-diagonal) = 0.
inline Rational herm_lambda(const Element& x) {
    const auto& alg = x.algebra;
    if (alg->name() != "H2" && alg->name() != "H3" && alg->name() != "H4")
        throw input_error("trace form defined on the Hermitian matrix algebras");
    std::size_t n = static_cast<std::size_t>(alg->name()[1] - '0');
    Rational lam = x.coeffs[0] * Rational(static_cast<long>(n), 2);
    for (std::size_t k = 1; k < n; ++k) lam += x.coeffs[k] * Rational(1, 2);
    return lam;
}

struct TraceCompatReport {
    bool unit_trace_ok = false;    // 2λ(1) = degree
    bool quartic_ok = false;       // λ(x⁴) = λ(x²)² on trace-zero x
    std::size_t trials = 0;
};

inline TraceCompatReport trace_compatibility_check(std::size_t trials, std::uint64_t seed) {
    AlgebraPtr h3 = export_structure_algebra("H3");
    TraceCompatReport rep;
    rep.unit_trace_ok = Rational(2) * herm_lambda(h3->unit()) == 3;
    rep.quartic_ok = true;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Element x = random_element(h3, rng);
        x = x - (Rational(2, 3) * herm_lambda(x)) * h3->unit();  // project onto trace zero
        Element x2 = x * x;
        Element x4 = (x2 * x) * x;
        if (herm_lambda(x4) != herm_lambda(x2) * herm_lambda(x2)) {
            rep.quartic_ok = false;
            break;
        }
        ++rep.trials;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quartic Q-forms
// ---------------------------------------------------------------------------

struct QInput {
    std::vector<OctonionQ> x;
    std::vector<OctonionQ> y;
};

struct non_real_result_error : std::runtime_error {
    explicit non_real_result_error(const std::string& what) : std::runtime_error(what) {}
};

// Q = ½ Σ_{μν} [(x_μ* x_ν)(y_ν* y_μ) + (y_μ* y_ν)(x_ν* x_μ)]; asserted real.
inline Rational q_form(const QInput& in) {
    if (in.x.size() != in.y.size() || (in.x.size() != 2 && in.x.size() != 3))
        throw input_error("q_form takes matching 2- or 3-vectors");
    OctonionQ q;
    for (std::size_t mu = 0; mu < in.x.size(); ++mu)
        for (std::size_t nu = 0; nu < in.x.size(); ++nu)
            q = q + (in.x[mu].conj() * in.x[nu]) * (in.y[nu].conj() * in.y[mu]) +
                (in.y[mu].conj() * in.y[nu]) * (in.x[nu].conj() * in.x[mu]);
    OctonionQ half = Rational(1, 2) * q;
    for (std::size_t k = 1; k < 8; ++k)
        if (half.c[k] != 0)
            throw non_real_result_error("quartic form has imaginary residual in coordinate " +
                                        std::to_string(k));
    return half.c[0];
}

inline Rational q_norm_bound(const QInput& in) {
    Rational nr(0), nn(0);
    for (const auto& o : in.x) nr += o.norm();
    for (const auto& o : in.y) nn += o.norm();
    return nr * nn;
}

// Q = N[N(x₁)·y₁*y₂ + (x₁*x₃)(y₃*y₂) + (x₁*x₂)·N(y₂)] / N(x₁y₂).
inline Rational hasse_jordan_q(const OctonionQ& x1, const OctonionQ& x2, const OctonionQ& x3,
                               const OctonionQ& y1, const OctonionQ& y2, const OctonionQ& y3) {
    Rational den = (x1 * y2).norm();
    if (den == 0) throw input_error("vanishing normalization N(x1 y2)");
    OctonionQ s = x1.norm() * (y1.conj() * y2) + (x1.conj() * x3) * (y3.conj() * y2) +
                  y2.norm() * (x1.conj() * x2);
    return s.norm() / den;
}

// ---------------------------------------------------------------------------
// Oscillator factorization and the 2×2 power check
// ---------------------------------------------------------------------------

struct OscillatorParams {
    Rational p0, p1, p2, p3;
    CRational a1, a2;
};

struct FactorizationReport {
    bool plus_minus_ok = false;   // A₊A₋ = A²·Id
    bool minus_plus_ok = false;   // A₋A₊ = A²·Id
    CRational quadratic_form;     // P₀²−P₁²−P₂²−P₃²−|a₁|²−|a₂|²
};

// A± = [[P₀±P₃, ±u], [±v, P₀∓P₃]] with u = (a₁, ā₂, P₁−iP₂) and
// v = (ā₁, a₂, P₁+iP₂), evaluated in the complex-scalar vector-matrix algebra.
inline FactorizationReport biedenharn_factorization(const OscillatorParams& p) {
    CRational i = CRational::i();
    auto cr = [](const Rational& r) { return CRational(r); };
    ZornMatrix<CRational> plus, minus;
    CRational u0 = p.a1, u1 = p.a2.conj(), u2 = cr(p.p1) - i * cr(p.p2);
    CRational v0 = p.a1.conj(), v1 = p.a2, v2 = cr(p.p1) + i * cr(p.p2);
    plus.a = cr(p.p0 + p.p3);
    plus.b = cr(p.p0 - p.p3);
    plus.u = {u0, u1, u2};
    plus.v = {v0, v1, v2};
    minus.a = cr(p.p0 - p.p3);
    minus.b = cr(p.p0 + p.p3);
    CRational m1 = cr(Rational(-1));
    minus.u = {m1 * u0, m1 * u1, m1 * u2};
    minus.v = {m1 * v0, m1 * v1, m1 * v2};

    FactorizationReport rep;
    rep.quadratic_form = cr(p.p0 * p.p0 - p.p1 * p.p1 - p.p2 * p.p2 - p.p3 * p.p3) -
                         cr(p.a1.norm()) - cr(p.a2.norm());
    ZornMatrix<CRational> expected;
    expected.a = rep.quadratic_form;
    expected.b = rep.quadratic_form;
    expected.u = {CRational(), CRational(), CRational()};
    expected.v = {CRational(), CRational(), CRational()};
    rep.plus_minus_ok = zorn_mul(plus, minus) == expected;
    rep.minus_plus_ok = zorn_mul(minus, plus) == expected;
    return rep;
}

struct PowerCheckReport {
    bool non_associative = false;
    std::size_t entry_i = 0, entry_j = 0;
    OctonionQ left;   // (H·(H·H)) at the differing entry
    OctonionQ right;  // ((H·H)·H) at the differing entry
};

// H = [[P₃, u], [v, −P₃]] with the oscillator axes on ε₁, ε₂, ε₄ and the
// complex unit realized as ε₇ (so i·ε₁ = ε₃, i·ε₂ = ε₆, i·ε₄ = ε₅ stay
// independent). The oscillator amplitudes act through exact two-level ladder
// matrices (one two-state mode per oscillator), so the off-diagonal entries
// are operator-valued and no longer commute with their adjoints. That
// non-commutativity is essential: with plain scalar entries the trace-zero
// diagonal makes H² diagonal, and the cube then associates by octonion
// flexibility, so no scalar realization can separate the two bracketings.
// Each entry lives in (4×4 rational matrices) ⊗ (octonions), represented as
// a 4×4 block of octonions; H itself is the assembled 8×8 matrix.
inline PowerCheckReport biedenharn_power_check(const OscillatorParams& p) {
    auto embed = [](const CRational& z, std::size_t axis, std::size_t image, bool conj) {
        OctonionQ o;
        o.c[axis] = z.re;
        o.c[image] = conj ? -z.im : z.im;
        return o;
    };
    // Ladder matrix for one mode tensored with the identity of the other:
    // a = E01 on the chosen two-state factor, a† its transpose.
    auto ladder = [](bool second_mode, bool dagger) {
        RatMatrix m(4, 4);
        for (std::size_t other = 0; other < 2; ++other) {
            std::size_t r = second_mode ? other * 2 : other;
            std::size_t c = second_mode ? other * 2 + 1 : other + 2;
            if (dagger) std::swap(r, c);
            m(r, c) = 1;
        }
        return m;
    };
    // Operator ⊗ octonion term as a 4×4 octonion block.
    auto term = [](const RatMatrix& op, const OctonionQ& o) {
        OctMatrix b(4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (op(r, c) != 0) b.at(r, c) = op(r, c) * o;
        return b;
    };
    RatMatrix scalar_op = RatMatrix::identity(4);
    OctonionQ pm;  // (P₁ − iP₂)·ε₄
    pm.c[4] = p.p1;
    pm.c[5] = -p.p2;
    OctonionQ pp;  // (P₁ + iP₂)·ε₄
    pp.c[4] = p.p1;
    pp.c[5] = p.p2;
    OctMatrix u = term(ladder(false, false), embed(p.a1, 1, 3, false)) +
                  term(ladder(true, true), embed(p.a2, 2, 6, true)) + term(scalar_op, pm);
    OctMatrix v = term(ladder(false, true), embed(p.a1, 1, 3, true)) +
                  term(ladder(true, false), embed(p.a2, 2, 6, false)) + term(scalar_op, pp);

    OctMatrix h(8);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            if (r == c) {
                h.at(r, c) = OctonionQ::scalar(p.p3);
                h.at(r + 4, c + 4) = OctonionQ::scalar(-p.p3);
            }
            h.at(r, c + 4) = u.at(r, c);
            h.at(r + 4, c) = v.at(r, c);
        }

    OctMatrix hh = matmul(h, h);
    OctMatrix lhs = matmul(h, hh);
    OctMatrix rhs = matmul(hh, h);
    PowerCheckReport rep;
    for (std::size_t i = 0; i < 8 && !rep.non_associative; ++i)
        for (std::size_t j = 0; j < 8 && !rep.non_associative; ++j)
            if (!(lhs.at(i, j) == rhs.at(i, j))) {
                rep.non_associative = true;
                rep.entry_i = i;
                rep.entry_j = j;
                rep.left = lhs.at(i, j);
                rep.right = rhs.at(i, j);
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Budgeted search for unital embeddings of the tabled algebras
// ---------------------------------------------------------------------------

struct EmbeddingSearchReport {
    bool found = false;
    std::size_t attempts = 0;
};

// Looks for a product-preserving linear embedding of the source algebra into
// the target by sampling idempotent-anchored candidates; a miss within budget
// is recorded, not treated as a refutation.
inline EmbeddingSearchReport embedding_search(const AlgebraPtr& source, const AlgebraPtr& target,
                                              std::size_t budget, std::uint64_t seed) {
    EmbeddingSearchReport rep;
    std::mt19937_64 rng(seed);
    std::size_t sd = source->dim();
    // Candidate images for the source basis: random elements; accept when all
    // pairwise products match coordinatewise.
    for (rep.attempts = 0; rep.attempts < budget; ++rep.attempts) {
        std::vector<Element> img;
        bool unital_fixed = source->unit_index().has_value();
        for (std::size_t k = 0; k < sd; ++k) {
            if (unital_fixed && k == *source->unit_index() && target->unit_index())
                img.push_back(target->unit());
            else
                img.push_back(random_element(target, rng));
        }
        bool ok = true;
        for (std::size_t i = 0; i < sd && ok; ++i)
            for (std::size_t j = 0; j < sd && ok; ++j) {
                Element lhs = img[i] * img[j];
                Element rhs = target->zero();
                for (std::size_t k = 0; k < sd; ++k)
                    rhs = rhs + source->c(i, j, k) * img[k];
                ok = lhs == rhs;
            }
        // Reject the trivial all-zero assignment.
        if (ok && std::any_of(img.begin(), img.end(),
                              [](const Element& e) { return !e.is_zero(); })) {
            rep.found = true;
            ++rep.attempts;
            break;
        }
    }
    return rep;
}

}  // namespace nonassoc
