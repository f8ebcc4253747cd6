#pragma once

// A commutative, unital, non-power-associative algebra on the basis
// {x^0 = e, x, x², …} with the exact monomial product
//   x^μ x^ν = Σ_ρ (2ρ)! C(μ,2ρ) C(ν,2ρ) x^{μ+ν−4ρ}.
// The square of the square differs from the fourth power (x²x² = x⁴ + 2e),
// which is the mechanism bounding how sharply the underlying coordinate can
// be localized. Also provided: the operator realization via the shift and
// derivative matrices, the exponential wave-packet identity, the h(ρ)
// weighted variant, and the two-variable associator coefficient recursion.

#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace nonassoc {

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned fl_default_truncation = 40;

struct FLElement {
    std::map<unsigned, CRational> coeffs;  // degree -> coefficient
    unsigned truncation = fl_default_truncation;

    static FLElement unit(unsigned K = fl_default_truncation) { return monomial(0, K); }
    static FLElement monomial(unsigned degree, unsigned K = fl_default_truncation) {
        FLElement e;
        e.truncation = K;
        if (degree > K) throw truncation_error("monomial degree exceeds truncation");
        e.coeffs[degree] = CRational(Rational(1));
        return e;
    }

    void add_term(unsigned degree, const CRational& c) {
        if (degree > truncation) throw truncation_error("term degree exceeds truncation");
        auto it = coeffs.find(degree);
        if (it == coeffs.end()) {
            if (!c.is_zero()) coeffs[degree] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    bool is_zero() const { return coeffs.empty(); }
    unsigned degree() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

    FLElement operator+(const FLElement& o) const {
        FLElement r = *this;
        for (const auto& [d, c] : o.coeffs) r.add_term(d, c);
        return r;
    }
    FLElement operator-(const FLElement& o) const {
        FLElement r = *this;
        for (const auto& [d, c] : o.coeffs) r.add_term(d, CRational{-c.re, -c.im});
        return r;
    }
    FLElement scaled(const CRational& s) const {
        FLElement r;
        r.truncation = truncation;
        for (const auto& [d, c] : coeffs) {
            CRational p = c * s;
            if (!p.is_zero()) r.coeffs[d] = p;
        }
        return r;
    }
    bool operator==(const FLElement& o) const { return coeffs == o.coeffs; }
};

// Monomial product as an exact coefficient list (degree, coefficient); the
// sum is finite since every term with 2ρ > μ or 2ρ > ν vanishes.
inline std::vector<std::pair<unsigned, Rational>> fl_monomial_product(unsigned mu, unsigned nu) {
    std::vector<std::pair<unsigned, Rational>> out;
    for (unsigned rho = 0; 2 * rho <= mu && 2 * rho <= nu; ++rho) {
        Rational coef = Rational(factorial(2 * rho)) * binomial(mu, 2 * rho) * binomial(nu, 2 * rho);
        out.emplace_back(mu + nu - 4 * rho, coef);
    }
    return out;
}

inline FLElement fl_mul(const FLElement& p, const FLElement& q) {
    FLElement r;
    r.truncation = std::min(p.truncation, q.truncation);
    for (const auto& [mu, cp] : p.coeffs)
        for (const auto& [nu, cq] : q.coeffs) {
            if (mu + nu > r.truncation)
                throw truncation_error("product degree " + std::to_string(mu + nu) +
                                       " exceeds truncation " + std::to_string(r.truncation));
            CRational s = cp * cq;
            for (const auto& [deg, coef] : fl_monomial_product(mu, nu))
                r.add_term(deg, CRational{s.re * coef, s.im * coef});
        }
    return r;
}

inline FLElement fl_associator(const FLElement& a, const FLElement& b, const FLElement& c) {
    return fl_mul(fl_mul(a, b), c) - fl_mul(a, fl_mul(b, c));
}

// ---------------------------------------------------------------------------
// Quasi-axiom checks on the generating element
// ---------------------------------------------------------------------------

struct FLQuasiAxiomReport {
    bool shift_rule_holds = true;      // [x, x^μ, x^ν] = x^{μ−1}[x,x,x^ν] + x[x,x^{μ−1},x^ν]
    bool square_rule_holds = true;     // [x^μ, x², x^ν] = 2x[x^μ, x, x^ν]
    bool base_associator_holds = true; // [x, x, x²] = 2e
    unsigned bound = 0;
};

inline FLQuasiAxiomReport fl_quasi_axiom_check(unsigned bound,
                                               unsigned K = fl_default_truncation) {
    FLQuasiAxiomReport rep;
    rep.bound = bound;
    auto X = [&](unsigned d) { return FLElement::monomial(d, K); };
    rep.base_associator_holds =
        fl_associator(X(1), X(1), X(2)) == FLElement::unit(K).scaled(CRational(Rational(2)));
    for (unsigned mu = 1; mu <= bound; ++mu)
        for (unsigned nu = 0; nu <= bound; ++nu) {
            FLElement lhs = fl_associator(X(1), X(mu), X(nu));
            FLElement rhs = fl_mul(X(mu - 1), fl_associator(X(1), X(1), X(nu))) +
                            fl_mul(X(1), fl_associator(X(1), X(mu - 1), X(nu)));
            if (!(lhs == rhs)) rep.shift_rule_holds = false;
            FLElement lhs2 = fl_associator(X(mu), X(2), X(nu));
            FLElement rhs2 =
                fl_mul(X(1), fl_associator(X(mu), X(1), X(nu))).scaled(CRational(Rational(2)));
            if (!(lhs2 == rhs2)) rep.square_rule_holds = false;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Operator realization: shift matrix L(x), derivative matrix D
// ---------------------------------------------------------------------------

// Degree-shift map x·x^ν = x^{ν+1} on degrees 0..K (shift above K truncates).
inline RatMatrix fl_shift_matrix(unsigned K) {
    RatMatrix L(K + 1, K + 1);
    for (unsigned v = 0; v < K; ++v) L(v + 1, v) = 1;
    return L;
}

// Formal derivative D x^k = k x^{k−1}.
inline RatMatrix fl_derivative_matrix(unsigned K) {
    RatMatrix D(K + 1, K + 1);
    for (unsigned k = 1; k <= K; ++k) D(k - 1, k) = Rational(static_cast<long>(k));
    return D;
}

// Operator form of multiplication by x^μ:
//   L(x^μ) = Σ_ρ C(μ,2ρ) L(x)^{μ−2ρ} D^{2ρ}.
inline RatMatrix fl_operator_matrix(unsigned mu, unsigned K) {
    RatMatrix L = fl_shift_matrix(K);
    RatMatrix D = fl_derivative_matrix(K);
    RatMatrix acc(K + 1, K + 1);
    for (unsigned rho = 0; 2 * rho <= mu; ++rho) {
        RatMatrix term = RatMatrix::identity(K + 1);
        for (unsigned k = 0; k < mu - 2 * rho; ++k) term = L * term;
        for (unsigned k = 0; k < 2 * rho; ++k) term = term * D;
        acc = acc + Rational(binomial(mu, 2 * rho)) * term;
    }
    return acc;
}

// Direct multiplication-by-x^μ matrix from the product rule (column ν valid
// when μ+ν ≤ K).
inline RatMatrix fl_direct_matrix(unsigned mu, unsigned K) {
    RatMatrix M(K + 1, K + 1);
    for (unsigned nu = 0; mu + nu <= K; ++nu)
        for (const auto& [deg, coef] : fl_monomial_product(mu, nu)) M(deg, nu) = coef;
    return M;
}

struct FLOperatorReport {
    bool operator_matches_product = true;  // on all valid columns, all μ ≤ bound
    bool commutator_is_identity = true;    // [D, L(x)] = 1 on degrees ≤ K−1
};

inline FLOperatorReport fl_operator_check(unsigned mu_bound, unsigned K = fl_default_truncation) {
    FLOperatorReport rep;
    for (unsigned mu = 0; mu <= mu_bound; ++mu) {
        RatMatrix op = fl_operator_matrix(mu, K);
        RatMatrix direct = fl_direct_matrix(mu, K);
        for (unsigned nu = 0; mu + nu <= K; ++nu)
            for (unsigned r = 0; r <= K; ++r)
                if (op(r, nu) != direct(r, nu)) rep.operator_matches_product = false;
    }
    RatMatrix L = fl_shift_matrix(K);
    RatMatrix D = fl_derivative_matrix(K);
    RatMatrix comm = D * L - L * D;
    for (unsigned c = 0; c < K; ++c)
        for (unsigned r = 0; r <= K; ++r)
            if (comm(r, c) != (r == c ? Rational(1) : Rational(0)))
                rep.commutator_is_identity = false;
    return rep;
}

// Double-sum reconstruction of the deviation x^μ x^ν − x^{μ+ν}:
//   Σ_{α=1}^{μ−1} Σ_{β=1}^{ν−1} αβ L^{α−1}(x) L(x^{μ−α−1}) L^{β−1}(x) L(x^{ν−1−β}) [x,x,x²].
inline bool fl_deviation_double_sum_check(unsigned bound, unsigned K = fl_default_truncation) {
    RatMatrix L = fl_shift_matrix(K);
    auto Lpow = [&](unsigned p) {
        RatMatrix m = RatMatrix::identity(K + 1);
        for (unsigned k = 0; k < p; ++k) m = L * m;
        return m;
    };
    // [x,x,x²] = 2e as a coordinate vector.
    RatVector base(K + 1, Rational(0));
    base[0] = 2;
    for (unsigned mu = 2; mu <= bound; ++mu)
        for (unsigned nu = 2; nu <= bound; ++nu) {
            if (mu + nu > K) continue;
            RatVector acc(K + 1, Rational(0));
            for (unsigned a = 1; a < mu; ++a)
                for (unsigned b = 1; b < nu; ++b) {
                    RatMatrix op = Lpow(a - 1) * fl_direct_matrix(mu - a - 1, K) * Lpow(b - 1) *
                                   fl_direct_matrix(nu - 1 - b, K);
                    RatVector v = op.apply(base);
                    for (unsigned k = 0; k <= K; ++k)
                        acc[k] += Rational(static_cast<long>(a)) *
                                  Rational(static_cast<long>(b)) * v[k];
                }
            // expected: x^μ x^ν − x^{μ+ν}
            RatVector expect(K + 1, Rational(0));
            for (const auto& [deg, coef] : fl_monomial_product(mu, nu)) expect[deg] += coef;
            expect[mu + nu] -= 1;
            if (acc != expect) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Exponential wave-packet identity
// ---------------------------------------------------------------------------

// Exact bivariate series in two formal amplitudes with coefficients that are
// themselves elements of the algebra: index (a, b) -> element of degree ≤ K.
struct BivariateSeries {
    std::map<std::pair<unsigned, unsigned>, FLElement> terms;
    unsigned total_degree = 0;

    bool operator==(const BivariateSeries& o) const {
        for (const auto& [k, v] : terms)
            if (!v.is_zero()) {
                auto it = o.terms.find(k);
                if (it == o.terms.end() || !(it->second == v)) return false;
            }
        for (const auto& [k, v] : o.terms)
            if (!v.is_zero() && terms.find(k) == terms.end()) return false;
        return true;
    }
};

struct ExpIdentityReport {
    bool equal = true;
    unsigned total_degree = 0;
};

// exp(iαx)·exp(iβx) compared against exp(i(α+β)x)·cosh(αβ) to total degree D
// in (α, β), coefficient-by-coefficient, exactly.
inline ExpIdentityReport exp_identity_check(unsigned D, unsigned K = fl_default_truncation) {
    ExpIdentityReport rep;
    rep.total_degree = D;
    CRational i = CRational::i();
    auto ipow = [&](unsigned n) {
        CRational p{Rational(1), Rational(0)};
        for (unsigned k = 0; k < n; ++k) p = p * i;
        return p;
    };
    BivariateSeries lhs, rhs;
    lhs.total_degree = rhs.total_degree = D;
    // Left side: Σ_{a+b≤D} i^{a+b}/(a!b!) · (x^a x^b).
    for (unsigned a = 0; a <= D; ++a)
        for (unsigned b = 0; a + b <= D; ++b) {
            CRational s = ipow(a + b);
            Rational f = Rational(1) / (Rational(factorial(a)) * Rational(factorial(b)));
            FLElement prod = fl_mul(FLElement::monomial(a, K), FLElement::monomial(b, K));
            lhs.terms[{a, b}] = prod.scaled(CRational{s.re * f, s.im * f});
        }
    // Right side: Σ_m i^m (α+β)^m x^m / m! · Σ_t (αβ)^{2t} / (2t)!.
    for (unsigned m = 0; m <= D; ++m)
        for (unsigned t = 0; m + 4 * t <= 2 * D; ++t) {
            for (unsigned j = 0; j <= m; ++j) {
                unsigned a = j + 2 * t, b = (m - j) + 2 * t;
                if (a + b > D) continue;
                CRational s = ipow(m);
                Rational f = binomial(m, j) / (Rational(factorial(m)) * factorial(2 * t));
                FLElement mono = FLElement::monomial(m, K).scaled(CRational{s.re * f, s.im * f});
                auto key = std::make_pair(a, b);
                auto it = rhs.terms.find(key);
                if (it == rhs.terms.end())
                    rhs.terms[key] = mono;
                else
                    it->second = it->second + mono;
            }
        }
    rep.equal = lhs == rhs;
    return rep;
}

// ---------------------------------------------------------------------------
// h(ρ)-weighted variant
// ---------------------------------------------------------------------------

// Weight recursion h(ρ) = (2 − 1/ρ)·h(ρ−1), seeded with h(0) = 1 (the step
// alone does not determine the scale); then h(1) = 1, h(2) = 3/2.
inline std::vector<Rational> h_weight_table(unsigned max_rho) {
    std::vector<Rational> h(max_rho + 1);
    h[0] = 1;
    for (unsigned rho = 1; rho <= max_rho; ++rho)
        h[rho] = (Rational(2) - Rational(1) / Rational(static_cast<long>(rho))) * h[rho - 1];
    return h;
}

inline FLElement h_variant_mul(const FLElement& p, const FLElement& q,
                               const std::vector<Rational>& h) {
    FLElement r;
    r.truncation = std::min(p.truncation, q.truncation);
    for (const auto& [mu, cp] : p.coeffs)
        for (const auto& [nu, cq] : q.coeffs) {
            if (mu + nu > r.truncation) throw truncation_error("product degree exceeds truncation");
            CRational s = cp * cq;
            for (unsigned rho = 0; 2 * rho <= mu && 2 * rho <= nu; ++rho) {
                if (rho >= h.size()) throw input_error("h table too short");
                Rational coef = h[rho] * Rational(factorial(2 * rho)) * binomial(mu, 2 * rho) *
                                binomial(nu, 2 * rho);
                r.add_term(mu + nu - 4 * rho, CRational{s.re * coef, s.im * coef});
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Degree-4 compatibility probe (the identity 2u[v,v,u] + 2v[u,u,v] = u²v² − (uv)²)
// ---------------------------------------------------------------------------

struct FLOsbornReport {
    bool witness_found = false;  // the identity fails on some pair
    FLElement witness_u, witness_v, witness_residual;
    bool generator_square_case_zero = true;  // x⁶ − 3x²x⁴ + 2x³x³ = 0
    unsigned trials = 0;
};

inline FLElement random_fl_element(std::mt19937_64& rng, unsigned max_deg,
                                   unsigned K = fl_default_truncation) {
    std::uniform_int_distribution<int> coef(-4, 4);
    FLElement e;
    e.truncation = K;
    for (unsigned d = 0; d <= max_deg; ++d) {
        int c = coef(rng);
        if (c != 0) e.coeffs[d] = CRational(Rational(c));
    }
    return e;
}

template <typename Mul>
FLOsbornReport fl_degree4_probe(Mul mul, unsigned trials, std::uint64_t seed,
                                unsigned K = fl_default_truncation) {
    FLOsbornReport rep;
    rep.trials = trials;
    auto assoc = [&](const FLElement& a, const FLElement& b, const FLElement& c) {
        return mul(mul(a, b), c) - mul(a, mul(b, c));
    };
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials && !rep.witness_found; ++t) {
        FLElement u = random_fl_element(rng, 3, K);
        FLElement v = random_fl_element(rng, 3, K);
        FLElement lhs = mul(u, assoc(v, v, u)).scaled(CRational(Rational(2))) +
                        mul(v, assoc(u, u, v)).scaled(CRational(Rational(2)));
        FLElement rhs = mul(mul(u, u), mul(v, v)) - mul(mul(u, v), mul(u, v));
        FLElement res = lhs - rhs;
        if (!res.is_zero()) {
            rep.witness_found = true;
            rep.witness_u = u;
            rep.witness_v = v;
            rep.witness_residual = res;
        }
    }
    // Restriction to the generating element with v = x, u = x²:
    // x⁶ − 3x²x⁴ + 2x³x³ must vanish.
    auto X = [&](unsigned d) { return FLElement::monomial(d, K); };
    FLElement m1 = X(6) - fl_mul(X(2), X(4)).scaled(CRational(Rational(3))) +
                   fl_mul(X(3), X(3)).scaled(CRational(Rational(2)));
    rep.generator_square_case_zero = m1.is_zero();
    return rep;
}

// ---------------------------------------------------------------------------
// Two-variable associator coefficients
// ---------------------------------------------------------------------------

// C₁ = ½; C_φ(2φ−1) = −Σ_{μ=1}^{φ−1} C_μ C_{φ−μ}.
inline std::vector<Rational> cphi_table(unsigned phi_max) {
    if (phi_max < 1) throw input_error("coefficient table needs at least one entry");
    std::vector<Rational> c(phi_max + 1);
    c[1] = Rational(1, 2);
    for (unsigned phi = 2; phi <= phi_max; ++phi) {
        Rational s(0);
        for (unsigned mu = 1; mu < phi; ++mu) s += c[mu] * c[phi - mu];
        c[phi] = -s / Rational(static_cast<long>(2 * phi - 1));
    }
    return c;
}

struct TwoVarAssociatorTerm {
    unsigned w_power = 0;     // exponent of the holomorphic generator
    unsigned wbar_power = 0;  // exponent of the conjugate generator
    Rational coefficient;
};

// Coefficient list of [w, w^σ, w̄^ν] = Σ_φ C_φ σ!ν! w^{σ+1−2φ} w̄^{ν−2φ} / ((σ+1−2φ)!(ν−2φ)!).
inline std::vector<TwoVarAssociatorTerm> two_var_associator(unsigned sigma, unsigned nu,
                                                            const std::vector<Rational>& c) {
    std::vector<TwoVarAssociatorTerm> out;
    for (unsigned phi = 1; 2 * phi <= sigma + 1 && 2 * phi <= nu; ++phi) {
        if (phi >= c.size()) throw input_error("coefficient table too short");
        unsigned wp = sigma + 1 - 2 * phi, wbp = nu - 2 * phi;
        Rational coef = c[phi] * Rational(factorial(sigma)) * Rational(factorial(nu)) /
                        (Rational(factorial(wp)) * Rational(factorial(wbp)));
        if (coef != 0) out.push_back({wp, wbp, coef});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Diagonal specializations of the tensor-form axioms
// ---------------------------------------------------------------------------

struct FLTensorReport {
    bool diagonal_matches_2e = false;       // [x,x,x²] = 2(1+1−1)·e
    bool triple_vanishes = false;           // [x,x,x] = 0
    bool two_thirds_variant_matches = false;  // (2/3)(1+1+1)·e = 2e agrees
};

inline FLTensorReport fl_tensor_axiom_check(unsigned K = fl_default_truncation) {
    FLTensorReport rep;
    auto X = [&](unsigned d) { return FLElement::monomial(d, K); };
    FLElement assoc = fl_associator(X(1), X(1), X(2));
    FLElement two_e = FLElement::unit(K).scaled(CRational(Rational(2)));
    rep.diagonal_matches_2e = assoc == two_e;
    rep.triple_vanishes = fl_associator(X(1), X(1), X(1)).is_zero();
    FLElement variant = FLElement::unit(K).scaled(CRational(Rational(2, 3) * Rational(3)));
    rep.two_thirds_variant_matches = assoc == variant;
    return rep;
}

}  // namespace nonassoc
