#pragma once

// Exact polynomial near-ring: elements are ordered words of terms n·x^h with
// non-negative exponents. Addition is word concatenation followed by
// free-group-style reduction (adjacent terms with equal exponents merge by
// coefficient addition and vanish at coefficient zero, cascading). Addition is
// therefore non-commutative while multiplication distributes from the right.

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace nonassoc {

struct PNRTerm {
    Rational coef;
    unsigned exponent = 0;
    bool operator==(const PNRTerm& o) const = default;
};

struct PNRElement {
    // Invariant: no zero coefficients; adjacent terms have distinct exponents.
    std::vector<PNRTerm> terms;
    bool operator==(const PNRElement& o) const = default;
    bool is_zero() const { return terms.empty(); }
};

inline PNRElement pnr_monomial(Rational coef, long exponent) {
    if (exponent < 0) throw input_error("polynomial near-ring exponent must be non-negative");
    PNRElement e;
    if (coef != 0) e.terms.push_back({std::move(coef), static_cast<unsigned>(exponent)});
    return e;
}

inline PNRElement pnr_zero() { return PNRElement{}; }

// Reduce a raw word: repeatedly merge adjacent equal-exponent terms, dropping
// zero coefficients; merging can expose new adjacent pairs (cascading).
inline PNRElement pnr_reduce(const std::vector<PNRTerm>& raw) {
    PNRElement out;
    for (const PNRTerm& t : raw) {
        if (t.coef == 0) continue;
        PNRTerm cur = t;
        while (!out.terms.empty() && out.terms.back().exponent == cur.exponent) {
            cur.coef += out.terms.back().coef;
            out.terms.pop_back();
            if (cur.coef == 0) break;
        }
        if (cur.coef != 0) out.terms.push_back(std::move(cur));
    }
    return out;
}

inline PNRElement pnr_add(const PNRElement& f, const PNRElement& g) {
    std::vector<PNRTerm> raw = f.terms;
    raw.insert(raw.end(), g.terms.begin(), g.terms.end());
    return pnr_reduce(raw);
}

// Additive inverse: the word reversed with negated coefficients.
inline PNRElement pnr_neg(const PNRElement& f) {
    PNRElement out;
    out.terms.reserve(f.terms.size());
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it)
        out.terms.push_back({-it->coef, it->exponent});
    return out;
}

inline PNRElement pnr_sub(const PNRElement& f, const PNRElement& g) {
    return pnr_add(f, pnr_neg(g));
}

// Multiplication is composition of the underlying group maps: each term
// m_j x^{k_j} of the left factor contributes the right word with exponents
// shifted by k_j, taken to the additive-group power m_j (|m_j| repetitions,
// the group inverse for negative m_j). The contributions are concatenated in
// term order and reduced. This is the only reading under which the one-sided
// distributive law (f+g)h = fh + gh and associativity hold exactly at the
// word level; left coefficients must therefore be integers.
inline PNRElement pnr_mul(const PNRElement& f, const PNRElement& g) {
    std::vector<PNRTerm> raw;
    for (const PNRTerm& ft : f.terms) {
        if (ft.coef.get_den() != 1)
            throw input_error("left-factor coefficients act as group powers and must be integers");
        long m = static_cast<long>(mpz_get_si(ft.coef.get_num().get_mpz_t()));
        std::vector<PNRTerm> shifted;
        shifted.reserve(g.terms.size());
        for (const PNRTerm& gt : g.terms)
            shifted.push_back({gt.coef, gt.exponent + ft.exponent});
        if (m < 0) {  // group inverse: reversed word, negated coefficients
            std::vector<PNRTerm> inv;
            for (auto it = shifted.rbegin(); it != shifted.rend(); ++it)
                inv.push_back({-it->coef, it->exponent});
            shifted = std::move(inv);
            m = -m;
        }
        for (long rep = 0; rep < m; ++rep)
            raw.insert(raw.end(), shifted.begin(), shifted.end());
    }
    return pnr_reduce(raw);
}

// Alternative coefficient reading: m_j ring-multiplies the inner coefficients
// in place instead of acting as a group power. Coincides with pnr_mul when
// every left coefficient is 0 or 1, or the right factor is a monomial;
// otherwise it can violate the one-sided distributive law, so it is provided
// for comparison reports only.
inline PNRElement pnr_mul_ring_scaled(const PNRElement& f, const PNRElement& g) {
    std::vector<PNRTerm> raw;
    raw.reserve(f.terms.size() * g.terms.size());
    for (const PNRTerm& ft : f.terms)
        for (const PNRTerm& gt : g.terms)
            raw.push_back({ft.coef * gt.coef, ft.exponent + gt.exponent});
    return pnr_reduce(raw);
}

inline std::string pnr_to_string(const PNRElement& f) {
    if (f.terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) s += " + ";
        s += rational_to_string(f.terms[i].coef) + "*x^" + std::to_string(f.terms[i].exponent);
    }
    return s;
}

struct PNRDistributivityReport {
    bool generator_distributes = false;  // x^k (f+g) = x^k f + x^k g
    bool failure_found = false;          // non-monomial left factor witness
    PNRElement witness_left, witness_f, witness_g, witness_residual;
};

inline PNRElement random_pnr_word(std::mt19937_64& rng, std::size_t max_len = 4,
                                  unsigned max_exp = 3) {
    std::uniform_int_distribution<std::size_t> len_d(0, max_len);
    std::uniform_int_distribution<int> coef_d(-3, 3);
    std::uniform_int_distribution<unsigned> exp_d(0, max_exp);
    std::vector<PNRTerm> raw;
    std::size_t len = len_d(rng);
    for (std::size_t i = 0; i < len; ++i) raw.push_back({Rational(coef_d(rng)), exp_d(rng)});
    return pnr_reduce(raw);
}

// Verifies that the monomial generator x^k is an endomorphism of the additive
// group and searches for a left-distributivity failure with a general
// (non-monomial) left factor.
inline PNRDistributivityReport pnr_generator_left_distributive_check(
    unsigned k, const PNRElement& f, const PNRElement& g, unsigned search_trials = 200,
    std::uint64_t seed = 1) {
    PNRDistributivityReport rep;
    PNRElement xk = pnr_monomial(1, static_cast<long>(k));
    rep.generator_distributes =
        pnr_mul(xk, pnr_add(f, g)) == pnr_add(pnr_mul(xk, f), pnr_mul(xk, g));
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < search_trials && !rep.failure_found; ++t) {
        PNRElement lf = random_pnr_word(rng);
        if (lf.terms.size() < 2) continue;  // monomials always distribute
        PNRElement a = random_pnr_word(rng);
        PNRElement b = random_pnr_word(rng);
        PNRElement res = pnr_sub(pnr_mul(lf, pnr_add(a, b)),
                                 pnr_add(pnr_mul(lf, a), pnr_mul(lf, b)));
        if (!res.is_zero()) {
            rep.failure_found = true;
            rep.witness_left = lf;
            rep.witness_f = a;
            rep.witness_g = b;
            rep.witness_residual = res;
        }
    }
    return rep;
}

}  // namespace nonassoc
