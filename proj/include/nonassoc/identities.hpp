#pragma once

// Fixed catalog of polynomial identities with built-in evaluators, plus the
// checker producing reports. Checking strategy: multilinear identities (or
// supplied/derived multilinear forms) are verified exhaustively on basis
// tuples when affordable; every identity is additionally subjected to
// randomized exact trials with rational coefficients from {−9…9}/{1…9}.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "structure_algebra.hpp"

namespace nonassoc {

struct unknown_identity_error : std::runtime_error {
    explicit unknown_identity_error(const std::string& id)
        : std::runtime_error("unknown identity: " + id) {}
};

// Residual evaluator: list of residual elements, all zero iff the identity
// holds on the given argument tuple.
using IdentityEval = std::function<std::vector<Element>(const std::vector<Element>&)>;

struct IdentityDescriptor {
    std::string id;
    std::string anchor;        // opaque reference string printed by the CLI listing
    std::size_t arity = 0;
    std::vector<int> degrees;  // per-variable homogeneous degrees; empty when mixed
    IdentityEval eval;
    std::size_t lin_arity = 0;  // optional dedicated multilinear form
    IdentityEval lin_eval;
    IdentityEval variant_eval;  // optional side-by-side variant (reported in the note)
    std::string variant_label;
    std::string note;  // fixed caveat attached to every report for this id

    bool multilinear() const {
        if (degrees.size() != arity) return false;
        for (int d : degrees)
            if (d != 1) return false;
        return true;
    }
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

inline const std::vector<IdentityDescriptor>& identity_catalog() {
    static const std::vector<IdentityDescriptor> cat = [] {
        std::vector<IdentityDescriptor> v;
        auto A = [](const Element& x, const Element& y, const Element& z) {
            return associator(x, y, z);
        };
        auto C = [](const Element& x, const Element& y) { return commutator(x, y); };

        {
            IdentityDescriptor d;
            d.id = "jordan-identity";
            d.anchor = "Eq 2.9/2.15";
            d.arity = 2;
            d.degrees = {3, 1};
            d.eval = [A](const std::vector<Element>& t) {
                return std::vector<Element>{A(t[0], t[1], t[0] * t[0])};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "k-number-trio";
            d.anchor = "Eq 2.3";
            d.arity = 4;  // (a, b, c, d); the first line ignores d
            d.degrees = {1, 1, 1, 1};
            d.eval = [A](const std::vector<Element>& t) {
                const Element &a = t[0], &b = t[1], &c = t[2], &dd = t[3];
                Element l1 = A(a, b, c) + A(b, c, a) + A(c, a, b);
                Element l2 = A(a, dd, b * c) + A(b, dd, c * a) + A(c, dd, a * b);
                Element l3 = A(a, b * c, dd) - b * A(a, c, dd) - A(a, b, dd) * c;
                return std::vector<Element>{l1, l2, l3};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "jacobi";
            d.anchor = "Eq 2.6";
            d.arity = 3;
            d.degrees = {1, 1, 1};
            d.eval = [C](const std::vector<Element>& t) {
                return std::vector<Element>{C(t[0], C(t[1], t[2])) + C(t[1], C(t[2], t[0])) +
                                            C(t[2], C(t[0], t[1]))};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "r-number";
            d.anchor = "Eq 2.18";
            d.arity = 2;
            d.eval = [A](const std::vector<Element>& t) {
                const Element &a = t[0], &b = t[1];
                std::vector<Element> res;
                std::vector<Element> pw{a, a * a, (a * a) * a};
                for (std::size_t n = 0; n < 3; ++n)
                    for (std::size_t m = 0; m < 3; ++m) {
                        res.push_back(A(b, pw[n], pw[m]) + A(pw[n], pw[m], b));
                        res.push_back(A(pw[n], b, pw[m]));
                    }
                return res;
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "flexibility";
            d.anchor = "Eq 2.33";
            d.arity = 2;
            d.degrees = {2, 1};
            d.eval = [A](const std::vector<Element>& t) {
                return std::vector<Element>{A(t[0], t[1], t[0])};
            };
            v.push_back(std::move(d));
        }
        for (int deg = 3; deg <= 6; ++deg) {
            IdentityDescriptor d;
            d.id = "power-assoc(" + std::to_string(deg) + ")";
            d.anchor = "Eq 2.4";
            d.arity = 1;
            d.eval = [deg](const std::vector<Element>& t) {
                std::vector<Element> pw{t[0]};
                for (int k = 2; k <= deg; ++k) pw.push_back(pw.back() * t[0]);
                std::vector<Element> res;
                for (int n = 1; n < deg; ++n)
                    for (int m = 1; n + m <= deg; ++m)
                        res.push_back(pw[n - 1] * pw[m - 1] - pw[n + m - 1]);
                return res;
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "alternative-laws";
            d.anchor = "§2";
            d.arity = 2;
            d.degrees = {2, 1};
            d.eval = [A](const std::vector<Element>& t) {
                return std::vector<Element>{A(t[0], t[0], t[1]), A(t[0], t[1], t[0]),
                                            A(t[1], t[0], t[0])};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "distributivity";
            d.anchor = "Eq 3.5/3.8";
            d.arity = 3;
            d.eval = [](const std::vector<Element>& t) {
                const Element &a = t[0], &b = t[1], &c = t[2];
                Element sq = [](const Element& x) { return x * x; }(a + b + c);
                return std::vector<Element>{
                    (a + b) * c - a * c - b * c, c * (a + b) - c * a - c * b,
                    sq + a * a + b * b + c * c - (a + b) * (a + b) - (b + c) * (b + c) -
                        (c + a) * (c + a)};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "weak-distributivity";
            d.anchor = "Eq 3.9";
            d.arity = 3;
            d.degrees = {1, 1, 1};
            d.eval = [](const std::vector<Element>& t) {
                const Element &a = t[0], &b = t[1], &c = t[2];
                return std::vector<Element>{(a - b) * c + (b - c) * a + (c - a) * b};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "eq-3.10";
            d.anchor = "Eq 3.10";
            d.arity = 2;
            d.degrees = {1, 1};  // the residual (x+y)(x−y) − x² + y² is bilinear
            d.eval = [](const std::vector<Element>& t) {
                const Element &x = t[0], &y = t[1];
                return std::vector<Element>{(x + y) * (x - y) - x * x + y * y};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "lie-triple";
            d.anchor = "Eq 4.5/4.6";
            d.arity = 4;  // (x, u, v, z); the squared form uses (x, u, z)
            d.eval = [A](const std::vector<Element>& t) {
                const Element &x = t[0], &u = t[1], &vv = t[2], &z = t[3];
                Element two_u = Rational(2) * u;
                return std::vector<Element>{
                    A(x, u * u, z) - two_u * A(x, u, z),
                    A(x, u * vv, z) - u * A(x, vv, z) - vv * A(x, u, z)};
            };
            d.lin_arity = 4;
            d.lin_eval = [A](const std::vector<Element>& t) {
                const Element &x = t[0], &u = t[1], &vv = t[2], &z = t[3];
                return std::vector<Element>{A(x, u * vv, z) + A(x, vv * u, z) -
                                            Rational(2) * (u * A(x, vv, z)) -
                                            Rational(2) * (vv * A(x, u, z))};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "elementary-L";
            d.anchor = "Eq 4.7/4.8";
            d.arity = 4;  // (u, v, w, x)
            d.degrees = {1, 1, 1, 2};
            auto L = [A](const Element& u, const Element& v, const Element& w, const Element& x) {
                return A(x, A(u, x, v), w) + A(u, A(x, x, v), w) - A(u, x, A(v, x, w));
            };
            d.eval = [L](const std::vector<Element>& t) {
                const Element &u = t[0], &v = t[1], &w = t[2], &x = t[3];
                return std::vector<Element>{L(u, v, w, x) + L(v, w, u, x) + L(w, u, v, x)};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "elementary-fundamental";
            d.anchor = "Eq 4.9";
            d.arity = 5;  // (u, v, x, y, z)
            d.degrees = {1, 1, 1, 1, 1};
            d.eval = [A](const std::vector<Element>& t) {
                const Element &u = t[0], &vv = t[1], &x = t[2], &y = t[3], &z = t[4];
                return std::vector<Element>{-A(A(u, vv, x), z, y) + A(A(u, y, x), z, vv) +
                                            A(u, A(vv, z, y), x) + A(y, A(u, z, x), vv)};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "osborn-deg5-FG";
            d.anchor = "Eq 4.13";
            d.arity = 3;  // (x, y, z)
            d.eval = [A](const std::vector<Element>& t) {
                const Element &x = t[0], &y = t[1], &z = t[2];
                Element f1 = A(y, A(x, x, z), x) - A(z, A(x, x, y), x);
                Element f2 = A(A(y, x, z), x, x) + A(A(x, x, y), x, z) - A(A(x, x, z), x, y);
                Element g1 = A(x, x, A(y, y, z)) + A(y, y, A(x, x, z)) + A(y, x, A(z, y, x)) +
                             A(x, y, A(z, x, y)) + A(z, x, A(x, y, y)) + A(z, y, A(y, x, x));
                Element g2 = A(x, A(x, z, y), y) + A(z, A(x, y, y), x) + A(z, A(y, x, x), y);
                return std::vector<Element>{Rational(2) * f1 + f2, g1 - Rational(2) * g2};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "osborn-K";
            d.anchor = "Eq 4.14";
            d.arity = 2;
            d.degrees = {3, 2};
            d.note =
                "third coefficient family has no associator expression; only the restriction "
                "with the first and third coefficients zero is checked";
            d.eval = [A](const std::vector<Element>& t) {
                const Element &x = t[0], &y = t[1];
                return std::vector<Element>{-A(A(x, x, y), x, y) - A(A(y, y, x), x, x)};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "osborn-IV";
            d.anchor = "Eq 4.15/4.16/4.17";
            d.arity = 2;
            d.degrees = {4, 1};
            d.eval = [](const std::vector<Element>& t) {
                const Element &x = t[0], &y = t[1];
                Element x2 = x * x;
                Element x3 = x2 * x;
                Element x4 = x3 * x;
                Element l4 = x * (x * (x * (x * y)));
                Element h1 = x4 * y - Rational(4) * (x * (x3 * y)) +
                             Rational(6) * (x * (x * (x2 * y))) - Rational(3) * l4;
                Element h2 = -((x2 * x2) * y) + Rational(5) * (x * (x3 * y)) -
                             Rational(9) * (x * (x * (x2 * y))) + Rational(4) * l4 +
                             x * (x2 * (x * y)) + x2 * (x2 * y) - x3 * (x * y);
                Element h3 = x * (x * (x2 * y)) + x2 * (x * (x * y)) - x2 * (x2 * y) - l4;
                return std::vector<Element>{h1 + h3, h2, h1 + h2 + h3};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "osborn-deg4";
            d.anchor = "Eq 4.18/6.1/6.2/4.19";
            d.arity = 3;  // (x, y, v); the degree-6 specialization uses x alone
            d.eval = [A](const std::vector<Element>& t) {
                const Element &x = t[0], &y = t[1], &vv = t[2];
                Element xy = x * y;
                Element c1 = Rational(2) * A(x, x, y * y) + Rational(2) * A(y, y, x * x) -
                             Rational(2) * A(x, y, xy) - Rational(2) * A(y, x, xy) -
                             Rational(3) * ((x * x) * (y * y)) + Rational(3) * (xy * xy);
                Element c2 = x * A(vv, vv, y) + y * A(vv, vv, x) + vv * A(x, y, vv) +
                             vv * A(y, x, vv) - (vv * vv) * xy + (vv * x) * (vv * y);
                Element x2 = x * x;
                Element x3 = x2 * x;
                Element x4 = x3 * x;
                Element c3 = Rational(2) * (x * (x * (x2 * x2))) + ((x2 * x2) * x2) + x3 * x3 -
                             Rational(2) * (x * (x2 * x3)) - Rational(2) * (x2 * x4);
                return std::vector<Element>{c1, c2, c3};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "osborn-deg6-M";
            d.anchor = "Eq 4.20";
            d.arity = 1;
            d.degrees = {6};
            d.eval = [](const std::vector<Element>& t) {
                const Element& x = t[0];
                Element x2 = x * x;
                Element x3 = x2 * x;
                Element x4 = x3 * x;
                Element x5 = x4 * x;
                Element x6 = x5 * x;
                Element x2c = (x2 * x2) * x2;  // (x²)³
                Element m2 = Rational(3) * x2c - Rational(3) * (x * (x * (x2 * x2))) +
                             Rational(4) * x6 - Rational(6) * (x2 * x4) + Rational(2) * (x3 * x3);
                Element m3 = Rational(9) * x2c - Rational(6) * (x * (x2 * x3)) + Rational(8) * x6 -
                             Rational(18) * (x2 * x4) + Rational(7) * (x3 * x3);
                return std::vector<Element>{Rational(2) * m2 - m3};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "osborn-deg6-aux";
            d.anchor = "Eq 4.20 auxiliary";
            d.arity = 1;
            d.eval = [](const std::vector<Element>& t) {
                const Element& x = t[0];
                std::vector<Element> pw{x};
                for (int k = 2; k <= 6; ++k) pw.push_back(pw.back() * x);
                std::vector<Element> res;
                for (int n = 1; n <= 3; ++n)
                    res.push_back(Rational(3) * (x * (pw[1] * pw[n - 1])) - pw[2] * pw[n - 1] -
                                  Rational(2) * pw[n + 2]);
                res.push_back(Rational(9) * ((pw[1] * pw[1]) * pw[1]) + Rational(4) * pw[5] -
                              Rational(18) * (pw[1] * pw[3]) + Rational(5) * (pw[2] * pw[2]));
                return res;
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "malcev";
            d.anchor = "Eq 6.37/6.38";
            d.arity = 3;
            d.degrees = {2, 1, 1};
            d.eval = [](const std::vector<Element>& t) {
                const Element &x = t[0], &y = t[1], &z = t[2];
                auto J = [](const Element& a, const Element& b, const Element& c) {
                    return (a * b) * c + (b * c) * a + (c * a) * b;
                };
                Element c1 = J(x, y, x * z) - J(x, y, z) * x;
                Element c2 = (x * y) * (x * z) - ((x * y) * z) * x - ((y * z) * x) * x -
                             ((z * x) * x) * y;
                return std::vector<Element>{c1, c2};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "moufang";
            d.anchor = "Eq 6.39";
            d.arity = 3;
            d.degrees = {2, 1, 1};
            d.eval = [](const std::vector<Element>& t) {
                const Element &x = t[0], &y = t[1], &z = t[2];
                return std::vector<Element>{(x * y) * (z * x) - (x * (y * z)) * x};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "involution-axioms";
            d.anchor = "Eq 2.21";
            d.arity = 2;
            d.degrees = {1, 1};
            d.eval = [](const std::vector<Element>& t) {
                return std::vector<Element>{star(t[0] * t[1]) - star(t[1]) * star(t[0])};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "variance";
            d.anchor = "Eq 4.1";
            d.arity = 1;
            d.note = "expectation taken as the unit-component functional";
            d.eval = [](const std::vector<Element>& t) {
                const Element& a = t[0];
                const auto& alg = a.algebra;
                if (!alg->unit_index()) return std::vector<Element>{alg->zero()};
                std::size_t u = *alg->unit_index();
                Rational mean = a.coeffs[u];
                Element dev = a - mean * alg->unit();
                Rational lhs = (dev * dev).coeffs[u];
                Rational rhs = (a * a).coeffs[u] - mean * mean;
                return std::vector<Element>{(lhs - rhs) * alg->unit()};
            };
            v.push_back(std::move(d));
        }
        {
            IdentityDescriptor d;
            d.id = "quasi-assoc-2.8";
            d.anchor = "Eq 2.8";
            d.arity = 3;
            d.note = "printed coefficient form; see variant verdict for the 1/4 alternative";
            auto quasi_assoc = [](const std::vector<Element>& t, const Rational& assoc_coeff) {
                const Element &a = t[0], &b = t[1], &c = t[2];
                Rational half(1, 2);
                auto q = [&half](const Element& x, const Element& y) {
                    return half * (x * y + y * x);
                };
                Element lhs = q(q(a, b), c) - q(a, q(b, c));
                return std::vector<Element>{lhs - assoc_coeff * associator(a, b, c) -
                                            Rational(1, 4) * commutator(b, commutator(a, c))};
            };
            d.eval = [quasi_assoc](const std::vector<Element>& t) {
                return quasi_assoc(t, Rational(1));  // (λ+μ)² = 1 at λ = μ = ½
            };
            d.variant_eval = [quasi_assoc](const std::vector<Element>& t) {
                return quasi_assoc(t, Rational(1, 4));
            };
            d.variant_label = "quarter-variant";
            v.push_back(std::move(d));
        }
        std::sort(v.begin(), v.end(),
                  [](const IdentityDescriptor& a, const IdentityDescriptor& b) {
                      return a.id < b.id;
                  });
        return v;
    }();
    return cat;
}

inline const IdentityDescriptor& find_identity(const std::string& id) {
    for (const auto& d : identity_catalog())
        if (d.id == id) return d;
    throw unknown_identity_error(id);
}

// ---------------------------------------------------------------------------
// Checking
// ---------------------------------------------------------------------------

enum class CheckMode { ExhaustiveIfMultilinear, Randomized, Both };

struct IdentityReport {
    std::string identity_id;
    std::string algebra_id;
    std::string status;  // holds-exhaustive | holds-randomized | fails
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<RatVector> witness;  // argument tuple coefficients when fails
    std::optional<Rational> residual_norm;
    std::string note;
};

namespace detail {

inline Rational residual_norm_of(const std::vector<Element>& res) {
    Rational n(0);
    for (const auto& e : res) n += e.abs_sum();
    return n;
}

inline bool all_zero(const std::vector<Element>& res) {
    return std::all_of(res.begin(), res.end(), [](const Element& e) { return e.is_zero(); });
}

// Full polarization of a homogeneous evaluator: substitutes subset sums per
// variable with inclusion–exclusion signs. Vanishing of the polarized form on
// all basis tuples implies the identity over the rationals.
inline std::vector<Element> polarized_eval(const IdentityDescriptor& d,
                                           const std::vector<Element>& args,
                                           const AlgebraPtr& alg) {
    std::vector<Element> acc;
    std::size_t nvars = d.degrees.size();
    std::vector<std::size_t> offset(nvars, 0);
    for (std::size_t i = 1; i < nvars; ++i)
        offset[i] = offset[i - 1] + static_cast<std::size_t>(d.degrees[i - 1]);
    std::vector<unsigned> subset(nvars, 0);
    while (true) {
        std::vector<Element> tuple;
        int sign = 1;
        for (std::size_t i = 0; i < nvars; ++i) {
            Element sum = alg->zero();
            int bits = 0;
            for (int b = 0; b < d.degrees[i]; ++b)
                if (subset[i] & (1u << b)) {
                    sum = sum + args[offset[i] + b];
                    ++bits;
                }
            if ((d.degrees[i] - bits) % 2 == 1) sign = -sign;
            tuple.push_back(std::move(sum));
        }
        std::vector<Element> res = d.eval(tuple);
        if (acc.empty())
            for (const auto& e : res) acc.push_back(sign > 0 ? e : -e);
        else
            for (std::size_t k = 0; k < res.size(); ++k)
                acc[k] = sign > 0 ? acc[k] + res[k] : acc[k] - res[k];
        // Advance the subset odometer.
        std::size_t i = 0;
        for (; i < nvars; ++i) {
            if (subset[i] + 1 < (1u << d.degrees[i])) {
                ++subset[i];
                break;
            }
            subset[i] = 0;
        }
        if (i == nvars) break;
    }
    return acc;
}

}  // namespace detail

inline IdentityReport check_identity(const AlgebraPtr& alg, const std::string& id,
                                     CheckMode mode = CheckMode::Both, std::size_t trials = 200,
                                     std::uint64_t seed = 1) {
    const IdentityDescriptor& d = find_identity(id);
    if (d.id == "involution-axioms" && !alg->involution())
        throw input_error("algebra has no involution");
    IdentityReport rep;
    rep.identity_id = d.id;
    rep.algebra_id = alg->name();
    rep.seed = seed;
    rep.note = d.note;
    std::size_t n = alg->dim();

    auto fail_with = [&](const std::vector<Element>& args) {
        // Re-verify the witness from scratch before reporting.
        std::vector<Element> res = d.eval(args);
        rep.status = "fails";
        rep.residual_norm = detail::residual_norm_of(res);
        for (const auto& e : args) rep.witness.push_back(e.coeffs);
    };

    // Exhaustive phase.
    bool exhaustive_done = false;
    if (mode != CheckMode::Randomized) {
        constexpr double kBudget = 400000.0;
        std::size_t lin_arity = 0;
        enum class Kind { Direct, Dedicated, Polarized, None } kind = Kind::None;
        double cost = 0;
        if (d.multilinear()) {
            kind = Kind::Direct;
            lin_arity = d.arity;
            cost = 1;
        } else if (d.lin_eval) {
            kind = Kind::Dedicated;
            lin_arity = d.lin_arity;
            cost = 1;
        } else if (!d.degrees.empty()) {
            kind = Kind::Polarized;
            lin_arity = 0;
            cost = 1;
            for (int deg : d.degrees) {
                lin_arity += static_cast<std::size_t>(deg);
                cost *= static_cast<double>(1u << deg);
            }
        }
        if (kind != Kind::None) {
            double tuples = 1;
            for (std::size_t i = 0; i < lin_arity; ++i) tuples *= static_cast<double>(n);
            if (tuples * cost <= kBudget) {
                std::vector<std::size_t> idx(lin_arity, 0);
                bool failed = false;
                while (!failed) {
                    std::vector<Element> args;
                    args.reserve(lin_arity);
                    for (std::size_t i = 0; i < lin_arity; ++i) args.push_back(alg->basis(idx[i]));
                    std::vector<Element> res;
                    switch (kind) {
                        case Kind::Direct:
                            res = d.eval(args);
                            break;
                        case Kind::Dedicated:
                            res = d.lin_eval(args);
                            break;
                        default:
                            res = detail::polarized_eval(d, args, alg);
                            break;
                    }
                    if (!detail::all_zero(res)) {
                        if (kind == Kind::Direct) {
                            fail_with(args);
                        } else {
                            // A linearized failure needs a direct witness for
                            // the report; fall back to the residual itself.
                            rep.status = "fails";
                            rep.residual_norm = detail::residual_norm_of(res);
                            for (const auto& e : args) rep.witness.push_back(e.coeffs);
                            if (!rep.note.empty()) rep.note += "; ";
                            rep.note += "witness is for the linearized form";
                        }
                        failed = true;
                        break;
                    }
                    std::size_t i = 0;
                    for (; i < lin_arity; ++i) {
                        if (++idx[i] < n) break;
                        idx[i] = 0;
                    }
                    if (i == lin_arity) break;
                }
                if (failed) return rep;
                exhaustive_done = true;
            }
        }
    }

    // Randomized phase.
    std::size_t trials_run = 0;
    if (mode != CheckMode::ExhaustiveIfMultilinear || !exhaustive_done) {
        std::mt19937_64 rng(seed ^ detail::fnv1a(d.id));
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Element> args;
            for (std::size_t i = 0; i < d.arity; ++i) args.push_back(random_element(alg, rng));
            ++trials_run;
            std::vector<Element> res = d.eval(args);
            if (!detail::all_zero(res)) {
                fail_with(args);
                rep.trials = trials_run;
                // Variant verdict still reported on failure.
                if (d.variant_eval) {
                    bool vh = detail::all_zero(d.variant_eval(args));
                    if (!rep.note.empty()) rep.note += "; ";
                    rep.note += d.variant_label + (vh ? " holds on witness" : " fails on witness");
                }
                return rep;
            }
        }
    }
    rep.trials = trials_run;
    rep.status = exhaustive_done ? "holds-exhaustive" : "holds-randomized";

    // Side-by-side variant (evaluated on its own randomized tuples).
    if (d.variant_eval) {
        std::mt19937_64 rng(seed ^ detail::fnv1a(d.id + "#variant"));
        bool vholds = true;
        for (std::size_t t = 0; t < trials && vholds; ++t) {
            std::vector<Element> args;
            for (std::size_t i = 0; i < d.arity; ++i) args.push_back(random_element(alg, rng));
            vholds = detail::all_zero(d.variant_eval(args));
        }
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += d.variant_label + (vholds ? " holds (randomized)" : " fails (randomized)");
    }
    return rep;
}

// Named profile subsets of the catalog.
inline std::vector<std::string> profile_ids(const std::string& profile) {
    static const std::map<std::string, std::vector<std::string>> profiles = {
        {"jordan",
         {"jordan-identity", "power-assoc(3)", "power-assoc(4)", "power-assoc(5)",
          "power-assoc(6)", "flexibility", "lie-triple"}},
        {"power", {"power-assoc(3)", "power-assoc(4)", "power-assoc(5)", "power-assoc(6)"}},
        {"alternative", {"alternative-laws", "flexibility", "moufang"}},
        {"elementary", {"elementary-L", "elementary-fundamental", "lie-triple"}},
        {"osborn",
         {"osborn-deg4", "osborn-deg5-FG", "osborn-deg6-M", "osborn-deg6-aux", "osborn-IV",
          "osborn-K"}},
        {"knumber", {"k-number-trio", "jacobi", "r-number"}},
    };
    if (profile.empty() || profile == "all") {
        std::vector<std::string> ids;
        for (const auto& d : identity_catalog()) ids.push_back(d.id);
        return ids;
    }
    auto it = profiles.find(profile);
    if (it != profiles.end()) return it->second;
    // A bare identity id is accepted as a one-element profile.
    for (const auto& d : identity_catalog())
        if (d.id == profile) return {profile};
    throw input_error("unknown profile or identity: " + profile);
}

inline std::vector<IdentityReport> check_all(const AlgebraPtr& alg,
                                             const std::string& profile = "all",
                                             CheckMode mode = CheckMode::Both,
                                             std::size_t trials = 200, std::uint64_t seed = 1) {
    std::vector<std::string> ids = profile_ids(profile);
    std::sort(ids.begin(), ids.end());
    std::vector<IdentityReport> reports;
    for (const auto& id : ids) {
        if (id == "involution-axioms" && !alg->involution()) continue;
        reports.push_back(check_identity(alg, id, mode, trials, seed));
    }
    return reports;
}

}  // namespace nonassoc
