#pragma once

// An 8-dimensional one-sided distributive quasi-field: the product a∘x is
// given by a fixed 8×8 matrix in the components of a, acting linearly on x.
// The matrix carries a scale parameter alpha > 0 on the first row and a map
// rho applied to the leading component on the diagonal. With alpha = 1 and
// rho = id the product is octonion multiplication (under the basis
// correspondence locked below); nonlinear rho breaks right-distributivity
// while left-distributivity survives by construction.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "near_field.hpp"
#include "octonion.hpp"

namespace nonassoc {

using Vec8 = std::array<double, 8>;

enum class RhoFamily { Identity, Cubic, PiecewiseLinear };

struct HaehlParams {
    double alpha = 1.0;
    RhoFamily rho = RhoFamily::Identity;
    double slope = 2.0;  // negative-branch slope for the piecewise-linear family

    double rho_apply(double t) const {
        switch (rho) {
            case RhoFamily::Identity: return t;
            case RhoFamily::Cubic: return t * t * t;
            case RhoFamily::PiecewiseLinear: return t < 0.0 ? slope * t : t;
        }
        return t;
    }
};

inline RhoFamily rho_family_from_name(const std::string& name) {
    if (name == "identity" || name == "id") return RhoFamily::Identity;
    if (name == "cubic" || name == "t3") return RhoFamily::Cubic;
    if (name == "piecewise" || name == "piecewise-linear") return RhoFamily::PiecewiseLinear;
    throw input_error("unknown rho family: " + name);
}

// The defining 8×8 matrix M(a); a∘x = M(a)·x. Rows/columns 0-based here.
inline std::array<Vec8, 8> haehl_matrix(const Vec8& a, const HaehlParams& p) {
    double r = p.rho_apply(a[0]);
    double al = p.alpha;
    return {{
        {a[0], -al * a[1], -al * a[2], -al * a[3], -al * a[4], -al * a[5], -al * a[6], -al * a[7]},
        {a[1], r, -a[3], a[2], -a[5], a[4], a[7], -a[6]},
        {a[2], a[3], r, -a[1], -a[6], -a[7], a[4], a[5]},
        {a[3], -a[2], a[1], r, -a[7], a[6], -a[5], a[4]},
        {a[4], a[5], a[6], a[7], r, -a[1], -a[2], -a[3]},
        {a[5], -a[4], a[7], -a[6], a[1], r, a[3], -a[2]},
        {a[6], -a[7], -a[4], a[5], a[2], -a[3], r, a[1]},
        {a[7], a[6], -a[5], -a[4], a[3], a[2], -a[1], r},
    }};
}

inline Vec8 haehl_mul(const Vec8& a, const Vec8& x, const HaehlParams& p) {
    auto m = haehl_matrix(a, p);
    Vec8 out{};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) out[i] += m[i][j] * x[j];
    return out;
}

inline Vec8 vec8_add(const Vec8& a, const Vec8& b) {
    Vec8 r{};
    for (std::size_t k = 0; k < 8; ++k) r[k] = a[k] + b[k];
    return r;
}
inline Vec8 vec8_sub(const Vec8& a, const Vec8& b) {
    Vec8 r{};
    for (std::size_t k = 0; k < 8; ++k) r[k] = a[k] - b[k];
    return r;
}
inline double vec8_max_abs(const Vec8& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

// Basis correspondence between this product's basis (index 0..7, index 0 the
// unit) and the octonion basis (1, e1..e7), derived by exhausting all signed
// permutations against the 64 basis products at alpha = 1, rho = id and then
// frozen. Several correspondences exist (the octonion automorphism group acts
// on them); this one carries a single sign flip.
//   basis k ↦ sign[k] · e_{target[k]}
inline constexpr std::array<int, 8> haehl_basis_target = {0, 1, 2, 4, 3, 7, 5, 6};
inline constexpr std::array<int, 8> haehl_basis_sign = {1, 1, 1, 1, 1, 1, 1, -1};

// Map a coefficient vector across the locked correspondence.
inline ApproxOctonion haehl_to_octonion(const Vec8& a) {
    ApproxOctonion o;
    for (std::size_t k = 0; k < 8; ++k)
        o.c[static_cast<std::size_t>(haehl_basis_target[k])] =
            static_cast<double>(haehl_basis_sign[k]) * a[k];
    return o;
}

inline Vec8 octonion_to_haehl(const ApproxOctonion& o) {
    Vec8 a{};
    for (std::size_t k = 0; k < 8; ++k)
        a[k] = static_cast<double>(haehl_basis_sign[k]) *
               o.c[static_cast<std::size_t>(haehl_basis_target[k])];
    return a;
}

}  // namespace nonassoc
