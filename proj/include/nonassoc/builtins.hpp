#pragma once

// Built-in structure algebras: the small named algebras available to the CLI
// and the test suite by name. The Hermitian octonionic matrix families are
// provided by oct_matrices.hpp and registered alongside these.

#include <functional>

#include "octonion.hpp"
#include "structure_algebra.hpp"

namespace nonassoc {

namespace detail {

// Assemble dense structure constants from a basis-product callback.
inline std::vector<Rational> constants_from(
    std::size_t dim, const std::function<RatVector(std::size_t, std::size_t)>& mult) {
    std::vector<Rational> c(dim * dim * dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            RatVector p = mult(i, j);
            for (std::size_t k = 0; k < dim; ++k) c[(i * dim + j) * dim + k] = p[k];
        }
    return c;
}

// Conjugation (negate all non-unit basis vectors) as an involution matrix.
inline RatMatrix conjugation_involution(std::size_t dim) {
    RatMatrix m(dim, dim);
    m(0, 0) = 1;
    for (std::size_t i = 1; i < dim; ++i) m(i, i) = -1;
    return m;
}

}  // namespace detail

inline AlgebraPtr octonion_algebra() {
    static const AlgebraPtr alg = [] {
        const auto& t = detail::oct_table();
        auto mult = [&t](std::size_t i, std::size_t j) {
            RatVector v(8, Rational(0));
            v[static_cast<std::size_t>(t.index[i][j])] = Rational(t.sign[i][j]);
            return v;
        };
        std::vector<std::string> names{"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
        return StructureAlgebra::create("octonions", 8, names,
                                        detail::constants_from(8, mult), 0,
                                        detail::conjugation_involution(8));
    }();
    return alg;
}

// Quaternions realized on the octonion units (1, e1, e2, e4), which close:
// e1·e2 = e4 and cyclic.
inline AlgebraPtr quaternion_algebra() {
    static const AlgebraPtr alg = [] {
        const std::size_t sub[4] = {0, 1, 2, 4};
        const auto& t = detail::oct_table();
        auto pos = [&sub](int k) {
            for (std::size_t s = 0; s < 4; ++s)
                if (sub[s] == static_cast<std::size_t>(k)) return s;
            throw input_error("quaternion basis not closed");
        };
        auto mult = [&](std::size_t i, std::size_t j) {
            RatVector v(4, Rational(0));
            v[pos(t.index[sub[i]][sub[j]])] = Rational(t.sign[sub[i]][sub[j]]);
            return v;
        };
        std::vector<std::string> names{"1", "i", "j", "k"};
        return StructureAlgebra::create("quaternions", 4, names, detail::constants_from(4, mult),
                                        0, detail::conjugation_involution(4));
    }();
    return alg;
}

inline AlgebraPtr complex_as_real_algebra() {
    static const AlgebraPtr alg = [] {
        auto mult = [](std::size_t i, std::size_t j) {
            RatVector v(2, Rational(0));
            if (i == 0 || j == 0)
                v[i + j] = 1;
            else
                v[0] = -1;
            return v;
        };
        return StructureAlgebra::create("complex-as-real", 2, {"1", "i"},
                                        detail::constants_from(2, mult), 0,
                                        detail::conjugation_involution(2));
    }();
    return alg;
}

// 1, d with d² = 0: commutative, associative, not semi-formally real.
inline AlgebraPtr dual_number_algebra() {
    static const AlgebraPtr alg = [] {
        auto mult = [](std::size_t i, std::size_t j) {
            RatVector v(2, Rational(0));
            if (i == 0 || j == 0) v[i + j] = 1;
            return v;
        };
        return StructureAlgebra::create("dual-numbers", 2, {"1", "d"},
                                        detail::constants_from(2, mult), 0);
    }();
    return alg;
}

// 2×2 rational matrices in the split-quaternion basis 1, s1 = E11−E22,
// s2 = E12+E21, s3 = E12−E21 (s1² = s2² = 1, s3² = −1): associative,
// noncommutative, with nilpotents (s2+s3)² = 0.
inline AlgebraPtr mat2_algebra() {
    static const AlgebraPtr alg = [] {
        // Products among {s1, s2, s3} (index 1..3): table[a-1][b-1] = (index, sign).
        static const int idx[3][3] = {{0, 3, 2}, {3, 0, 1}, {2, 1, 0}};
        static const int sgn[3][3] = {{1, 1, 1}, {-1, 1, -1}, {-1, 1, -1}};
        auto mult = [](std::size_t i, std::size_t j) {
            RatVector v(4, Rational(0));
            if (i == 0 || j == 0) {
                v[i + j] = 1;
            } else {
                v[static_cast<std::size_t>(idx[i - 1][j - 1])] = Rational(sgn[i - 1][j - 1]);
            }
            return v;
        };
        RatMatrix inv(4, 4);
        inv(0, 0) = 1;
        for (std::size_t i = 1; i < 4; ++i) inv(i, i) = -1;  // trace-reversal
        return StructureAlgebra::create("mat2", 4, {"1", "s1", "s2", "s3"},
                                        detail::constants_from(4, mult), 0, std::move(inv));
    }();
    return alg;
}

// Commutative 4-dimensional algebra on E (unit), F, A, S with F² = F, A² = F,
// S² = 2(E + A), FA = A, FS = AS = S/2.
inline AlgebraPtr u4_algebra() {
    static const AlgebraPtr alg = [] {
        enum { E = 0, F = 1, A = 2, S = 3 };
        auto mult = [](std::size_t i, std::size_t j) {
            RatVector v(4, Rational(0));
            if (i > j) std::swap(i, j);
            if (i == E) {
                v[j] = 1;
            } else if (i == F && j == F) {
                v[F] = 1;
            } else if (i == F && j == A) {
                v[A] = 1;
            } else if (i == F && j == S) {
                v[S] = Rational(1, 2);
            } else if (i == A && j == A) {
                v[F] = 1;
            } else if (i == A && j == S) {
                v[S] = Rational(1, 2);
            } else {  // S·S
                v[E] = 2;
                v[A] = 2;
            }
            return v;
        };
        return StructureAlgebra::create("U4", 4, {"E", "F", "A", "S"},
                                        detail::constants_from(4, mult), 0);
    }();
    return alg;
}

// Commutative 5-dimensional algebra on E (unit), F, A, B, C with F² = F,
// A² = F, B² = C² = E, FA = A, FB = B/2, FC = C/2, AB = C/2, AC = B/2, BC = A.
inline AlgebraPtr u5_algebra() {
    static const AlgebraPtr alg = [] {
        enum { E = 0, F = 1, A = 2, B = 3, C = 4 };
        auto mult = [](std::size_t i, std::size_t j) {
            RatVector v(5, Rational(0));
            if (i > j) std::swap(i, j);
            if (i == E) {
                v[j] = 1;
            } else if (i == F && j == F) {
                v[F] = 1;
            } else if (i == F && j == A) {
                v[A] = 1;
            } else if (i == F && j == B) {
                v[B] = Rational(1, 2);
            } else if (i == F && j == C) {
                v[C] = Rational(1, 2);
            } else if (i == A && j == A) {
                v[F] = 1;
            } else if (i == A && j == B) {
                v[C] = Rational(1, 2);
            } else if (i == A && j == C) {
                v[B] = Rational(1, 2);
            } else if (i == B && j == B) {
                v[E] = 1;
            } else if (i == B && j == C) {
                v[A] = 1;
            } else {  // C·C
                v[E] = 1;
            }
            return v;
        };
        return StructureAlgebra::create("U5", 5, {"E", "F", "A", "B", "C"},
                                        detail::constants_from(5, mult), 0);
    }();
    return alg;
}

// 3-dimensional subalgebra on orthogonal idempotents E1, E2 and S with
// E1·S = E2·S = S/2 and S² = 2E1 + 4E2. The unit E1 + E2 is not a basis
// element, so no unit index is flagged.
inline AlgebraPtr u3_algebra() {
    static const AlgebraPtr alg = [] {
        enum { E1 = 0, E2 = 1, S = 2 };
        auto mult = [](std::size_t i, std::size_t j) {
            RatVector v(3, Rational(0));
            if (i > j) std::swap(i, j);
            if (i == E1 && j == E1) {
                v[E1] = 1;
            } else if (i == E2 && j == E2) {
                v[E2] = 1;
            } else if (j == S && i != S) {
                v[S] = Rational(1, 2);
            } else if (i == S && j == S) {
                v[E1] = 2;
                v[E2] = 4;
            }
            return v;  // E1·E2 = 0
        };
        return StructureAlgebra::create("U3", 3, {"E1", "E2", "S"},
                                        detail::constants_from(3, mult));
    }();
    return alg;
}

// Imaginary octonions under the commutator bracket [a,b] = ab − ba: the
// 7-dimensional anticommutative algebra that satisfies the Malcev identity
// but not the Jacobi identity. No unit, no involution.
inline AlgebraPtr imaginary_octonion_commutator_algebra() {
    static const AlgebraPtr alg = [] {
        const auto& t = detail::oct_table();
        auto mult = [&t](std::size_t i, std::size_t j) {
            RatVector v(7, Rational(0));
            // e_{i+1} e_{j+1} − e_{j+1} e_{i+1}; the real parts cancel.
            std::size_t a = i + 1, b = j + 1;
            if (t.index[a][b] != 0)
                v[static_cast<std::size_t>(t.index[a][b]) - 1] =
                    Rational(t.sign[a][b] - t.sign[b][a]);
            return v;
        };
        std::vector<std::string> names{"e1", "e2", "e3", "e4", "e5", "e6", "e7"};
        return StructureAlgebra::create("oct-imag-comm", 7, names,
                                        detail::constants_from(7, mult));
    }();
    return alg;
}

}  // namespace nonassoc
