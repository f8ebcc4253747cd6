#pragma once

// Name-based registry of the built-in algebras available to the CLI and the
// test suite.

#include <string>
#include <vector>

#include "builtins.hpp"
#include "oct_matrices.hpp"
#include "structure_algebra.hpp"

namespace nonassoc {

inline const std::vector<std::string>& builtin_algebra_names() {
    static const std::vector<std::string> names{
        "octonions", "quaternions", "complex-as-real", "dual-numbers", "mat2",
        "H2",        "H3",          "H4",              "l44pp",        "l66pp",
        "U3",        "U4",          "U5",              "oct-imag-comm"};
    return names;
}

inline AlgebraPtr resolve_builtin_algebra(const std::string& name) {
    if (name == "octonions") return octonion_algebra();
    if (name == "quaternions") return quaternion_algebra();
    if (name == "complex-as-real") return complex_as_real_algebra();
    if (name == "dual-numbers") return dual_number_algebra();
    if (name == "mat2") return mat2_algebra();
    if (name == "U3") return u3_algebra();
    if (name == "U4") return u4_algebra();
    if (name == "U5") return u5_algebra();
    if (name == "oct-imag-comm") return imaginary_octonion_commutator_algebra();
    if (name == "H2" || name == "H3" || name == "H4" || name == "l44pp" || name == "l66pp")
        return export_structure_algebra(name);
    throw input_error("unknown builtin algebra: " + name);
}

}  // namespace nonassoc
