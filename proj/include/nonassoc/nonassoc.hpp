#pragma once

// Umbrella header for the whole library.

#include "rational.hpp"         // exact scalars
#include "linalg.hpp"           // exact dense linear algebra
#include "octonion.hpp"         // octonions and vector-matrix form
#include "structure_algebra.hpp"  // structure-constant algebras and engine ops
#include "builtins.hpp"         // small named algebras
#include "identities.hpp"       // identity catalog and checker
#include "oct_matrices.hpp"     // Hermitian octonionic matrix families
#include "registry.hpp"         // name-based algebra lookup
#include "near_field.hpp"       // one-sided distributive systems (floating point)
#include "haehl.hpp"            // 8-dimensional quasi-field
#include "pnr.hpp"              // polynomial near-ring
#include "fl_algebra.hpp"       // fundamental-length algebra
#include "json_io.hpp"          // file loading and report serialization
