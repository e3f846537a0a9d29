#pragma once

// Exact-arithmetic structure-constant algebra for finite-dimensional
// Hom-bialgebras: twisting of coproducts, quasitriangular structures, and
// elementwise coherence verification of the representation categories.

#include "rational.hpp"    // IWYU pragma: export
#include "errors.hpp"      // IWYU pragma: export
#include "linalg.hpp"      // IWYU pragma: export
#include "sparse.hpp"      // IWYU pragma: export
#include "tensor.hpp"      // IWYU pragma: export
#include "hom_data.hpp"    // IWYU pragma: export
#include "sweedler.hpp"    // IWYU pragma: export
#include "report.hpp"      // IWYU pragma: export
#include "axioms.hpp"      // IWYU pragma: export
#include "correspondence.hpp"  // IWYU pragma: export
#include "twist.hpp"       // IWYU pragma: export
#include "rmatrix.hpp"     // IWYU pragma: export
#include "rep_category.hpp"  // IWYU pragma: export
#include "instances.hpp"   // IWYU pragma: export
#include "io.hpp"          // IWYU pragma: export
