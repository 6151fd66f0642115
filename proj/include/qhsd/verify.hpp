#pragma once

#include "qhsd/manifold.hpp"
#include "qhsd/report.hpp"

namespace qhsd {

// Runs every check applicable to the sections present in the file: ring
// axioms, omega-invertibility and inverse residual, Betti periodicity,
// Lefschetz transfer consistency, the hard Lefschetz window, the divisibility
// obstruction, and the Seidel enumeration summary.  cap bounds Novikov-ring
// inversions.
VerificationReport run_verify(const ManifoldFile& m, const Rational& cap);

}  // namespace qhsd
