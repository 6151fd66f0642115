#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhsd/betti.hpp"
#include "qhsd/ring.hpp"
#include "qhsd/smalldual.hpp"
#include "qhsd/subcrit.hpp"

namespace qhsd {

// Declared expectations a fixture ships with; verify compares computed
// outcomes against these and fails on mismatch.  Absent fields downgrade the
// corresponding checks to advisory reports.
struct Expectations {
    std::optional<bool> omega_invertible;
    std::optional<std::vector<long long>> sigma_betti;
    std::optional<bool> seidel_fiber_only;
    std::optional<int> seidel_class_count;
};

// One bundled manifold: metadata plus whichever sections the example has.
// Every present section is validated against its module's invariants on load.
struct ManifoldFile {
    std::string name;
    std::optional<SmallDualProfile> profile;
    std::optional<BettiTable> betti;        // table of X (or of the manifold itself)
    std::optional<BettiTable> sigma_betti;  // declared table of a hyperplane section
    std::optional<LambdaRing> lambda_ring;
    std::optional<NovikovRing> novikov_ring;
    std::optional<CurveClassData> cone;
    std::optional<int> d_min;
    std::optional<AffineChartModel> model;
    Expectations expects;

    bool has_ring() const { return lambda_ring.has_value() || novikov_ring.has_value(); }
};

}  // namespace qhsd
