#pragma once

#include <string>

#include "json.hpp"
#include "qhsd/manifold.hpp"
#include "qhsd/subcrit.hpp"

namespace qhsd {

using Json = nlohmann::json;  // sorted keys = canonical order

// Coefficients: LaurentPoly as [[exp, coeff], ...], NovikovElem as
// [[qExp, tNum, tDen, coeff], ...], both in canonical term order.  Integer
// coefficients ride as JSON numbers while they fit, decimal strings beyond.
Json to_json(const LaurentPoly& p);
Json to_json(const NovikovElem& x);
LaurentPoly laurent_from_json(const Json& j, const std::string& where);
NovikovElem novikov_from_json(const Json& j, const std::string& where);

Json to_json(const LambdaRing& ring);
Json to_json(const NovikovRing& ring);

Json to_json(const SmallDualProfile& p);
Json to_json(const BettiTable& t);
Json to_json(const CurveClassData& c);
Json to_json(const AffineChartModel& m);
Json to_json(const ManifoldFile& m);
Json to_json(const SeidelEnumeration& e);
Json to_json(const CriticalPointRecord& r);
Json to_json(const SubcritRun& run, const AffineChartModel& model);

ManifoldFile manifold_from_json(const Json& j);
ManifoldFile load_manifold(const std::string& path);
void save_manifold(const ManifoldFile& m, const std::string& path);

// Ring-presentation files: load runs check_ring_axioms and aborts with the
// violation list; save/load round-trips to an identical canonical form.
// The manifold loader applies the same validation to ring sections.
ManifoldFile load_presentation(const std::string& path);
void save_presentation(const ManifoldFile& m, const std::string& path);

std::string canonical_dump(const Json& j);

}  // namespace qhsd
