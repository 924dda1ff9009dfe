#pragma once

// JSON and CSV renderings of the library's results.  Every decimal value is
// accompanied by its exact rational endpoints.

#include <string>

#include "json.hpp"

#include "mgrowth/ball.hpp"
#include "mgrowth/certificate.hpp"
#include "mgrowth/roots.hpp"
#include "mgrowth/series.hpp"

namespace mgrowth {

using Json = nlohmann::json;

/// Decimal digits used when rendering intervals.
inline constexpr int kDefaultDigits = 15;

/// {"group", "generators", "radius", "spheres", "balls"}
Json to_json(const SphereCounts& counts);
SphereCounts sphere_counts_from_json(const Json& j);
/// "radius,sphere" header followed by one row per radius.
std::string to_csv(const SphereCounts& counts);

/// Coefficients lowest degree first; values outside int64 become strings.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"polynomial", "lower", "upper", "lower_decimal", "upper_decimal", "exact"}
Json to_json(const CertifiedInterval& interval, int digits = kDefaultDigits);
CertifiedInterval interval_from_json(const Json& j);

Json to_json(const TreeVertex& v);
Json to_json(const Certificate& certificate, int digits = kDefaultDigits);
Json to_json(const SeriesComparison& comparison);
Json to_json(const GrowthRate& rate, int digits = kDefaultDigits);

}  // namespace mgrowth
