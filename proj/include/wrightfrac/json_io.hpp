#pragma once

#include "wrightfrac/series.hpp"
#include "wrightfrac/special_core.hpp"
#include "wrightfrac/transforms.hpp"
#include "wrightfrac/verify.hpp"

#include <json.hpp>

#include <string>

namespace wrightfrac {

using Json = nlohmann::json;

/// Non-finite doubles serialize as null.
Json number_or_null(double v);

/// {"var": ..., "terms": [[coeff, exponent], ...]}
Json to_json(const GenPowerSeries& s);
/// Inverse of to_json(GenPowerSeries); InvariantViolation on malformed input.
GenPowerSeries series_from_json(const Json& j);

Json to_json(const EvalResult& r);
Json to_json(const ResidualReport& r);
Json to_json(const EigenfactorReport& r);
Json to_json(const LaplaceCheckReport& r);

/// Canonical text form: sorted keys, two-space indent, shortest round-trip doubles.
std::string dump_canonical(const Json& j);

/// Shortest round-trip decimal for a double ('.' separator, locale independent).
std::string format_double(double v);

} // namespace wrightfrac
