#pragma once

#include "json.hpp"

#include "hflow/classify.hpp"
#include "hflow/exact.hpp"
#include "hflow/mellin.hpp"
#include "hflow/poles.hpp"
#include "hflow/semigroup.hpp"
#include "hflow/series.hpp"

namespace hflow {

using Json = nlohmann::json;

/// {"order": N, "coeffs": [[re, im], ...]}
Json to_json(const TruncatedTaylorSeries& f);
Json to_json(const LaurentTailSeries& f);
/// Throws DegenerateInput on a malformed document.
TruncatedTaylorSeries taylor_series_from_json(const Json& j);

Json to_json(const Complex& z);
/// Exact parts as "p/q" strings.
Json to_json(const ExactScalar& s);
Json to_json(const RadiusEstimate& r);
Json to_json(const Certificate& c);
/// {"verdict": ..., "reason": ..., "certificate": {...}}
Json to_json(const GenerationVerdict& v);
/// {"poles": [{"re", "im", "residual"}], "all_real": bool, "tolerance": x}
Json to_json(const PoleReport& r);
Json to_json(const RationalForm& r);
Json to_json(const AsymptoticHalfplane& w);
Json to_json(const ContinuityProbe& p);

}  // namespace hflow
