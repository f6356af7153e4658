#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"
#include "rostkit/gradedring.hpp"
#include "rostkit/motives.hpp"
#include "rostkit/schubert.hpp"
#include "rostkit/series.hpp"

namespace rostkit::json_io {

// nlohmann::json keeps object keys in a std::map, so every dump is sorted.
using Json = nlohmann::json;

/// Integers that fit in int64 become JSON numbers, larger ones strings.
Json big(const mpz_class& x);
mpz_class big_from(const Json& j);

/// [c0, c1, ..., cn]; the array length fixes the truncation order.
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from(const Json& j);

Json to_json(const KernelReport& r);
KernelReport kernel_report_from(const Json& j);

Json to_json(const DecompositionReport& r);
DecompositionReport decomposition_from(const Json& j);

Json to_json(const F7Report& r);
F7Report f7_from(const Json& j);

Json to_json(const CanonicalDimension& c);
CanonicalDimension canonical_dimension_from(const Json& j);

/// The profile fields that do not depend on a root datum (type, rank and
/// isogeny go as the selector plus their labels).
Json to_json(const JProfile& jp);
JProfile jprofile_from(const Json& j);

Json to_json(const GradedComponent& c);
GradedComponent component_from(const Json& j);

Json to_json(const FreeModuleReport& r);
FreeModuleReport free_module_from(const Json& j);

Json to_json(const PresetCheck& c);

}  // namespace rostkit::json_io
