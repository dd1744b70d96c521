#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hzml/coeff.hpp"
#include "hzml/moments.hpp"
#include "hzml/theta_roots.hpp"

namespace hzml {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const ThetaSystem& ts);
Json to_json(const ZeroList& zl);
Json to_json(const ContinuousMoment& cm);
Json to_json(const CoefficientBreakdown& b);
Json to_json(const IdentityReport& r);
Json to_json(const MomentReport& r);

/// Wraps a payload as {"schema": "1", "kind": kind, ...payload}.
Json envelope(const std::string& kind, const Json& payload);

/// Pretty-prints with every float at 17 significant digits; NaN and inf become null.
void write_json(std::ostream& os, const Json& j);
std::string dump_json(const Json& j);

/// Header "index,gamma,bracket_width", '\n' endings.
void write_zeros_csv(std::ostream& os, const ZeroList& zl);
void write_roots_csv(std::ostream& os, const ThetaSystem& ts);
void write_identities_csv(std::ostream& os, const std::vector<IdentityReport>& rs);
/// Two columns "field,value" for a flat object.
void write_flat_csv(std::ostream& os, const Json& flat);

std::string format_double(double x);

}  // namespace hzml
