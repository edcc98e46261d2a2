#pragma once

#include <json.hpp>

#include "pratio/bounds.hpp"
#include "pratio/certifier.hpp"
#include "pratio/enumerate.hpp"
#include "pratio/kite.hpp"
#include "pratio/spectral.hpp"

// Fixed field order throughout; doubles print as the shortest
// round-tripping decimal (at most 17 significant digits). Non-finite
// values become null.

namespace pratio {

using Json = nlohmann::ordered_json;

Json to_json(const KiteSpec& spec);
/// include_vector=false drops x and log_x (large graphs).
Json to_json(const PerronData& pd, bool include_vector = true);
Json to_json(const BoundReport& rep);
Json to_json(const LemmaCheckOutcome& outcome);
Json to_json(const KiteSolution& sol);
Json to_json(const VerificationReport& rep, bool include_wall_time = true);
/// {target, n, verdict, margin_lo, margin_hi}
Json to_json(const Certificate& cert);

}  // namespace pratio
