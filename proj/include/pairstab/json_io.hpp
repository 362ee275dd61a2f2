#pragma once

#include <json.hpp>

#include "pairstab/sigma.hpp"
#include "pairstab/stability.hpp"
#include "pairstab/twist.hpp"

namespace pairstab {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& p);
Json to_json(const SigmaAutomorphism& s);
Json to_json(const StabilityVerdict& v);
Json to_json(const TwistSpec& spec);

/// Reads the twist schema:
///   {"base": graph6, "alpha": [images], "dim": n,
///    "gamma": [[bits] x n], "L": [[[bits], ...] per vertex],
///    "omega": {"u,v": [[bits], ...] per arc}, "h0": [bits]}
/// Throws InvalidInput on any shape error; the spec is not validated here.
TwistSpec twist_from_json(const Json& j);

}  // namespace pairstab
