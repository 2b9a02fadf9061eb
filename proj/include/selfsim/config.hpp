#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "selfsim/instances/affine.hpp"
#include "selfsim/instances/borel.hpp"
#include "selfsim/instances/lamplighter.hpp"
#include "selfsim/instances/wreath.hpp"
#include "selfsim/validate.hpp"

namespace selfsim {

using AnyInstance = std::variant<LamplighterInstance, BorelInstance, AffineInstance, WreathInstance>;

/// Reads and parses a JSON file. Throws IoError or ParseError.
nlohmann::json read_json_file(const std::string &path);

/// Builds the instance described by a config object:
///   {"family": "lamplighter", "p": 2, "polys": [[0, 1]]}
///   {"family": "borel", "p": 2, "m": 3, "polys": [[0, 1], [1, 1, 1]]}
///   {"family": "affine", "p": 2, "n": 3}
///   {"family": "wreath", "p": 2, "d": 2, "localized": true, "g": [1, 1, 1]}
/// "polys" starts with f_0 = x. Malformed input throws ParseError, failed
/// hypotheses throw InvalidConfig.
AnyInstance make_instance(const nlohmann::json &cfg);

/// The hypothesis report for families with a polynomial list, null otherwise.
/// Throws ParseError on malformed input.
nlohmann::json validation_json(const nlohmann::json &cfg);

std::string family_name(const AnyInstance &inst);

} // namespace selfsim
