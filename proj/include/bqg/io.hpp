#pragma once

#include <bqg/chain_complex.hpp>
#include <bqg/group.hpp>

#include <json.hpp>

#include <string>

namespace bqg {

using Json = nlohmann::ordered_json;

/// Accepts {"order", "table"[, "names"]}, {"degree", "permutations"} or
/// {"catalog", "params"}.
FiniteGroup group_from_json(const Json& j);
/// "catalog:<name>[:<param>...]" or "@<path to json file>".
FiniteGroup group_from_spec(const std::string& spec);
/// {"order", "names", "table"}; readable back by group_from_json.
Json group_to_json(const FiniteGroup& g);

Json to_json(const FgAbelianGroup& a);
Json to_json(const std::vector<FgAbelianGroup>& groups);
Json to_json(const Integer& n);

}  // namespace bqg
