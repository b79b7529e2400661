#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permspec/restriction.hpp"

namespace permspec {

/// One permutation per line; '#' starts a comment; blank lines are skipped.
std::vector<Permutation> read_permutation_list(std::istream &in);
std::vector<Permutation> read_permutation_file(const std::string &path);

nlohmann::json to_json(const Restriction &r);
Restriction restriction_from_json(const nlohmann::json &j);

/// Schema: {"closure_simples": [[...]], "equations": [{"lhs": {...}, "key": ...,
/// "has_one": bool, "disjoint": bool, "terms": [{"root": "plus"|"minus"|[...],
/// "children": [key, ...]}]}]}. Object keys come out sorted.
nlohmann::json to_json(const EquationSystem &sys);
EquationSystem system_from_json(const nlohmann::json &j);

/// Pretty-printed, newline-terminated; identical systems give identical bytes.
std::string dump(const EquationSystem &sys);
EquationSystem read_system_file(const std::string &path);

} // namespace permspec
