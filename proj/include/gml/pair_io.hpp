#pragma once

#include "gml/pair.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gml {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"atoms": ["a0", ...], "coding": [{"args": ["a0"], "res": "a0", "value": "a0"}, ...]}
/// `args` is a set (order-insensitive, duplicates rejected); unknown fields
/// are rejected; every name must be one of `atoms`.
PartialPair pair_from_json(const nlohmann::json& j);
nlohmann::json pair_to_json(const PartialPair& p);

/// {"env": [{"var": "x", "atoms": ["a0"]}]} -> var -> member names.
std::map<std::string, std::vector<std::string>> env_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace gml
