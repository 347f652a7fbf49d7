#include "gml/pair_io.hpp"

#include <fstream>
#include <set>

namespace gml {

namespace {

void only_fields(const nlohmann::json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) throw FormatError(std::string(where) + ": expected an object");
  for (auto& [k, v] : j.items()) {
    bool ok = false;
    for (auto* a : allowed) ok = ok || k == a;
    if (!ok) throw FormatError(std::string(where) + ": unknown field '" + k + "'");
  }
  for (auto* a : allowed)
    if (!j.contains(a)) throw FormatError(std::string(where) + ": missing field '" + a + "'");
}

std::string name_of(const nlohmann::json& j, const char* where) {
  if (!j.is_string()) throw FormatError(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

PartialPair pair_from_json(const nlohmann::json& j) {
  only_fields(j, {"atoms", "coding"}, "pair");
  if (!j["atoms"].is_array() || !j["coding"].is_array()) throw FormatError("pair: atoms and coding must be arrays");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (auto& a : j["atoms"]) {
    labels.push_back(name_of(a, "atoms"));
    if (!seen.insert(labels.back()).second) throw FormatError("pair: duplicate atom '" + labels.back() + "'");
  }
  PartialPair p(std::move(labels));
  auto atom = [&](const nlohmann::json& name) {
    auto s = name_of(name, "coding");
    auto a = p.find(s);
    if (!a) throw FormatError("pair: coding mentions '" + s + "', which is not in atoms");
    return *a;
  };
  for (auto& entry : j["coding"]) {
    only_fields(entry, {"args", "res", "value"}, "coding entry");
    if (!entry["args"].is_array()) throw FormatError("coding entry: args must be an array");
    std::vector<Atom> args;
    for (auto& a : entry["args"]) args.push_back(atom(a));
    AtomSet set = make_atom_set(args);
    if (set.size() != args.size()) throw FormatError("coding entry: duplicate member in args");
    CodingKey key{std::move(set), atom(entry["res"])};
    if (p.in_domain(key)) throw FormatError("pair: key coded twice");
    p.set_code(std::move(key), atom(entry["value"]));
  }
  return p;
}

nlohmann::json pair_to_json(const PartialPair& p) {
  nlohmann::json coding = nlohmann::json::array();
  for (auto& [key, value] : p.coding()) {
    nlohmann::json args = nlohmann::json::array();
    for (Atom a : key.args) args.push_back(p.label(a));
    coding.push_back({{"args", args}, {"res", p.label(key.res)}, {"value", p.label(value)}});
  }
  return {{"atoms", p.labels()}, {"coding", coding}};
}

std::map<std::string, std::vector<std::string>> env_from_json(const nlohmann::json& j) {
  only_fields(j, {"env"}, "environment");
  if (!j["env"].is_array()) throw FormatError("environment: env must be an array");
  std::map<std::string, std::vector<std::string>> out;
  for (auto& binding : j["env"]) {
    only_fields(binding, {"var", "atoms"}, "env binding");
    auto var = name_of(binding["var"], "env binding");
    if (out.count(var)) throw FormatError("environment: variable '" + var + "' bound twice");
    if (!binding["atoms"].is_array()) throw FormatError("env binding: atoms must be an array");
    auto& members = out[var];
    for (auto& a : binding["atoms"]) members.push_back(name_of(a, "env binding"));
  }
  return out;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace gml
