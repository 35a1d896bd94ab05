#pragma once

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "noetherlab/groups.hpp"
#include "noetherlab/monomial.hpp"

namespace nlab {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

/// Group input file: {"degree": d, "generators": [[[cycle], [cycle]], ...]}.
inline PermGroup group_from_json(const Json& j, long order_cap = 2000) {
  try {
    int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& gen : j.at("generators")) {
      std::vector<std::vector<int>> cycles;
      for (const auto& cyc : gen) cycles.push_back(cyc.get<std::vector<int>>());
      gens.push_back(Perm::from_cycles(degree, cycles));
    }
    if (gens.empty()) gens.push_back(Perm(degree));
    return PermGroup(degree, gens, order_cap);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad group file: ") + e.what());
  }
}

/// Accepts either a literal like "Z2xZ4" (abelian, realized on disjoint
/// cycles) or a path to a group JSON file.
inline PermGroup load_group(const std::string& spec, long order_cap = 2000) {
  if (std::filesystem::exists(spec)) return group_from_json(read_json_file(spec), order_cap);
  auto A = parse_group_literal(spec);  // throws input_error when not a literal
  return abelian_perm_group(A->invariant_factors());
}

/// Representation spec file:
///   {"group": {"A": [factors], "n": n,
///              "dual_action_unit": u  |  "dual_action_map": [[coords], ...]},
///    "scalar_modulus": M,
///    "variables": [{"weight": [coords], "g_image": i, "scalar_exp": e}, ...]}
inline MonomialRep rep_from_json(const Json& j) {
  try {
    const auto& jg = j.at("group");
    auto A = make_group(jg.at("A").get<std::vector<long>>());
    long n = jg.at("n").get<long>();
    std::vector<long> dual;
    if (jg.contains("dual_action_unit")) {
      long u = jg.at("dual_action_unit").get<long>();
      dual.resize(static_cast<size_t>(A->order()));
      for (long i = 0; i < A->order(); ++i) dual[i] = A->unit_action(u, i);
    } else {
      for (const auto& img : jg.at("dual_action_map"))
        dual.push_back(A->index_of(img.get<std::vector<long>>()));
      if (static_cast<long>(dual.size()) != A->order())
        throw input_error("rep file: dual_action_map has wrong length");
    }
    long M = j.value("scalar_modulus", 1L);
    std::vector<RepVariable> vars;
    for (const auto& jv : j.at("variables")) {
      RepVariable v;
      v.weight = A->index_of(jv.at("weight").get<std::vector<long>>());
      v.g_image = jv.at("g_image").get<int>();
      v.scalar_exp = jv.value("scalar_exp", 0L);
      vars.push_back(v);
    }
    return MonomialRep(A, n, dual, vars, M);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad rep file: ") + e.what());
  }
}

inline MonomialRep load_rep(const std::string& path) {
  return rep_from_json(read_json_file(path));
}

inline Json sequence_to_json(const Sequence& s) {
  Json out = Json::array();
  for (auto& [e, m] : s.entries()) {
    Json entry;
    entry["element"] = s.parent()->coords_of(e);
    entry["multiplicity"] = m;
    out.push_back(entry);
  }
  return out;
}

}  // namespace nlab
