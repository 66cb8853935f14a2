#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dmt/chain.hpp"
#include "dmt/chain_map.hpp"
#include "dmt/group_action.hpp"
#include "dmt/vector_field.hpp"

namespace dmt {

using Json = nlohmann::json;

Json to_json(const Simplex& s);
Simplex simplex_from_json(const Json& j);

Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const DiscreteVectorField& v);
std::vector<SimplexPair> pairs_from_json(const Json& j);

Json vertex_map_to_json(const std::map<Vertex, Vertex>& m);
std::map<Vertex, Vertex> vertex_map_from_json(const Json& j);
Json to_json(const SimplicialMap& f);

Json to_json(const GroupAction& a);
struct ActionSpec {
  unsigned p = 0;
  std::map<Vertex, Vertex> generator;
};
ActionSpec action_from_json(const Json& j);

Json to_json(const SimplicialComplex& k, const Chain& c);  // {"[0,1]": 1, ...}

// ParseError carries line and column
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// keys sorted, one top-level key per line
std::string dump_canonical(const Json& j);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace dmt
