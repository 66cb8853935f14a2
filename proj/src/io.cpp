#include "dmt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dmt {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

Vertex vertex_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 0xffffffffLL)
    bad("vertex ids must be non-negative integers, got " + j.dump());
  return static_cast<Vertex>(j.get<std::int64_t>());
}

Vertex vertex_from_key(const std::string& key) {
  if (key.empty() || key.size() > 10 || key.find_first_not_of("0123456789") != std::string::npos)
    bad("vertex key \"" + key + "\" is not a non-negative integer");
  auto v = std::stoull(key);
  if (v > 0xffffffffULL) bad("vertex key out of range");
  return static_cast<Vertex>(v);
}

}  // namespace

Json to_json(const Simplex& s) {
  Json a = Json::array();
  for (Vertex v : s.vertices()) a.push_back(v);
  return a;
}

Simplex simplex_from_json(const Json& j) {
  if (!j.is_array()) bad("a simplex is an array of vertex ids, got " + j.dump());
  std::vector<Vertex> vs;
  for (const auto& x : j) vs.push_back(vertex_from_json(x));
  try {
    return Simplex(std::move(vs));
  } catch (const DomainError& e) {
    bad(std::string(e.what()) + ": " + j.dump());
  }
}

Json to_json(const SimplicialComplex& k) {
  Json j;
  Json vs = Json::array();
  if (!k.labels().empty())
    for (const auto& l : k.labels()) vs.push_back(l);
  else
    for (Vertex v : k.vertices()) vs.push_back(v);
  j["vertices"] = vs;
  Json ms = Json::array();
  for (const auto& m : k.maximal_simplices()) ms.push_back(to_json(m));
  j["maximal_simplices"] = ms;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object()) bad("complex must be a JSON object");
  if (!j.contains("maximal_simplices")) bad("complex needs \"maximal_simplices\"");
  const auto& ms = j.at("maximal_simplices");
  if (!ms.is_array()) bad("\"maximal_simplices\" must be an array");
  std::vector<Simplex> gens;
  for (const auto& s : ms) gens.push_back(simplex_from_json(s));
  std::vector<Vertex> extra;
  std::vector<std::string> labels;
  if (j.contains("vertices")) {
    const auto& vs = j.at("vertices");
    if (!vs.is_array()) bad("\"vertices\" must be an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].is_string()) {
        labels.push_back(vs[i].get<std::string>());
        extra.push_back(static_cast<Vertex>(i));
      } else {
        extra.push_back(vertex_from_json(vs[i]));
      }
    }
    if (!labels.empty() && labels.size() != vs.size()) bad("\"vertices\" mixes labels and ids");
  }
  auto k = SimplicialComplex::from_maximal(gens, extra);
  if (!labels.empty()) {
    try {
      k.set_labels(std::move(labels));
    } catch (const DomainError& e) {
      bad(e.what());
    }
  }
  return k;
}

Json to_json(const DiscreteVectorField& v) {
  Json ps = Json::array();
  for (const auto& [a, b] : v.pairs()) ps.push_back(Json::array({to_json(a), to_json(b)}));
  return Json{{"pairs", ps}};
}

std::vector<SimplexPair> pairs_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_array())
    bad("vector field must be an object with a \"pairs\" array");
  std::vector<SimplexPair> r;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) bad("each pair is [alpha, beta], got " + p.dump());
    r.emplace_back(simplex_from_json(p[0]), simplex_from_json(p[1]));
  }
  return r;
}

Json vertex_map_to_json(const std::map<Vertex, Vertex>& m) {
  Json o = Json::object();
  for (const auto& [v, w] : m) o[std::to_string(v)] = w;
  return o;
}

std::map<Vertex, Vertex> vertex_map_from_json(const Json& j) {
  if (!j.is_object()) bad("vertex map must be an object");
  std::map<Vertex, Vertex> m;
  for (const auto& [key, val] : j.items()) m[vertex_from_key(key)] = vertex_from_json(val);
  return m;
}

Json to_json(const SimplicialMap& f) { return Json{{"vertex_map", vertex_map_to_json(f.vertex_map())}}; }

Json to_json(const GroupAction& a) {
  return Json{{"p", a.order()}, {"generator", vertex_map_to_json(a.generator())}};
}

ActionSpec action_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("generator")) bad("action needs \"p\" and \"generator\"");
  if (!j.at("p").is_number_integer() || j.at("p").get<std::int64_t>() < 0) bad("\"p\" must be a positive integer");
  return {j.at("p").get<unsigned>(), vertex_map_from_json(j.at("generator"))};
}

Json to_json(const SimplicialComplex& k, const Chain& c) {
  Json o = Json::object();
  for (const auto& t : c.terms()) o[to_string(k.simplex(c.dim(), t.index))] = t.coeff;
  return o;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col), line, col);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return parse_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line, e.column);
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

std::string dump_canonical(const Json& j) {
  if (!j.is_object() || j.empty()) return j.dump() + "\n";
  std::string r = "{\n";
  std::size_t i = 0;
  for (const auto& [k, v] : j.items()) {
    r += "  " + Json(k).dump() + ": " + v.dump();
    r += (++i < j.size()) ? ",\n" : "\n";
  }
  return r + "}\n";
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dmt
