#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "dimerpf/embedding.hpp"
#include "dimerpf/error.hpp"
#include "dimerpf/fullmd.hpp"
#include "dimerpf/poly.hpp"
#include "dimerpf/rational.hpp"
#include "dimerpf/reduce.hpp"

// JSON graphs, skeletons and polynomials. Weights are exact rational strings.
namespace dimerpf::io {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, where + " needs a '" + key + "' field");
  return j.at(key);
}

inline long to_id(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(ErrorKind::ParseError, where + " must be an integer vertex id");
  return j.get<long>();
}

// Rational strings, or plain integers for convenience. Floats are rejected.
inline Rational to_rational(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorKind::ParseError, where + " must be a rational string such as \"3/2\"");
}

inline Rational weight_or_one(const Json& j, const char* key, const std::string& where) {
  return j.contains(key) ? to_rational(j.at(key), where) : Rational(1);
}

inline Point to_point(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorKind::ParseError, "pos must be a pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

// {"vertices":[{"id","pos"?,"monomer"?}], "edges":[{"u","v","dimer"?}],
//  "rotation"?: {"id":[neighbour ids, counterclockwise]}, "outer_face"?: [[u,v] | [isolated], ...],
//  "nested"?: [[face refs sharing one bounded face], ...]}
inline PlanarGraph graph_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "graph must be a JSON object");
  const Json& vertices = detail::member(j, "vertices", "graph");
  const Json& edges = detail::member(j, "edges", "graph");
  if (!vertices.is_array() || !edges.is_array()) fail(ErrorKind::ParseError, "vertices and edges must be arrays");

  std::vector<VertexSpec> vs;
  bool all_pos = true;
  for (const auto& v : vertices) {
    VertexSpec s;
    s.id = detail::to_id(detail::member(v, "id", "vertex"), "vertex id");
    s.monomer = detail::weight_or_one(v, "monomer", "monomer weight");
    if (v.contains("pos")) s.pos = detail::to_point(v.at("pos"));
    else all_pos = false;
    vs.push_back(s);
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : edges) {
    EdgeSpec s;
    s.u = detail::to_id(detail::member(e, "u", "edge"), "edge endpoint");
    s.v = detail::to_id(detail::member(e, "v", "edge"), "edge endpoint");
    s.dimer = detail::weight_or_one(e, "dimer", "dimer weight");
    es.push_back(s);
  }

  if (!j.contains("rotation")) {
    if (!all_pos) fail(ErrorKind::ParseError, "every vertex needs a pos unless a rotation system is given");
    if (j.contains("outer_face") || j.contains("nested"))
      fail(ErrorKind::ParseError, "outer_face and nested require a rotation system");
    return PlanarGraph::from_coordinates(vs, es);
  }

  std::sort(vs.begin(), vs.end(), [](auto& a, auto& b) { return a.id < b.id; });
  Embedding emb;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0 && vs[i].id == vs[i - 1].id) fail(ErrorKind::InvalidGraph, "duplicate vertex id " + std::to_string(vs[i].id));
    emb.ids.push_back(vs[i].id);
    emb.monomer.push_back(vs[i].monomer);
    if (all_pos) emb.pos.push_back(vs[i].pos);
  }
  auto index = [&](long id) {
    auto it = std::lower_bound(emb.ids.begin(), emb.ids.end(), id);
    if (it == emb.ids.end() || *it != id) fail(ErrorKind::InvalidGraph, "unknown vertex id " + std::to_string(id));
    return static_cast<int>(it - emb.ids.begin());
  };
  for (const auto& s : es) emb.edges.push_back({index(s.u), index(s.v), s.dimer});

  const Json& rot = j.at("rotation");
  if (!rot.is_object()) fail(ErrorKind::ParseError, "rotation must map vertex ids to neighbour lists");
  emb.rotation.assign(emb.ids.size(), {});
  for (const auto& [key, list] : rot.items()) {
    long id = 0;
    try {
      std::size_t used = 0;
      id = std::stol(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "rotation key '" + key + "' is not a vertex id");
    }
    if (!list.is_array()) fail(ErrorKind::ParseError, "rotation entries must be arrays");
    for (const auto& u : list) emb.rotation[index(id)].push_back(index(detail::to_id(u, "rotation entry")));
  }

  auto face_ref = [&](const Json& f) {
    if (!f.is_array() || f.empty() || f.size() > 2) fail(ErrorKind::ParseError, "face reference must be [u,v] or [vertex]");
    FaceRef r;
    r.vertex = index(detail::to_id(f[0], "face reference"));
    if (f.size() == 2) r.to = index(detail::to_id(f[1], "face reference"));
    return r;
  };
  if (!emb.ids.empty() && !j.contains("outer_face"))
    fail(ErrorKind::ParseError, "a rotation system needs an outer_face");
  if (j.contains("outer_face")) {
    const Json& outer = j.at("outer_face");
    if (!outer.is_array()) fail(ErrorKind::ParseError, "outer_face must be an array of face references");
    for (const auto& f : outer) emb.unbounded.push_back(face_ref(f));
  }
  if (j.contains("nested")) {
    const Json& nested = j.at("nested");
    if (!nested.is_array()) fail(ErrorKind::ParseError, "nested must be an array of face-reference groups");
    for (const auto& group : nested) {
      if (!group.is_array()) fail(ErrorKind::ParseError, "nested groups must be arrays");
      std::vector<FaceRef> refs;
      for (const auto& f : group) refs.push_back(face_ref(f));
      emb.nested.push_back(refs);
    }
  }
  return PlanarGraph(std::move(emb));
}

inline Json face_ref_json(const PlanarGraph& g, const FaceRef& r) {
  if (r.is_vertex()) return Json::array({g.id(r.vertex)});
  return Json::array({g.id(r.vertex), g.id(r.to)});
}

// Always writes the rotation system, so augmented graphs round-trip.
inline Json graph_to_json(const PlanarGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Json vj;
    vj["id"] = g.id(v);
    if (g.has_positions()) vj["pos"] = Json::array({g.position(v).x, g.position(v).y});
    vj["monomer"] = to_string(g.monomer(v));
    out["vertices"].push_back(vj);
  }
  out["edges"] = Json::array();
  for (const auto& e : g.edges()) out["edges"].push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"dimer", to_string(e.dimer)}});
  Json rot = Json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Json list = Json::array();
    for (int u : g.rotation(v)) list.push_back(g.id(u));
    rot[std::to_string(g.id(v))] = list;
  }
  out["rotation"] = rot;
  Json outer = Json::array();
  for (const auto& r : g.embedding().unbounded) outer.push_back(face_ref_json(g, r));
  out["outer_face"] = outer;
  if (!g.embedding().nested.empty()) {
    Json nested = Json::array();
    for (const auto& group : g.embedding().nested) {
      Json gj = Json::array();
      for (const auto& r : group) gj.push_back(face_ref_json(g, r));
      nested.push_back(gj);
    }
    out["nested"] = nested;
  }
  return out;
}

// {"skeleton": graph, "removed": [{"u","v","dimer"?}]}
inline Skeleton skeleton_from_json(const Json& j) {
  Skeleton sk;
  sk.s = graph_from_json(detail::member(j, "skeleton", "skeleton file"));
  const Json& removed = detail::member(j, "removed", "skeleton file");
  if (!removed.is_array()) fail(ErrorKind::ParseError, "removed must be an array of edges");
  for (const auto& e : removed) {
    auto u = sk.s.index_of(detail::to_id(detail::member(e, "u", "removed edge"), "removed edge endpoint"));
    auto v = sk.s.index_of(detail::to_id(detail::member(e, "v", "removed edge"), "removed edge endpoint"));
    if (!u || !v) fail(ErrorKind::InvalidSkeleton, "removed edge names a missing vertex");
    sk.removed.push_back({*u, *v, detail::weight_or_one(e, "dimer", "dimer weight")});
  }
  return sk;
}

inline Json skeleton_to_json(const Skeleton& sk) {
  Json out;
  out["skeleton"] = graph_to_json(sk.s);
  out["removed"] = Json::array();
  for (const auto& e : sk.removed)
    out["removed"].push_back({{"u", sk.s.id(e.u)}, {"v", sk.s.id(e.v)}, {"dimer", to_string(e.dimer)}});
  return out;
}

// Univariate polynomial as {"exponent": "coefficient"}, highest exponent first.
inline Json polynomial_to_json(const SparsePoly& p, int var) {
  std::map<int, Rational, std::greater<>> by_exponent;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.powers())
      if (v != var) fail(ErrorKind::InvalidArgument, "polynomial is not univariate in " + default_var_name(var));
    by_exponent[m.twice_exponent(var)] += c;
  }
  Json out = Json::object();
  for (const auto& [twice, c] : by_exponent)
    if (sgn(c) != 0) out[format_half(twice)] = to_string(c);
  return out;
}

inline SparsePoly polynomial_from_json(const Json& j, int var) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "polynomial must be a JSON object");
  SparsePoly p;
  for (const auto& [key, value] : j.items()) {
    Rational e = parse_rational(key);
    Rational twice = e * 2;
    if (twice.get_den() != 1) fail(ErrorKind::ParseError, "exponent '" + key + "' is not a multiple of 1/2");
    p += SparsePoly::variable(var, detail::to_rational(value, "coefficient"), static_cast<int>(twice.get_num().get_si()));
  }
  return p;
}

inline Json augmentation_to_json(const PlanarGraph& augmented, const AugmentationRecord& r) {
  Json out;
  out["original_vertex_count"] = r.original_vertex_count;
  out["added_vertices"] = Json::array();
  for (const auto& v : r.vertices)
    out["added_vertices"].push_back({{"id", augmented.id(v.vertex)}, {"tag", std::string(to_string(v.tag))}});
  out["added_edges"] = Json::array();
  for (const auto& e : r.edges)
    out["added_edges"].push_back({{"u", augmented.id(e.u)},
                                  {"v", augmented.id(e.v)},
                                  {"dimer", to_string(e.weight)},
                                  {"tag", std::string(to_string(e.tag))}});
  if (r.pad) out["pad"] = augmented.id(*r.pad);
  return out;
}

inline Json error_json(std::string_view kind, const std::string& message) {
  Json out;
  out["error"] = {{"kind", std::string(kind)}, {"message", message}};
  return out;
}

}  // namespace dimerpf::io
