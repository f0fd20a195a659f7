#include "cyqw/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cyqw {

Json parse_json_text(const std::string& text, const std::string& origin) {
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
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                     e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::string as_string(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(where + ": expected a string");
}

int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

Rational as_rational(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational string \"p/q\"");
}

Quiver quiver_from_json(const Json& doc) {
  const Json& vs = require(doc, "vertices", "document");
  if (!vs.is_array()) throw InputError("vertices: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], "vertices[" + std::to_string(i) + "]"));
  std::unordered_map<std::string, int> vidx;
  for (std::size_t i = 0; i < vertices.size(); ++i) vidx.emplace(vertices[i], static_cast<int>(i));
  const Json& as = require(doc, "arrows", "document");
  if (!as.is_array()) throw InputError("arrows: expected an array");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string where = "arrows[" + std::to_string(i) + "]";
    Arrow a;
    a.name = as_string(require(as[i], "name", where), where + ".name");
    auto vertex = [&](const char* key) {
      std::string id = as_string(require(as[i], key, where), where + "." + key);
      auto it = vidx.find(id);
      if (it == vidx.end()) throw InputError(where + "." + key + ": unknown vertex '" + id + "'");
      return it->second;
    };
    a.source = vertex("source");
    a.target = vertex("target");
    auto dit = as[i].find("degree");
    a.degree = dit == as[i].end() ? 0 : as_int(*dit, where + ".degree");
    if (a.degree < 0) throw InputError(where + ".degree: must be non-negative");
    arrows.push_back(a);
  }
  try {
    return Quiver(std::move(vertices), std::move(arrows));
  } catch (const InputError& e) {
    throw InputError(std::string("quiver: ") + e.what());
  }
}

Json quiver_to_json(const Quiver& q) {
  Json doc;
  doc["vertices"] = Json::array();
  for (const auto& v : q.vertices()) doc["vertices"].push_back(v);
  doc["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    doc["arrows"].push_back(
        Json{{"name", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}, {"degree", a.degree}});
  return doc;
}

Json path_to_json(const Quiver& q, const Path& p) {
  Json names = Json::array();
  for (int a : p.arrows) names.push_back(q.arrow(a).name);
  return names;
}

PathElement element_from_json(const Quiver& q, const Json& terms, const std::string& where) {
  if (!terms.is_array()) throw InputError(where + ": expected an array of terms");
  PathElement x;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string w = where + "[" + std::to_string(t) + "]";
    Rational c = as_rational(require(terms[t], "coef", w), w + ".coef");
    const Json& path = require(terms[t], "path", w);
    if (!path.is_array()) throw InputError(w + ".path: expected an array of arrow names");
    Path p;
    if (path.empty()) {
      auto vit = terms[t].find("vertex");
      if (vit == terms[t].end()) throw InputError(w + ".path: empty path needs a 'vertex' field");
      std::string id = as_string(*vit, w + ".vertex");
      auto v = q.find_vertex(id);
      if (!v) throw InputError(w + ".vertex: unknown vertex '" + id + "'");
      p = Path::trivial(*v);
    } else {
      std::vector<int> arrows;
      for (std::size_t k = 0; k < path.size(); ++k) {
        std::string name = as_string(path[k], w + ".path[" + std::to_string(k) + "]");
        auto a = q.find_arrow(name);
        if (!a) throw InputError(w + ".path[" + std::to_string(k) + "]: unknown arrow '" + name + "'");
        arrows.push_back(*a);
      }
      try {
        p = Path::from_arrows(q, arrows);
      } catch (const InputError& e) {
        throw InputError(w + ".path: " + e.what());
      }
    }
    x.add(p, c);
  }
  return x;
}

Json element_to_json(const Quiver& q, const PathElement& x) {
  Json terms = Json::array();
  for (const auto& [p, c] : x.terms()) {
    Json t{{"coef", c.get_str()}, {"path", path_to_json(q, p)}};
    if (p.is_trivial()) t["vertex"] = q.vertex_name(p.source);
    terms.push_back(std::move(t));
  }
  return terms;
}

PresentedGradedAlgebra algebra_from_json(const Json& doc) {
  Quiver q = quiver_from_json(doc);
  std::vector<PathElement> rels;
  auto it = doc.find("relations");
  if (it != doc.end()) {
    if (!it->is_array()) throw InputError("relations: expected an array");
    for (std::size_t r = 0; r < it->size(); ++r)
      rels.push_back(element_from_json(q, (*it)[r], "relations[" + std::to_string(r) + "]"));
  }
  try {
    return PresentedGradedAlgebra(std::move(q), std::move(rels));
  } catch (const InputError& e) {
    throw InputError(std::string("relations: ") + e.what());
  }
}

Json algebra_to_json(const PresentedGradedAlgebra& alg) {
  Json doc = quiver_to_json(alg.quiver());
  doc["relations"] = Json::array();
  for (const auto& r : alg.relations()) doc["relations"].push_back(element_to_json(alg.quiver(), r));
  return doc;
}

QuiverWithPotential qp_from_json(const Json& doc) {
  QuiverWithPotential qp;
  qp.quiver = quiver_from_json(doc);
  const Quiver& q = qp.quiver;
  std::vector<std::pair<Rational, std::vector<int>>> terms;
  const Json& pot = require(doc, "potential", "document");
  if (!pot.is_array()) throw InputError("potential: expected an array");
  for (std::size_t t = 0; t < pot.size(); ++t) {
    std::string w = "potential[" + std::to_string(t) + "]";
    Rational c = as_rational(require(pot[t], "coef", w), w + ".coef");
    const Json& cyc = require(pot[t], "cycle", w);
    if (!cyc.is_array() || cyc.empty()) throw InputError(w + ".cycle: expected a nonempty array of arrow names");
    std::vector<int> arrows;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::string name = as_string(cyc[k], w + ".cycle[" + std::to_string(k) + "]");
      auto a = q.find_arrow(name);
      if (!a) throw InputError(w + ".cycle[" + std::to_string(k) + "]: unknown arrow '" + name + "'");
      arrows.push_back(*a);
    }
    terms.emplace_back(c, std::move(arrows));
  }
  try {
    qp.potential = Potential(q, terms);
  } catch (const InputError& e) {
    throw InputError(std::string("potential: ") + e.what());
  }
  auto it = doc.find("cut");
  if (it != doc.end()) {
    if (!it->is_array()) throw InputError("cut: expected an array of arrow names");
    std::vector<std::string> names;
    for (std::size_t k = 0; k < it->size(); ++k) names.push_back(as_string((*it)[k], "cut[" + std::to_string(k) + "]"));
    qp.cut = arrow_set_from_names(q, names);
  }
  return qp;
}

Json qp_to_json(const QuiverWithPotential& qp) {
  Json doc = quiver_to_json(qp.quiver);
  doc["potential"] = Json::array();
  for (const auto& t : qp.potential.terms()) {
    Json cyc = Json::array();
    for (int a : t.cycle) cyc.push_back(qp.quiver.arrow(a).name);
    doc["potential"].push_back(Json{{"coef", t.coef.get_str()}, {"cycle", cyc}});
  }
  if (qp.cut) {
    doc["cut"] = Json::array();
    for (int a : *qp.cut) doc["cut"].push_back(qp.quiver.arrow(a).name);
  }
  return doc;
}

std::set<int> arrow_set_from_names(const Quiver& q, const std::vector<std::string>& names) {
  std::set<int> out;
  for (const auto& n : names) {
    auto a = q.find_arrow(n);
    if (!a) throw InputError("unknown arrow '" + n + "'");
    out.insert(*a);
  }
  return out;
}

std::set<int> vertex_set_from_ids(const Quiver& q, const std::vector<std::string>& ids) {
  std::set<int> out;
  for (const auto& n : ids) {
    auto v = q.find_vertex(n);
    if (!v) throw InputError("unknown vertex '" + n + "'");
    out.insert(*v);
  }
  return out;
}

}  // namespace cyqw
