#include "cyqw/pathalg.hpp"

#include <sstream>

namespace cyqw {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
      throw InputError("duplicate vertex id '" + vertices_[i] + "'");
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.name.empty()) throw InputError("arrow with empty name");
    if (!arrow_index_.emplace(a.name, static_cast<int>(i)).second)
      throw InputError("duplicate arrow name '" + a.name + "'");
    if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices())
      throw InputError("arrow '" + a.name + "' has an endpoint outside the vertex list");
    if (a.degree < 0) throw InputError("arrow '" + a.name + "' has negative degree");
  }
}

std::optional<int> Quiver::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int Quiver::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw InputError("unknown vertex '" + std::string(id) + "'");
  return *v;
}

int Quiver::arrow_index(std::string_view name) const {
  auto a = find_arrow(name);
  if (!a) throw InputError("unknown arrow '" + std::string(name) + "'");
  return *a;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

Path Path::of_arrow(const Quiver& q, int a) { return Path{q.arrow(a).source, q.arrow(a).target, {a}}; }

Path Path::from_arrows(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw InputError("empty arrow sequence has no endpoints");
  Path p{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, arrows};
  for (std::size_t m = 0; m + 1 < arrows.size(); ++m)
    if (q.arrow(arrows[m]).target != q.arrow(arrows[m + 1]).source)
      throw InputError("arrows '" + q.arrow(arrows[m]).name + "' and '" + q.arrow(arrows[m + 1]).name +
                       "' are not composable");
  return p;
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = arrows.size() <=> o.arrows.size(); c != 0) return c;
  if (auto c = arrows <=> o.arrows; c != 0) return c;
  if (auto c = source <=> o.source; c != 0) return c;
  return target <=> o.target;
}

int degree(const Quiver& q, const Path& p) {
  int d = 0;
  for (int a : p.arrows) d += q.arrow(a).degree;
  return d;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.source != q.target) return std::nullopt;
  return concat(q, p);
}

Path concat(const Path& first, const Path& second) {
  Path r{first.source, second.target, first.arrows};
  r.arrows.insert(r.arrows.end(), second.arrows.begin(), second.arrows.end());
  return r;
}

bool is_valid_path(const Quiver& q, const Path& p) {
  if (p.source < 0 || p.source >= q.num_vertices() || p.target < 0 || p.target >= q.num_vertices()) return false;
  if (p.arrows.empty()) return p.source == p.target;
  int at = p.source;
  for (int a : p.arrows) {
    if (a < 0 || a >= q.num_arrows() || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return at == p.target;
}

PathElement::PathElement(const Path& p, const Rational& c) { add(p, c); }

void PathElement::add(const Path& p, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational PathElement::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

PathElement& PathElement::operator+=(const PathElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

PathElement PathElement::operator+(const PathElement& o) const {
  PathElement r = *this;
  r += o;
  return r;
}

PathElement PathElement::operator-(const PathElement& o) const {
  PathElement r = *this;
  r -= o;
  return r;
}

PathElement PathElement::operator*(const Rational& s) const {
  PathElement r;
  if (sgn(s) == 0) return r;
  for (const auto& [p, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), p, c * s);
  return r;
}

PathElement multiply(const PathElement& x, const PathElement& y) {
  PathElement r;
  for (const auto& [p, c] : x.terms())
    for (const auto& [q, d] : y.terms())
      if (auto pq = compose(p, q)) r.add(*pq, c * d);
  return r;
}

PathElement sandwich(const Path& before, const PathElement& x, const Path& after) {
  PathElement r;
  for (const auto& [p, c] : x.terms()) {
    if (p.source != before.target || p.target != after.source) continue;
    r.add(concat(concat(before, p), after), c);
  }
  return r;
}

PresentedGradedAlgebra::PresentedGradedAlgebra(Quiver quiver, std::vector<PathElement> relations)
    : quiver_(std::move(quiver)) {
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const PathElement& rel = relations[r];
    if (rel.is_zero()) continue;
    const Path& first = rel.terms().begin()->first;
    int deg = degree(quiver_, first);
    for (const auto& [p, c] : rel.terms()) {
      if (!is_valid_path(quiver_, p)) throw InputError("relation " + std::to_string(r) + " contains an invalid path");
      if (p.is_trivial()) throw InputError("relation " + std::to_string(r) + " contains a trivial path");
      if (p.source != first.source || p.target != first.target)
        throw InputError("relation " + std::to_string(r) + " is not endpoint-homogeneous");
      if (degree(quiver_, p) != deg) throw InputError("relation " + std::to_string(r) + " is not degree-homogeneous");
    }
    relations_.push_back(rel);
  }
}

static Path reversed(const Quiver& q, const Path& p) {
  Path r{p.target, p.source, std::vector<int>(p.arrows.rbegin(), p.arrows.rend())};
  (void)q;
  return r;
}

PresentedGradedAlgebra opposite(const PresentedGradedAlgebra& alg) {
  const Quiver& q = alg.quiver();
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) arrows.push_back(Arrow{a.name, a.target, a.source, a.degree});
  Quiver op(q.vertices(), std::move(arrows));
  std::vector<PathElement> rels;
  for (const PathElement& r : alg.relations()) {
    PathElement x;
    for (const auto& [p, c] : r.terms()) x.add(reversed(q, p), c);
    rels.push_back(std::move(x));
  }
  return PresentedGradedAlgebra(std::move(op), std::move(rels));
}

namespace {

PresentedGradedAlgebra restrict(const PresentedGradedAlgebra& alg, const std::vector<bool>& keep_vertex,
                                const std::vector<bool>& keep_arrow, bool drop_mixed) {
  const Quiver& q = alg.quiver();
  std::vector<int> vmap(q.num_vertices(), -1), amap(q.num_arrows(), -1);
  std::vector<std::string> vertices;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (keep_vertex[v]) {
      vmap[v] = static_cast<int>(vertices.size());
      vertices.push_back(q.vertex_name(v));
    }
  std::vector<Arrow> arrows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (keep_arrow[a] && keep_vertex[ar.source] && keep_vertex[ar.target]) {
      amap[a] = static_cast<int>(arrows.size());
      arrows.push_back(Arrow{ar.name, vmap[ar.source], vmap[ar.target], ar.degree});
    }
  }
  std::vector<PathElement> rels;
  for (const PathElement& r : alg.relations()) {
    PathElement x;
    bool mixed = false;
    for (const auto& [p, c] : r.terms()) {
      bool ok = vmap[p.source] >= 0;
      for (int a : p.arrows) ok = ok && amap[a] >= 0;
      if (!ok) {
        mixed = true;
        continue;
      }
      Path np{vmap[p.source], vmap[p.target], {}};
      for (int a : p.arrows) np.arrows.push_back(amap[a]);
      x.add(np, c);
    }
    if (mixed && drop_mixed) continue;
    if (!x.is_zero()) rels.push_back(std::move(x));
  }
  return PresentedGradedAlgebra(Quiver(std::move(vertices), std::move(arrows)), std::move(rels));
}

}  // namespace

PresentedGradedAlgebra quotient_by_vertices(const PresentedGradedAlgebra& alg, const std::set<int>& kill) {
  const Quiver& q = alg.quiver();
  if (kill.empty()) throw InputError("vertex set to kill is empty");
  std::vector<bool> keep(q.num_vertices(), true);
  for (int v : kill) {
    if (v < 0 || v >= q.num_vertices()) throw InputError("vertex to kill is not in the quiver");
    keep[v] = false;
  }
  if (static_cast<int>(kill.size()) == q.num_vertices()) throw InputError("cannot kill every vertex");
  return restrict(alg, keep, std::vector<bool>(q.num_arrows(), true), false);
}

PresentedGradedAlgebra quotient_by_vertices(const PresentedGradedAlgebra& alg, const std::vector<std::string>& kill) {
  std::set<int> idx;
  for (const auto& id : kill) idx.insert(alg.quiver().vertex_index(id));
  return quotient_by_vertices(alg, idx);
}

PresentedGradedAlgebra remove_arrows(const PresentedGradedAlgebra& alg, const std::set<int>& drop,
                                     bool drop_mixed_relations) {
  const Quiver& q = alg.quiver();
  std::vector<bool> keep(q.num_arrows(), true);
  for (int a : drop) keep.at(a) = false;
  return restrict(alg, std::vector<bool>(q.num_vertices(), true), keep, drop_mixed_relations);
}

PresentedGradedAlgebra with_degrees(const PresentedGradedAlgebra& alg, const std::vector<int>& degrees) {
  const Quiver& q = alg.quiver();
  std::vector<Arrow> arrows = q.arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) arrows[a].degree = degrees.at(a);
  return PresentedGradedAlgebra(Quiver(q.vertices(), std::move(arrows)), alg.relations());
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.source);
  std::string s;
  // Written right to left, last-applied arrow first.
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrow(*it).name;
  }
  return s;
}

std::string element_to_string(const Quiver& q, const PathElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [p, c] = *it;
    Rational a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (a != 1) os << a.get_str() << " ";
    os << path_to_string(q, p);
  }
  return os.str();
}

}  // namespace cyqw
