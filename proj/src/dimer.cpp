#include "cyqw/dimer.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace cyqw {

int DimerGraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return static_cast<int>(i);
  throw InputError("unknown edge '" + id + "'");
}

DimerValidation validate_dimer(const DimerGraph& g) {
  DimerValidation rep;
  auto& v = rep.violations;
  std::set<std::string> whites(g.white.begin(), g.white.end()), blacks(g.black.begin(), g.black.end());
  if (whites.size() != g.white.size()) v.push_back("duplicate white vertex id");
  if (blacks.size() != g.black.size()) v.push_back("duplicate black vertex id");
  for (const auto& w : whites)
    if (blacks.count(w)) v.push_back("vertex '" + w + "' is both white and black");
  std::map<std::string, int> uses;
  for (const auto& e : g.edges) {
    if (uses.count(e.id)) v.push_back("duplicate edge id '" + e.id + "'");
    uses[e.id] = 0;
    bool ww = whites.count(e.white) > 0, bb = blacks.count(e.black) > 0;
    if (!ww || !bb) {
      bool white_white = whites.count(e.white) && whites.count(e.black);
      bool black_black = blacks.count(e.white) && blacks.count(e.black);
      if (white_white || black_black)
        v.push_back("edge '" + e.id + "' violates bipartiteness");
      else
        v.push_back("edge '" + e.id + "' has an unknown or miscoloured endpoint");
    }
  }
  for (const auto& f : g.faces) {
    if (f.edges.empty()) v.push_back("face '" + f.id + "' is empty");
    if (f.edges.size() % 2 != 0) v.push_back("face '" + f.id + "' has odd length");
    for (const auto& e : f.edges) {
      auto it = uses.find(e);
      if (it == uses.end())
        v.push_back("face '" + f.id + "' uses unknown edge '" + e + "'");
      else
        ++it->second;
    }
  }
  for (const auto& [e, n] : uses)
    if (n != 2) v.push_back("edge '" + e + "' occurs " + std::to_string(n) + " times in faces");
  long long chi = static_cast<long long>(g.white.size() + g.black.size()) - static_cast<long long>(g.edges.size()) +
                  static_cast<long long>(g.faces.size());
  if (chi != 0) v.push_back("Euler characteristic is " + std::to_string(chi) + ", expected 0");
  return rep;
}

DimerGraph dimer_from_json(const Json& doc) {
  DimerGraph g;
  auto ids = [&](const char* key) {
    const Json& arr = require(doc, key, "dimer");
    if (!arr.is_array()) throw InputError(std::string(key) + ": expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.push_back(as_string(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
  };
  g.white = ids("white");
  g.black = ids("black");
  const Json& es = require(doc, "edges", "dimer");
  if (!es.is_array()) throw InputError("edges: expected an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string where = "edges[" + std::to_string(i) + "]";
    g.edges.push_back(DimerEdge{as_string(require(es[i], "id", where), where + ".id"),
                                as_string(require(es[i], "white", where), where + ".white"),
                                as_string(require(es[i], "black", where), where + ".black")});
  }
  const Json& fs = require(doc, "faces", "dimer");
  if (!fs.is_array()) throw InputError("faces: expected an array");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::string where = "faces[" + std::to_string(i) + "]";
    DimerFace f;
    const Json* list = &fs[i];
    if (fs[i].is_object()) {
      f.id = as_string(require(fs[i], "id", where), where + ".id");
      list = &require(fs[i], "edges", where);
    } else {
      f.id = std::to_string(i + 1);
    }
    if (!list->is_array()) throw InputError(where + ": expected an edge list");
    for (std::size_t k = 0; k < list->size(); ++k)
      f.edges.push_back(as_string((*list)[k], where + "[" + std::to_string(k) + "]"));
    g.faces.push_back(std::move(f));
  }
  return g;
}

Json dimer_to_json(const DimerGraph& g) {
  Json doc;
  doc["white"] = g.white;
  doc["black"] = g.black;
  doc["edges"] = Json::array();
  for (const auto& e : g.edges) doc["edges"].push_back(Json{{"id", e.id}, {"white", e.white}, {"black", e.black}});
  doc["faces"] = Json::array();
  for (const auto& f : g.faces) doc["faces"].push_back(Json{{"id", f.id}, {"edges", f.edges}});
  return doc;
}

namespace {

// dir[f][k] = true if the boundary walk of face f traverses its k-th edge white to black.
std::vector<std::vector<bool>> orient_faces(const DimerGraph& g) {
  std::size_t nf = g.faces.size();
  std::vector<std::vector<int>> fe(nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (const auto& e : g.faces[f].edges) fe[f].push_back(g.edge_index(e));
  // forced[f]: direction of edge 0 if determined by a corner with a single shared vertex
  std::vector<std::optional<bool>> forced(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t len = fe[f].size();
    for (std::size_t k = 0; k < len; ++k) {
      const DimerEdge& a = g.edges[fe[f][k]];
      const DimerEdge& b = g.edges[fe[f][(k + 1) % len]];
      bool share_w = a.white == b.white, share_b = a.black == b.black;
      if (!share_w && !share_b)
        throw InputError("face '" + g.faces[f].id + "': consecutive edges '" + a.id + "' and '" + b.id +
                         "' share no vertex");
      if (share_w && share_b) continue;
      // shared black: edge k runs white to black
      bool k_wb = share_b;
      bool first = (k % 2 == 0) ? k_wb : !k_wb;
      if (forced[f] && *forced[f] != first)
        throw InputError("face '" + g.faces[f].id + "' is not an alternating closed walk");
      forced[f] = first;
    }
  }
  // occurrences of each edge: (face, position)
  std::vector<std::vector<std::pair<int, int>>> occ(g.edges.size());
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t k = 0; k < fe[f].size(); ++k) occ[fe[f][k]].emplace_back(static_cast<int>(f), static_cast<int>(k));
  // choice[f] = direction of edge 0; an edge's two occurrences must be traversed oppositely
  std::vector<std::optional<bool>> choice(nf);
  std::vector<std::size_t> order;
  for (std::size_t f = 0; f < nf; ++f)
    if (forced[f]) order.push_back(f);
  for (std::size_t f = 0; f < nf; ++f)
    if (!forced[f]) order.push_back(f);
  for (std::size_t start : order) {
    if (choice[start]) continue;
    choice[start] = forced[start].value_or(true);
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      std::size_t f = todo.front();
      todo.pop();
      for (std::size_t k = 0; k < fe[f].size(); ++k) {
        bool here = (k % 2 == 0) ? *choice[f] : !*choice[f];
        for (const auto& [of, ok] : occ[fe[f][k]]) {
          if (static_cast<std::size_t>(of) == f && static_cast<std::size_t>(ok) == k) continue;
          bool need = !here;
          bool first = (ok % 2 == 0) ? need : !need;
          if (forced[of] && *forced[of] != first)
            throw InputError("faces cannot be oriented consistently (edge '" + g.edges[fe[f][k]].id + "')");
          if (choice[of]) {
            if (*choice[of] != first)
              throw InputError("faces cannot be oriented consistently (edge '" + g.edges[fe[f][k]].id + "')");
            continue;
          }
          choice[of] = first;
          todo.push(of);
        }
      }
    }
  }
  std::vector<std::vector<bool>> dir(nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t k = 0; k < fe[f].size(); ++k) dir[f].push_back((k % 2 == 0) ? *choice[f] : !*choice[f]);
  return dir;
}

}  // namespace

QuiverWithPotential dual_qp(const DimerGraph& g, bool flip) {
  DimerValidation val = validate_dimer(g);
  if (!val.ok()) throw InputError("invalid dimer: " + val.violations.front());
  auto dir = orient_faces(g);
  std::size_t ne = g.edges.size();
  std::vector<int> into(ne, -1), outof(ne, -1);
  for (std::size_t f = 0; f < g.faces.size(); ++f)
    for (std::size_t k = 0; k < g.faces[f].edges.size(); ++k) {
      int e = g.edge_index(g.faces[f].edges[k]);
      (dir[f][k] ? into : outof)[e] = static_cast<int>(f);
    }
  std::vector<std::string> vertices;
  for (const auto& f : g.faces) vertices.push_back(f.id);
  std::vector<Arrow> arrows;
  for (std::size_t e = 0; e < ne; ++e) {
    Arrow a{g.edges[e].id, outof[e], into[e], 0};
    if (flip) std::swap(a.source, a.target);
    arrows.push_back(a);
  }
  Quiver q(vertices, arrows);
  // successor of each arrow within the cycle around its white / black endpoint
  std::vector<int> next_white(ne, -1), next_black(ne, -1);
  for (std::size_t f = 0; f < g.faces.size(); ++f) {
    std::size_t len = g.faces[f].edges.size();
    for (std::size_t k = 0; k < len; ++k) {
      int a = g.edge_index(g.faces[f].edges[k]);
      int b = g.edge_index(g.faces[f].edges[(k + 1) % len]);
      if (dir[f][k])
        next_black[a] = b;  // corner at a black vertex
      else
        next_white[b] = a;  // corner at a white vertex
    }
  }
  std::vector<std::pair<Rational, std::vector<int>>> terms;
  auto collect = [&](const std::vector<std::string>& vs, bool white, const std::vector<int>& next) {
    for (const auto& v : vs) {
      int start = -1;
      for (std::size_t e = 0; e < ne; ++e)
        if ((white ? g.edges[e].white : g.edges[e].black) == v) {
          start = static_cast<int>(e);
          break;
        }
      if (start < 0) throw InputError("dimer vertex '" + v + "' has no edges");
      std::vector<int> cyc;
      int cur = start;
      do {
        cyc.push_back(cur);
        cur = next[cur];
        if (cur < 0 || cyc.size() > ne) throw InputError("cannot trace the cycle around vertex '" + v + "'");
      } while (cur != start);
      std::size_t degree = 0;
      for (const auto& e : g.edges)
        if ((white ? e.white : e.black) == v) ++degree;
      if (cyc.size() != degree) throw InputError("edges around vertex '" + v + "' do not form one cycle");
      if (flip) std::reverse(cyc.begin(), cyc.end());
      Path::from_arrows(q, cyc);
      terms.emplace_back(white ? Rational(1) : Rational(-1), cyc);
    }
  };
  collect(g.white, true, next_white);
  collect(g.black, false, next_black);
  return QuiverWithPotential{q, Potential(q, terms), std::nullopt};
}

std::vector<Matching> perfect_matchings(const DimerGraph& g) {
  std::vector<Matching> out;
  if (g.white.size() != g.black.size()) return out;
  std::map<std::string, int> widx;
  for (std::size_t i = 0; i < g.white.size(); ++i) widx[g.white[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> at_black(g.black.size());
  for (std::size_t b = 0; b < g.black.size(); ++b)
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (g.edges[e].black == g.black[b] && widx.count(g.edges[e].white)) at_black[b].push_back(static_cast<int>(e));
  std::vector<bool> used(g.white.size(), false);
  Matching cur;
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == g.black.size()) {
      Matching m = cur;
      std::sort(m.begin(), m.end());
      out.push_back(m);
      return;
    }
    for (int e : at_black[b]) {
      int w = widx[g.edges[e].white];
      if (used[w]) continue;
      used[w] = true;
      cur.push_back(e);
      self(self, b + 1);
      cur.pop_back();
      used[w] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Cut matching_cut(const DimerGraph& g, const QuiverWithPotential& qp, const Matching& m) {
  Cut c;
  for (int e : m) c.insert(qp.quiver.arrow_index(g.edges[e].id));
  return c;
}

namespace {

struct ChargeSystem {
  std::vector<std::vector<int>> rows;  // coefficient per arrow
  std::vector<Rational> rhs;
};

ChargeSystem charge_system(const QuiverWithPotential& qp) {
  const Quiver& q = qp.quiver;
  std::size_t na = q.num_arrows();
  ChargeSystem s;
  for (const auto& t : qp.potential.terms()) {
    std::vector<int> row(na, 0);
    for (int a : t.cycle) ++row[a];
    s.rows.push_back(row);
    s.rhs.push_back(2);
  }
  // sum (1 - R(a)) over incident arrows = 2, i.e. sum R(a) = deg - 2
  for (int v = 0; v < q.num_vertices(); ++v) {
    std::vector<int> row(na, 0);
    int deg = 0;
    for (std::size_t a = 0; a < na; ++a) {
      if (q.arrow(a).source == v) ++row[a], ++deg;
      if (q.arrow(a).target == v) ++row[a], ++deg;
    }
    s.rows.push_back(row);
    s.rhs.push_back(deg - 2);
  }
  return s;
}

}  // namespace

bool verify_charge(const QuiverWithPotential& qp, const std::vector<Rational>& r) {
  if (r.size() != static_cast<std::size_t>(qp.quiver.num_arrows())) return false;
  for (const auto& x : r)
    if (sgn(x) <= 0) return false;
  ChargeSystem s = charge_system(qp);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    Rational sum = 0;
    for (std::size_t a = 0; a < r.size(); ++a) sum += s.rows[i][a] * r[a];
    if (sum != s.rhs[i]) return false;
  }
  return true;
}

ChargeResult consistency_charge(const QuiverWithPotential& qp) {
  // R(a) = s_a + eps with s, eps >= 0; eps <= 1 keeps the program bounded.
  ChargeSystem s = charge_system(qp);
  std::size_t na = qp.quiver.num_arrows();
  std::size_t nrow = s.rows.size() + 1;
  Matrix a(nrow, na + 2);
  std::vector<Rational> b(nrow), c(na + 2, 0);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    int total = 0;
    for (std::size_t j = 0; j < na; ++j) {
      a(i, j) = s.rows[i][j];
      total += s.rows[i][j];
    }
    a(i, na) = total;
    b[i] = s.rhs[i];
  }
  a(nrow - 1, na) = 1;
  a(nrow - 1, na + 1) = 1;
  b[nrow - 1] = 1;
  c[na] = 1;
  LpResult lp = maximize(a, b, c);
  ChargeResult res;
  if (lp.status != LpStatus::optimal || sgn(lp.value) <= 0) return res;
  res.feasible = true;
  for (std::size_t j = 0; j < na; ++j) res.charge.push_back(lp.x[j] + lp.x[na]);
  res.margin = *std::min_element(res.charge.begin(), res.charge.end());
  return res;
}

bool Theorem63Report::passes() const {
  if (!is_cut || degree_zero.answer != Finiteness::Answer::yes || hypotheses.a3.answer != Finiteness::Answer::yes) return false;
  bool via_b = hypotheses.a4_on_b == Tri::yes && source_on_b.value_or(true);
  bool via_op = hypotheses.a4_on_opposite == Tri::yes && source_on_opposite.value_or(true);
  return via_b || via_op;
}

Theorem63Report check_theorem_6_3(const DimerGraph& g, const std::vector<std::string>& cut_edges,
                                  const std::vector<std::string>& idem, int cap, bool flip) {
  QuiverWithPotential qp = dual_qp(g, flip);
  std::set<int> chosen;
  for (const auto& e : cut_edges) {
    if (!chosen.insert(g.edge_index(e)).second) throw InputError("edge '" + e + "' listed twice in the cut");
  }
  Matching m(chosen.begin(), chosen.end());
  auto all = perfect_matchings(g);
  if (!std::binary_search(all.begin(), all.end(), m)) throw InputError("the given edges are not a perfect matching");
  Cut d = matching_cut(g, qp, m);
  qp.cut = d;
  Theorem63Report rep;
  rep.is_cut = is_cut(qp.potential, d).ok;
  rep.degree_zero = is_finite_dimensional(truncated_algebra(qp.quiver, qp.potential, d), cap);
  std::set<int> e = vertex_set_from_ids(qp.quiver, idem);
  PresentedGradedAlgebra b = jacobian_algebra(qp.quiver, qp.potential, d);
  rep.hypotheses = check_main_hypotheses(b, e, cap);
  if (e.size() == 1) {
    int v = *e.begin();
    bool src = true, snk = true;
    for (int a = 0; a < qp.quiver.num_arrows(); ++a) {
      if (d.count(a)) continue;
      const Arrow& ar = qp.quiver.arrow(a);
      if (ar.target == v) src = false;
      if (ar.source == v) snk = false;
    }
    rep.source_on_b = src;
    rep.source_on_opposite = snk;
  }
  return rep;
}

}  // namespace cyqw
