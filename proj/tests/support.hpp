#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "cyqw/json_io.hpp"
#include "cyqw/pathalg.hpp"
#include "cyqw/qp.hpp"

namespace cyqw::test {

inline std::string data_path(const std::string& name) { return std::string(CYQW_DATA_DIR) + "/" + name; }

// Fixed seeds everywhere; every property uses its own stream.
inline std::mt19937_64 rng_for(unsigned long salt) { return std::mt19937_64(0x5eedULL * 1000003ULL + salt); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline Quiver random_quiver(std::mt19937_64& g, int max_vertices, int max_arrows, bool acyclic, int max_degree = 1) {
  int nv = uniform(g, 1, max_vertices);
  int na = uniform(g, 0, max_arrows);
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Arrow> as;
  for (int a = 0; a < na; ++a) {
    int s = uniform(g, 0, nv - 1), t = uniform(g, 0, nv - 1);
    if (acyclic) {
      if (nv == 1) break;
      if (s == t) t = (s + 1) % nv;
      if (s > t) std::swap(s, t);
    }
    as.push_back(Arrow{"a" + std::to_string(a), s, t, uniform(g, 0, max_degree)});
  }
  return Quiver(vs, as);
}

// Random path of at most max_len arrows, walking forward from a random vertex.
inline Path random_path(std::mt19937_64& g, const Quiver& q, int max_len) {
  int v = uniform(g, 0, q.num_vertices() - 1);
  Path p = Path::trivial(v);
  int len = uniform(g, 0, max_len);
  for (int k = 0; k < len; ++k) {
    auto out = q.arrows_from(p.target);
    if (out.empty()) break;
    int a = out[uniform(g, 0, static_cast<int>(out.size()) - 1)];
    p.arrows.push_back(a);
    p.target = q.arrow(a).target;
  }
  return p;
}

inline Rational random_coef(std::mt19937_64& g) {
  int num = uniform(g, -5, 5);
  if (num == 0) num = 1;
  Rational r(num, uniform(g, 1, 4));
  r.canonicalize();
  return r;
}

inline PathElement random_element(std::mt19937_64& g, const Quiver& q, int terms, int max_len) {
  PathElement x;
  for (int k = 0; k < terms; ++k) x.add(random_path(g, q, max_len), random_coef(g));
  return x;
}

// Endpoint- and degree-homogeneous combination of nontrivial paths; may be zero.
inline PathElement random_relation(std::mt19937_64& g, const Quiver& q, int tries, int max_len) {
  PathElement x;
  std::optional<Path> first;
  for (int t = 0; t < tries; ++t) {
    Path p = random_path(g, q, max_len);
    if (p.is_trivial()) continue;
    if (!first) first = p;
    if (p.source == first->source && p.target == first->target && degree(q, p) == degree(q, *first))
      x.add(p, random_coef(g));
  }
  return x;
}

// Independent oracle: all valid arrow sequences up to a length, enumerated by brute force.
inline std::vector<Path> all_paths(const Quiver& q, int max_len) {
  std::vector<Path> out;
  for (int v = 0; v < q.num_vertices(); ++v) out.push_back(Path::trivial(v));
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int a : q.arrows_from(out[k].target)) {
        Path p = out[k];
        p.arrows.push_back(a);
        p.target = q.arrow(a).target;
        out.push_back(p);
      }
    begin = end;
  }
  return out;
}

// Plain Gaussian elimination, kept separate from the library's linear algebra.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// dim of e_end (kQ/I)_len e_start for length-graded relations: paths minus the rank of
// the span of all u*r*v, computed directly in the path basis.
inline long oracle_length_dim(const PresentedGradedAlgebra& alg, int len, int end = -1, int start = -1) {
  const Quiver& q = alg.quiver();
  std::vector<Path> paths;
  for (const Path& p : all_paths(q, len))
    if (static_cast<int>(p.length()) == len && (end < 0 || p.target == end) && (start < 0 || p.source == start))
      paths.push_back(p);
  std::map<Path, std::size_t> col;
  for (std::size_t i = 0; i < paths.size(); ++i) col[paths[i]] = i;
  std::vector<std::vector<Rational>> rows;
  auto shorter = all_paths(q, len);
  for (const PathElement& r : alg.relations()) {
    int rl = static_cast<int>(r.leading().length());
    if (rl > len) continue;
    for (const Path& u : shorter)
      for (const Path& v : shorter) {
        if (static_cast<int>(u.length() + v.length()) + rl != len) continue;
        std::vector<Rational> row(paths.size());
        bool any = false;
        for (const auto& [p, c] : r.terms()) {
          if (u.source != p.target || v.target != p.source) break;
          Path w = concat(concat(v, p), u);
          auto it = col.find(w);
          if (it == col.end()) continue;
          row[it->second] += c;
          any = true;
        }
        if (any) rows.push_back(row);
      }
  }
  return static_cast<long>(paths.size()) - static_cast<long>(oracle_rank(rows));
}

// Bijections of vertices and arrows; a QP is encoded by quiver shape plus signed cycle words.
struct QpShape {
  int nv;
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::pair<int, std::vector<int>>> terms;  // sign, cycle
};

inline QpShape shape_of(const QuiverWithPotential& qp) {
  QpShape s{qp.quiver.num_vertices(), {}, {}};
  for (const auto& a : qp.quiver.arrows()) s.arrows.emplace_back(a.source, a.target);
  for (const auto& t : qp.potential.terms()) s.terms.emplace_back(sgn(t.coef), t.cycle);
  return s;
}

inline QpShape flipped(const QpShape& s) {
  QpShape f = s;
  for (auto& [a, b] : f.arrows) std::swap(a, b);
  for (auto& [sg, c] : f.terms) std::reverse(c.begin(), c.end());
  return f;
}

// Backtracking search for a vertex and arrow relabeling carrying x onto y, with the
// potential matched term by term up to rotation (and up to one global sign).
inline bool qp_isomorphic(const QpShape& x, const QpShape& y) {
  if (x.nv != y.nv || x.arrows.size() != y.arrows.size() || x.terms.size() != y.terms.size()) return false;
  std::size_t na = x.arrows.size();
  std::vector<int> vmap(x.nv, -1), vused(x.nv, 0), amap(na, -1), aused(na, 0);
  auto canon = [](std::vector<int> c) { return canonical_rotation(c); };
  auto check_terms = [&]() {
    for (int global : {1, -1}) {
      std::multiset<std::pair<int, std::vector<int>>> want, got;
      for (const auto& [sg, c] : y.terms) want.insert({sg, canon(c)});
      for (const auto& [sg, c] : x.terms) {
        std::vector<int> m;
        for (int a : c) m.push_back(amap[a]);
        got.insert({sg * global, canon(m)});
      }
      if (want == got) return true;
    }
    return false;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
    if (a == na) return check_terms();
    auto [s, t] = x.arrows[a];
    for (std::size_t b = 0; b < na; ++b) {
      if (aused[b]) continue;
      auto [ys, yt] = y.arrows[b];
      bool new_s = vmap[s] < 0, new_t = vmap[t] < 0 && t != s;
      if (!new_s && vmap[s] != ys) continue;
      if (new_s && vused[ys]) continue;
      if (s == t && ys != yt) continue;
      if (!new_t && t != s && vmap[t] != yt) continue;
      if (new_t && (vused[yt] || (new_s && yt == ys))) continue;
      if (new_s) vmap[s] = ys, vused[ys] = 1;
      if (new_t) vmap[t] = yt, vused[yt] = 1;
      amap[a] = static_cast<int>(b);
      aused[b] = 1;
      if (rec(a + 1)) return true;
      aused[b] = 0;
      amap[a] = -1;
      if (new_t) vmap[t] = -1, vused[yt] = 0;
      if (new_s) vmap[s] = -1, vused[ys] = 0;
    }
    return false;
  };
  return rec(0);
}

}  // namespace cyqw::test
