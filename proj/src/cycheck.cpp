#include "cyqw/cycheck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace cyqw {

TensorElement reduce_tensor(const TensorElement& x, const GroebnerBasis& gb) {
  TensorElement out;
  for (const auto& [k, c] : x.terms()) {
    PathElement l = gb.reduce(k.first);
    if (l.is_zero()) continue;
    PathElement r = gb.reduce(k.second);
    for (const auto& [u, a] : l.terms())
      for (const auto& [v, b] : r.terms()) out.add(u, v, c * a * b);
  }
  return out;
}

BimoduleComplex::Differential compose_differentials(const BimoduleComplex& p, std::size_t l) {
  const auto& outer = p.diffs()[l - 1];
  const auto& inner = p.diffs()[l];
  std::map<int, std::vector<std::pair<int, const TensorElement*>>> by_col;
  for (const auto& [rc, e] : outer) by_col[rc.second].emplace_back(rc.first, &e);
  BimoduleComplex::Differential out;
  for (const auto& [rc, e1] : inner) {
    auto it = by_col.find(rc.first);
    if (it == by_col.end()) continue;
    for (const auto& [k, e2] : it->second) {
      TensorElement& acc = out[{k, rc.second}];
      for (const auto& [pq1, c1] : e1.terms())
        for (const auto& [pq2, c2] : e2->terms())
          acc.add(concat(pq2.first, pq1.first), concat(pq1.second, pq2.second), c1 * c2);
    }
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct PieceElem {
  int gen;
  const Path* left;
  const Path* right;
};

class NormalCache {
 public:
  explicit NormalCache(const GroebnerBasis& gb) : gb_(gb) {}
  const PathElement& operator()(const Path& p) {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(p, gb_.reduce(p)).first->second;
  }

 private:
  const GroebnerBasis& gb_;
  std::map<Path, PathElement> cache_;
};

}  // namespace

ComplexReport verify_complex(const BimoduleComplex& p, const GroebnerBasis& gb, int degcap) {
  if (!gb.complete()) throw Refusal("verify_complex needs a complete Groebner basis");
  if (!(gb.algebra() == p.algebra())) throw Refusal("Groebner basis belongs to a different algebra");
  ComplexReport rep;
  const Quiver& q = gb.quiver();
  std::size_t len = p.length();

  for (std::size_t l = 2; l < len && rep.squares_to_zero; ++l) {
    for (const auto& [rc, e] : compose_differentials(p, l)) {
      TensorElement r = reduce_tensor(e, gb);
      if (!r.is_zero()) {
        const auto& [lp, rp] = r.terms().begin()->first;
        rep.squares_to_zero = false;
        rep.offending_entry = "d" + std::to_string(l - 1) + "∘d" + std::to_string(l) + " entry (" +
                              p.term(l - 2)[rc.first].label + ", " + p.term(l)[rc.second].label +
                              ") has term " + r.terms().begin()->second.get_str() + " " + path_to_string(q, lp) +
                              " ⊗ " + path_to_string(q, rp);
        break;
      }
    }
  }

  auto words = normal_words_by_grade(gb, degcap);
  int nv = q.num_vertices();
  // [vertex][degree] -> words with that source (left legs) / target (right legs)
  std::vector<std::vector<std::vector<const Path*>>> by_source(nv, std::vector<std::vector<const Path*>>(degcap + 1));
  std::vector<std::vector<std::vector<const Path*>>> by_target(nv, std::vector<std::vector<const Path*>>(degcap + 1));
  std::map<Path, const Path*> canonical;
  for (int g = 0; g <= degcap; ++g)
    for (const Path& w : words[g]) {
      by_source[w.source][g].push_back(&w);
      by_target[w.target][g].push_back(&w);
      canonical.emplace(w, &w);
    }
  NormalCache nf(gb);

  for (int delta = 0; delta <= degcap; ++delta) {
    DegreePiece piece;
    piece.degree = delta;
    std::vector<std::vector<PieceElem>> basis(len);
    std::vector<std::map<std::tuple<int, const Path*, const Path*>, int>> index(len);
    std::vector<std::size_t> offset(len + 1, 0);
    for (std::size_t l = 0; l < len; ++l) {
      const auto& gens = p.term(l);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int rest = delta - gens[g].twist;
        if (rest < 0) continue;
        for (int dl = 0; dl <= rest; ++dl) {
          int dr = rest - dl;
          if (dl > degcap || dr > degcap) continue;
          for (const Path* b : by_source[gens[g].left][dl])
            for (const Path* bp : by_target[gens[g].right][dr]) {
              index[l].emplace(std::make_tuple(static_cast<int>(g), b, bp), static_cast<int>(basis[l].size()));
              basis[l].push_back(PieceElem{static_cast<int>(g), b, bp});
            }
        }
      }
      piece.dims.push_back(basis[l].size());
      offset[l + 1] = offset[l] + basis[l].size();
    }
    // entries[l]: (row in l-1, col in l) -> value
    std::vector<std::map<std::pair<int, int>, Rational>> entries(len);
    UnionFind uf(offset[len]);
    for (std::size_t l = 1; l < len; ++l) {
      std::map<int, std::vector<std::pair<int, const TensorElement*>>> by_col;
      for (const auto& [rc, e] : p.diffs()[l]) by_col[rc.second].emplace_back(rc.first, &e);
      for (std::size_t col = 0; col < basis[l].size(); ++col) {
        const PieceElem& el = basis[l][col];
        auto it = by_col.find(el.gen);
        if (it == by_col.end()) continue;
        for (const auto& [h, e] : it->second) {
          for (const auto& [pq, c] : e->terms()) {
            const PathElement& lf = nf(concat(pq.first, *el.left));
            if (lf.is_zero()) continue;
            const PathElement& rf = nf(concat(*el.right, pq.second));
            for (const auto& [u, a] : lf.terms())
              for (const auto& [v, b] : rf.terms()) {
                auto row = index[l - 1].find(std::make_tuple(h, canonical.at(u), canonical.at(v)));
                if (row == index[l - 1].end()) throw std::logic_error("degree piece image outside its target");
                Rational& slot = entries[l][{row->second, static_cast<int>(col)}];
                slot += c * a * b;
              }
          }
        }
      }
      for (auto it = entries[l].begin(); it != entries[l].end();) {
        if (sgn(it->second) == 0) {
          it = entries[l].erase(it);
          continue;
        }
        uf.unite(static_cast<int>(offset[l - 1]) + it->first.first, static_cast<int>(offset[l]) + it->first.second);
        ++it;
      }
    }
    // Group entries by component and take ranks blockwise.
    std::map<int, std::vector<std::size_t>> comps;
    for (std::size_t x = 0; x < offset[len]; ++x) comps[uf.find(static_cast<int>(x))];
    piece.blocks = comps.size();
    piece.ranks.assign(len, 0);
    for (std::size_t l = 1; l < len; ++l) {
      std::map<int, std::vector<std::tuple<int, int, const Rational*>>> per_comp;
      for (const auto& [rc, v] : entries[l])
        per_comp[uf.find(static_cast<int>(offset[l - 1]) + rc.first)].emplace_back(rc.first, rc.second, &v);
      for (const auto& [comp, list] : per_comp) {
        std::map<int, std::size_t> rows, cols;
        for (const auto& [r, c, v] : list) {
          rows.emplace(r, rows.size());
          cols.emplace(c, cols.size());
        }
        Matrix m(rows.size(), cols.size());
        for (const auto& [r, c, v] : list) m(rows[r], cols[c]) = *v;
        piece.ranks[l] += rank(m);
      }
    }
    auto counts = graded_counts(gb, delta);
    piece.algebra_dim = 0;
    for (const auto& row : (*counts)[delta])
      for (const auto& x : row) piece.algebra_dim += x;
    piece.ok = true;
    for (std::size_t l = 0; l < len; ++l) {
      std::size_t out_rank = piece.ranks[l];
      std::size_t in_rank = l + 1 < len ? piece.ranks[l + 1] : 0;
      std::size_t h = piece.dims[l] - out_rank - in_rank;
      piece.homology.push_back(h);
      if (l == 0 ? Integer(static_cast<unsigned long>(h)) != piece.algebra_dim : h != 0) piece.ok = false;
    }
    if (!piece.ok) rep.exact = false;
    rep.pieces.push_back(std::move(piece));
  }
  return rep;
}

DualityReport verify_self_duality(const BimoduleComplex& p, int d) {
  DualityReport rep;
  if (static_cast<int>(p.length()) != d + 1) {
    rep.ok = false;
    rep.mismatches.push_back("complex has " + std::to_string(p.length()) + " terms, expected " + std::to_string(d + 1));
    return rep;
  }
  for (int l = 0; l <= d; ++l) {
    std::vector<std::tuple<int, int, int>> lhs, rhs;
    for (const auto& g : p.term(l)) lhs.emplace_back(g.left, g.right, g.twist);
    for (const auto& g : p.term(d - l)) rhs.emplace_back(g.right, g.left, 1 - g.twist);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      rep.ok = false;
      rep.mismatches.push_back("term " + std::to_string(l) + " differs from the dual of term " + std::to_string(d - l));
    }
  }
  return rep;
}

}  // namespace cyqw
