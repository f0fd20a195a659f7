#include "cyqw/repthy.hpp"

#include <stdexcept>

namespace cyqw {

namespace {

Matrix coords(const Matrix& basis, const Matrix& vecs) {
  if (basis.cols() == 0) return Matrix(0, vecs.cols());
  return SpanCoordinates(basis)(vecs);
}

// Matrix of a left inverse (on the span) of a full-column-rank basis.
Matrix left_inverse(const Matrix& basis) { return coords(basis, Matrix::identity(basis.rows())); }

std::size_t hom_dim(const ModuleSum& p, const Representation& n) {
  std::size_t d = 0;
  for (int g : p.gens) d += n.dims[g];
  return d;
}

std::vector<std::size_t> hom_offsets(const ModuleSum& p, const Representation& n) {
  std::vector<std::size_t> off;
  std::size_t d = 0;
  for (int g : p.gens) {
    off.push_back(d);
    d += n.dims[g];
  }
  return off;
}

std::vector<Matrix> word_matrices(const FiniteAlgebraModel& m, const Representation& n) {
  std::vector<Matrix> out;
  for (const auto& w : m.basis()) out.push_back(n.path_matrix(m.quiver(), w));
  return out;
}

// For F: src -> tgt given by generator images, the map Hom(tgt, N) -> Hom(src, N), f |-> f∘F.
Matrix pullback(const FiniteAlgebraModel& m, const ModuleSum& src, const std::vector<Vector>& images, const ModuleSum& tgt,
                const Representation& n, const std::vector<Matrix>& words) {
  auto roff = hom_offsets(src, n);
  auto coff = hom_offsets(tgt, n);
  Matrix out(hom_dim(src, n), hom_dim(tgt, n));
  for (std::size_t h = 0; h < src.gens.size(); ++h) {
    int vh = src.gens[h];
    for (std::size_t g = 0; g < tgt.gens.size(); ++g) {
      int vg = tgt.gens[g];
      for (int w : m.corner(vh, vg)) {
        const Rational& c = images[h][tgt.offset[g][vh] + m.position(w)];
        if (sgn(c) == 0) continue;
        const Matrix& nw = words[w];
        for (std::size_t i = 0; i < nw.rows(); ++i)
          for (std::size_t j = 0; j < nw.cols(); ++j)
            if (sgn(nw(i, j)) != 0) out(roff[h] + i, coff[g] + j) += c * nw(i, j);
      }
    }
  }
  return out;
}

// Generator images of lifts F_k: src_k -> tgt_k of f, for k = 0..upto.
std::vector<std::vector<Vector>> lift_chain_map(const FiniteAlgebraModel& m, const ProjectiveResolution& src,
                                                const ProjectiveResolution& tgt, const ModuleMap& f, std::size_t upto) {
  std::vector<std::vector<Vector>> out;
  ModuleMap prev = f;
  for (std::size_t k = 0; k <= upto && k < src.terms.size(); ++k) {
    const ModuleSum& p = src.terms[k];
    if (k >= tgt.terms.size()) {
      out.emplace_back(p.gens.size(), Vector());
      break;
    }
    std::vector<Vector> xs;
    for (std::size_t h = 0; h < p.gens.size(); ++h) {
      int v = p.gens[h];
      auto x = solve(tgt.d[k].at[v], prev.at[v] * src.images[k][h]);
      if (!x) throw std::logic_error("chain map lift failed");
      xs.push_back(std::move(*x));
    }
    prev = map_from_projective(m, p, tgt.terms[k].rep, xs);
    out.push_back(std::move(xs));
  }
  return out;
}

// Cohomology at one spot: representatives and a projection defined on cycles.
struct Cohomology {
  Matrix reps;
  Matrix proj;
};

Cohomology cohomology(std::size_t dim, const std::optional<Matrix>& in, const std::optional<Matrix>& out) {
  Matrix z = out && out->rows() > 0 ? kernel(*out) : Matrix::identity(dim);
  Matrix zl = left_inverse(z);
  Matrix bz(z.cols(), 0);
  if (in && in->cols() > 0) {
    Matrix bz_all = zl * *in;
    if (bz_all.cols() > 0) bz = bz_all.columns(column_basis(bz_all));
  }
  auto comp = complement_indices(bz, z.cols());
  Matrix e(z.cols(), comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) e(comp[k], k) = 1;
  Cohomology h;
  h.reps = z * e;
  h.proj = Matrix(comp.size(), dim);
  if (!comp.empty()) {
    Matrix inv = inverse(hstack(bz, e));
    Matrix last(comp.size(), z.cols());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < z.cols(); ++j) last(i, j) = inv(bz.cols() + i, j);
    h.proj = last * zl;
  }
  return h;
}

}  // namespace

int ProjectiveResolution::length() const {
  int last = -1;
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (!terms[k].gens.empty()) last = static_cast<int>(k);
  return last;
}

ProjectiveResolution projective_resolution(const FiniteAlgebraModel& m, const Representation& rep, int max_length) {
  const Quiver& q = m.quiver();
  ProjectiveResolution res;
  Representation cur = rep;
  ModuleMap incl;
  for (int v = 0; v < q.num_vertices(); ++v) incl.at.push_back(Matrix::identity(rep.dims[v]));
  for (int k = 0; k <= max_length; ++k) {
    if (cur.total() == 0) {
      res.complete = true;
      return res;
    }
    Cover cov = projective_cover(m, cur);
    std::vector<Vector> imgs;
    auto tops = top_indices(q, cur);
    for (int v = 0; v < q.num_vertices(); ++v)
      for (auto c : tops[v]) imgs.push_back(incl.at[v].column(c));
    res.d.push_back(compose(incl, cov.map));
    res.images.push_back(std::move(imgs));
    Submodule ker = kernel(q, cov.projective.rep, cov.map);
    res.terms.push_back(std::move(cov.projective));
    cur = std::move(ker.rep);
    incl = std::move(ker.inclusion);
  }
  res.complete = cur.total() == 0;
  return res;
}

std::size_t ext_dim(const FiniteAlgebraModel& m, const Representation& a, const Representation& b, int k) {
  if (k < 0) return 0;
  ProjectiveResolution res = projective_resolution(m, a, k + 1);
  if (static_cast<std::size_t>(k) >= res.terms.size()) return 0;
  auto words = word_matrices(m, b);
  const ModuleSum& pk = res.terms[k];
  std::size_t dim = hom_dim(pk, b);
  std::size_t rank_out = 0, rank_in = 0;
  if (static_cast<std::size_t>(k + 1) < res.terms.size())
    rank_out = rank(pullback(m, res.terms[k + 1], res.images[k + 1], pk, b, words));
  if (k >= 1) rank_in = rank(pullback(m, pk, res.images[k], res.terms[k - 1], b, words));
  return dim - rank_out - rank_in;
}

GlobalDimension global_dimension(const FiniteAlgebraModel& m, int cap) {
  GlobalDimension gd;
  for (int v = 0; v < m.num_vertices(); ++v) {
    ProjectiveResolution res = projective_resolution(m, simple(m, v), cap);
    if (!res.complete) {
      gd.exact = false;
      gd.value = cap;
      return gd;
    }
    gd.value = std::max(gd.value, res.length());
  }
  return gd;
}

Matrix cartan_matrix(const FiniteAlgebraModel& m) {
  int n = m.num_vertices();
  Matrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = static_cast<long>(m.corner(j, i).size());
  return c;
}

Polynomial coxeter_polynomial(const FiniteAlgebraModel& m) {
  Matrix c = cartan_matrix(m);
  if (sgn(determinant(c)) == 0) throw Refusal("Cartan matrix is singular, so the Coxeter transformation is undefined");
  Matrix phi = -(inverse(c.transpose()) * c);
  return characteristic_polynomial(phi);
}

std::size_t Bimodule::total() const {
  std::size_t t = 0;
  for (const auto& row : dims)
    for (auto d : row) t += d;
  return t;
}

Bimodule regular_bimodule(const FiniteAlgebraModel& m) {
  const Quiver& q = m.quiver();
  int nv = q.num_vertices();
  Bimodule x;
  x.dims.assign(nv, std::vector<std::size_t>(nv));
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) x.dims[u][v] = m.corner(u, v).size();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Path pa = Path::of_arrow(q, a);
    std::vector<Matrix> l, r;
    for (int v = 0; v < nv; ++v) {
      Matrix mat(x.dims[ar.target][v], x.dims[ar.source][v]);
      for (int w : m.corner(ar.source, v))
        for (const auto& [y, c] : m.coordinates(concat(m.word(w), pa))) mat(m.position(y), m.position(w)) += c;
      l.push_back(std::move(mat));
    }
    for (int u = 0; u < nv; ++u) {
      Matrix mat(x.dims[u][ar.source], x.dims[u][ar.target]);
      for (int w : m.corner(u, ar.target))
        for (const auto& [y, c] : m.coordinates(concat(pa, m.word(w)))) mat(m.position(y), m.position(w)) += c;
      r.push_back(std::move(mat));
    }
    x.left.push_back(std::move(l));
    x.right.push_back(std::move(r));
  }
  return x;
}

bool actions_commute(const Quiver& q, const Bimodule& x) {
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int b = 0; b < q.num_arrows(); ++b) {
      const Arrow& la = q.arrow(a);
      const Arrow& rb = q.arrow(b);
      // X[s(a)][t(b)] -> X[t(a)][s(b)] both ways
      Matrix one = x.left[a][rb.source] * x.right[b][la.source];
      Matrix two = x.right[b][la.target] * x.left[a][rb.target];
      if (!(one == two)) return false;
    }
  return true;
}

Bimodule tensor_over(const FiniteAlgebraModel& m, const Bimodule& x, const Bimodule& y) {
  const Quiver& q = m.quiver();
  int nv = q.num_vertices();
  struct Piece {
    std::vector<std::size_t> off;
    std::size_t free_dim = 0;
    Matrix proj, sec;
  };
  std::vector<std::vector<Piece>> pieces(nv, std::vector<Piece>(nv));
  Bimodule out;
  out.dims.assign(nv, std::vector<std::size_t>(nv));
  for (int u = 0; u < nv; ++u)
    for (int w = 0; w < nv; ++w) {
      Piece& pc = pieces[u][w];
      for (int v = 0; v < nv; ++v) {
        pc.off.push_back(pc.free_dim);
        pc.free_dim += x.dims[u][v] * y.dims[v][w];
      }
      // (x·a) ⊗ y - x ⊗ (a·y) for x in X[u][t(a)], y in Y[s(a)][w]
      std::vector<Vector> rels;
      for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).source, t = q.arrow(a).target;
        const Matrix& xa = x.right[a][u];
        const Matrix& ay = y.left[a][w];
        for (std::size_t i = 0; i < x.dims[u][t]; ++i)
          for (std::size_t j = 0; j < y.dims[s][w]; ++j) {
            Vector r(pc.free_dim);
            bool nz = false;
            for (std::size_t i2 = 0; i2 < x.dims[u][s]; ++i2)
              if (sgn(xa(i2, i)) != 0) {
                r[pc.off[s] + i2 * y.dims[s][w] + j] += xa(i2, i);
                nz = true;
              }
            for (std::size_t j2 = 0; j2 < y.dims[t][w]; ++j2)
              if (sgn(ay(j2, j)) != 0) {
                r[pc.off[t] + i * y.dims[t][w] + j2] -= ay(j2, j);
                nz = true;
              }
            if (nz) rels.push_back(std::move(r));
          }
      }
      Matrix rel = from_columns(pc.free_dim, rels);
      Matrix im = rel.cols() == 0 ? Matrix(pc.free_dim, 0) : rel.columns(column_basis(rel));
      auto comp = complement_indices(im, pc.free_dim);
      pc.sec = Matrix(pc.free_dim, comp.size());
      for (std::size_t k = 0; k < comp.size(); ++k) pc.sec(comp[k], k) = 1;
      pc.proj = Matrix(comp.size(), pc.free_dim);
      if (!comp.empty()) {
        Matrix inv = inverse(hstack(im, pc.sec));
        for (std::size_t i = 0; i < comp.size(); ++i)
          for (std::size_t j = 0; j < pc.free_dim; ++j) pc.proj(i, j) = inv(im.cols() + i, j);
      }
      out.dims[u][w] = comp.size();
    }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).source, t = q.arrow(a).target;
    std::vector<Matrix> l, r;
    for (int w = 0; w < nv; ++w) {
      const Piece& from = pieces[s][w];
      const Piece& to = pieces[t][w];
      Matrix f(to.free_dim, from.free_dim);
      for (int v = 0; v < nv; ++v) {
        const Matrix& xa = x.left[a][v];  // X[s][v] -> X[t][v]
        std::size_t yd = y.dims[v][w];
        for (std::size_t i = 0; i < xa.cols(); ++i)
          for (std::size_t i2 = 0; i2 < xa.rows(); ++i2)
            if (sgn(xa(i2, i)) != 0)
              for (std::size_t j = 0; j < yd; ++j) f(to.off[v] + i2 * yd + j, from.off[v] + i * yd + j) = xa(i2, i);
      }
      l.push_back(to.proj * (f * from.sec));
    }
    for (int u = 0; u < nv; ++u) {
      const Piece& from = pieces[u][t];
      const Piece& to = pieces[u][s];
      Matrix f(to.free_dim, from.free_dim);
      for (int v = 0; v < nv; ++v) {
        const Matrix& ya = y.right[a][v];  // Y[v][t] -> Y[v][s]
        for (std::size_t i = 0; i < x.dims[u][v]; ++i)
          for (std::size_t j = 0; j < ya.cols(); ++j)
            for (std::size_t j2 = 0; j2 < ya.rows(); ++j2)
              if (sgn(ya(j2, j)) != 0)
                f(to.off[v] + i * y.dims[v][s] + j2, from.off[v] + i * y.dims[v][t] + j) = ya(j2, j);
      }
      r.push_back(to.proj * (f * from.sec));
    }
    out.left.push_back(std::move(l));
    out.right.push_back(std::move(r));
  }
  return out;
}

Bimodule ext_bimodule(const FiniteAlgebraModel& m, int n) {
  if (n < 1) throw InputError("ext_bimodule needs n >= 1");
  const Quiver& q = m.quiver();
  int nv = q.num_vertices();
  std::vector<ModuleSum> inj;
  std::vector<ProjectiveResolution> res;
  for (int v = 0; v < nv; ++v) {
    inj.push_back(injective_sum(m, {v}));
    res.push_back(projective_resolution(m, inj.back().rep, n + 1));
  }
  std::vector<ModuleSum> proj;
  std::vector<std::vector<Matrix>> words;
  for (int w = 0; w < nv; ++w) {
    proj.push_back(projective_sum(m, {w}));
    words.push_back(word_matrices(m, proj.back().rep));
  }
  auto term = [&](int v, int k) -> const ModuleSum* {
    return k >= 0 && static_cast<std::size_t>(k) < res[v].terms.size() ? &res[v].terms[k] : nullptr;
  };
  std::vector<std::vector<Cohomology>> h(nv, std::vector<Cohomology>(nv));
  Bimodule e;
  e.dims.assign(nv, std::vector<std::size_t>(nv));
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      const ModuleSum* pn = term(v, n);
      if (!pn) {
        h[v][w] = Cohomology{Matrix(0, 0), Matrix(0, 0)};
        continue;
      }
      const Representation& target = proj[w].rep;
      std::optional<Matrix> in, out;
      if (const ModuleSum* prev = term(v, n - 1)) in = pullback(m, *pn, res[v].images[n], *prev, target, words[w]);
      if (const ModuleSum* next = term(v, n + 1)) out = pullback(m, *next, res[v].images[n + 1], *pn, target, words[w]);
      h[v][w] = cohomology(hom_dim(*pn, target), in, out);
      e.dims[v][w] = h[v][w].reps.cols();
    }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).source, t = q.arrow(a).target;
    // right action: postcompose with P_t -> P_s, z |-> z·a
    std::vector<Matrix> r;
    Path pa = Path::of_arrow(q, a);
    std::vector<Vector> img(1, Vector(proj[s].rep.dims[t]));
    for (const auto& [x, c] : m.coordinates(pa)) img[0][m.position(x)] += c;
    ModuleMap ra = map_from_projective(m, proj[t], proj[s].rep, img);
    for (int v = 0; v < nv; ++v) {
      const ModuleSum* pn = term(v, n);
      if (!pn) {
        r.emplace_back(0, 0);
        continue;
      }
      Matrix post(hom_dim(*pn, proj[s].rep), hom_dim(*pn, proj[t].rep));
      auto ro = hom_offsets(*pn, proj[s].rep);
      auto co = hom_offsets(*pn, proj[t].rep);
      for (std::size_t g = 0; g < pn->gens.size(); ++g) {
        const Matrix& blk = ra.at[pn->gens[g]];
        for (std::size_t i = 0; i < blk.rows(); ++i)
          for (std::size_t j = 0; j < blk.cols(); ++j) post(ro[g] + i, co[g] + j) = blk(i, j);
      }
      r.push_back(h[v][s].proj * (post * h[v][t].reps));
    }
    // left action: precompose with a lift of I_t -> I_s, φ |-> φ·a
    std::vector<Matrix> l;
    Vector eval(inj[t].rep.dims[s]);
    for (const auto& [x, c] : m.coordinates(pa)) eval[m.position(x)] += c;
    ModuleMap rho = map_to_injective(m, inj[t].rep, inj[s], {eval});
    auto lifted = lift_chain_map(m, res[t], res[s], rho, n);
    for (int w = 0; w < nv; ++w) {
      const ModuleSum* src = term(t, n);
      const ModuleSum* tgt = term(s, n);
      if (!src || !tgt) {
        l.emplace_back(e.dims[t][w], e.dims[s][w]);
        continue;
      }
      Matrix pre = pullback(m, *src, lifted[n], *tgt, proj[w].rep, words[w]);
      l.push_back(h[t][w].proj * (pre * h[s][w].reps));
    }
    e.left.push_back(std::move(l));
    e.right.push_back(std::move(r));
  }
  return e;
}

std::vector<GradedPiece> preprojective_graded_dims(const FiniteAlgebraModel& m, int n, int max_degree) {
  std::vector<GradedPiece> out;
  Bimodule cur = regular_bimodule(m);
  Bimodule e = max_degree >= 1 ? ext_bimodule(m, n) : cur;
  for (int l = 0; l <= max_degree; ++l) {
    if (l == 1)
      cur = e;
    else if (l > 1)
      cur = tensor_over(m, cur, e);
    out.push_back(GradedPiece{l, cur.dims, cur.total()});
  }
  return out;
}

}  // namespace cyqw
