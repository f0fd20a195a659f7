#include "cyqw/model.hpp"

#include <map>
#include <stdexcept>

namespace cyqw {

namespace {

Matrix unit_columns(std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix e(n, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) e(idx[k], k) = 1;
  return e;
}

// Coordinates with respect to a (possibly empty) independent column set.
Matrix coordinates_in(const Matrix& basis, const Matrix& vecs) {
  if (basis.cols() == 0) return Matrix(0, vecs.cols());
  return SpanCoordinates(basis)(vecs);
}

Vector apply_path(const Quiver& q, const Representation& r, const Path& p, Vector v) {
  (void)q;
  for (int a : p.arrows) v = r.maps[a] * v;
  return v;
}

Vector row_times_path(const Representation& r, const Path& p, Vector row) {
  // row · M_{a_k} ··· M_{a_1}
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    const Matrix& m = r.maps[*it];
    Vector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sgn(row[i]) == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(i, j)) != 0) out[j] += row[i] * m(i, j);
    }
    row = std::move(out);
  }
  return row;
}

}  // namespace

FiniteAlgebraModel::FiniteAlgebraModel(const PresentedGradedAlgebra& alg, int cap) : gb_(complete_groebner(alg, cap)) {
  Finiteness f = is_finite_dimensional(gb_);
  if (f.answer != Finiteness::Answer::yes)
    throw Refusal(f.answer == Finiteness::Answer::no ? "algebra is infinite-dimensional"
                                                      : "finite dimensionality not certified within cap " +
                                                            std::to_string(cap));
  basis_ = all_normal_words(gb_);
  int nv = quiver().num_vertices();
  corner_.assign(nv, std::vector<std::vector<int>>(nv));
  position_.resize(basis_.size());
  idempotent_.assign(nv, -1);
  for (std::size_t x = 0; x < basis_.size(); ++x) {
    auto& list = corner_[basis_[x].target][basis_[x].source];
    position_[x] = static_cast<int>(list.size());
    list.push_back(static_cast<int>(x));
    if (basis_[x].is_trivial()) idempotent_[basis_[x].source] = static_cast<int>(x);
  }
  table_.assign(basis_.size(), std::vector<SparseVec>(basis_.size()));
  for (std::size_t x = 0; x < basis_.size(); ++x)
    for (std::size_t y = 0; y < basis_.size(); ++y)
      if (basis_[y].target == basis_[x].source) table_[x][y] = coordinates(concat(basis_[y], basis_[x]));
}

int FiniteAlgebraModel::index_of(const Path& p) const {
  for (int x : corner_[p.target][p.source])
    if (basis_[x] == p) return x;
  throw std::logic_error("path is not a normal word");
}

const SparseVec& FiniteAlgebraModel::product(int x, int y) const {
  if (basis_[y].target != basis_[x].source) return empty_;
  return table_[x][y];
}

SparseVec FiniteAlgebraModel::coordinates(const Path& p) const {
  SparseVec out;
  PathElement nf = gb_.reduce(p);
  for (const auto& [w, c] : nf.terms()) out.emplace_back(index_of(w), c);
  return out;
}

std::size_t Representation::total() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

Matrix Representation::path_matrix(const Quiver& q, const Path& p) const {
  Matrix m = Matrix::identity(dims[p.source]);
  for (int a : p.arrows) m = maps[a] * m;
  (void)q;
  return m;
}

bool is_module_map(const Quiver& q, const Representation& m, const Representation& n, const ModuleMap& f) {
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(n.maps[a] * f.at[ar.source] == f.at[ar.target] * m.maps[a])) return false;
  }
  return true;
}

bool satisfies_relations(const PresentedGradedAlgebra& alg, const Representation& m) {
  const Quiver& q = alg.quiver();
  for (const auto& rel : alg.relations()) {
    const Path& lead = rel.leading();
    Matrix acc(m.dims[lead.target], m.dims[lead.source]);
    for (const auto& [p, c] : rel.terms()) {
      Matrix pm = m.path_matrix(q, p);
      for (std::size_t i = 0; i < acc.rows(); ++i)
        for (std::size_t j = 0; j < acc.cols(); ++j) acc(i, j) += c * pm(i, j);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
  return h;
}

ModuleMap zero_map(const Representation& m, const Representation& n) {
  ModuleMap f;
  for (std::size_t v = 0; v < m.dims.size(); ++v) f.at.emplace_back(n.dims[v], m.dims[v]);
  return f;
}

bool is_zero(const ModuleMap& f) {
  for (const auto& m : f.at)
    if (!m.is_zero()) return false;
  return true;
}

Submodule kernel(const Quiver& q, const Representation& m, const ModuleMap& f) {
  Submodule s;
  std::size_t nv = m.dims.size();
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix k = f.at[v].rows() == 0 ? Matrix::identity(m.dims[v]) : kernel(f.at[v]);
    s.rep.dims.push_back(k.cols());
    s.inclusion.at.push_back(std::move(k));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    s.rep.maps.push_back(coordinates_in(s.inclusion.at[ar.target], m.maps[a] * s.inclusion.at[ar.source]));
  }
  return s;
}

Quotient cokernel(const Quiver& q, const Representation& n, const ModuleMap& f) {
  Quotient c;
  std::size_t nv = n.dims.size();
  std::vector<std::vector<std::size_t>> comp(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    Matrix im = f.at[v].cols() == 0 ? Matrix(n.dims[v], 0) : f.at[v].columns(column_basis(f.at[v]));
    comp[v] = complement_indices(im, n.dims[v]);
    Matrix proj(comp[v].size(), n.dims[v]);
    if (!comp[v].empty()) {
      Matrix inv = inverse(hstack(im, unit_columns(n.dims[v], comp[v])));
      for (std::size_t i = 0; i < comp[v].size(); ++i)
        for (std::size_t j = 0; j < n.dims[v]; ++j) proj(i, j) = inv(im.cols() + i, j);
    }
    c.rep.dims.push_back(comp[v].size());
    c.projection.at.push_back(std::move(proj));
    c.section.at.push_back(unit_columns(n.dims[v], comp[v]));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    c.rep.maps.push_back(c.projection.at[ar.target] * (n.maps[a] * unit_columns(n.dims[ar.source], comp[ar.source])));
  }
  return c;
}

DirectSum direct_sum(const Representation& m, const Representation& n) {
  DirectSum s;
  std::size_t nv = m.dims.size();
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t a = m.dims[v], b = n.dims[v];
    s.rep.dims.push_back(a + b);
    Matrix i1(a + b, a), i2(a + b, b), p1(a, a + b), p2(b, a + b);
    for (std::size_t k = 0; k < a; ++k) i1(k, k) = 1, p1(k, k) = 1;
    for (std::size_t k = 0; k < b; ++k) i2(a + k, k) = 1, p2(k, a + k) = 1;
    s.in1.at.push_back(i1);
    s.in2.at.push_back(i2);
    s.pr1.at.push_back(p1);
    s.pr2.at.push_back(p2);
  }
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const Matrix& x = m.maps[a];
    const Matrix& y = n.maps[a];
    Matrix z(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) z(x.rows() + i, x.cols() + j) = y(i, j);
    s.rep.maps.push_back(std::move(z));
  }
  return s;
}

std::vector<std::vector<std::size_t>> top_indices(const Quiver& q, const Representation& m) {
  std::vector<std::vector<std::size_t>> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Matrix rad(m.dims[v], 0);
    for (int a : q.arrows_into(v)) rad = hstack(rad, m.maps[a]);
    out.push_back(complement_indices(rad, m.dims[v]));
  }
  return out;
}

std::vector<std::size_t> top_dims(const Quiver& q, const Representation& m) {
  std::vector<std::size_t> out;
  for (const auto& t : top_indices(q, m)) out.push_back(t.size());
  return out;
}

std::vector<Matrix> socle_basis(const Quiver& q, const Representation& m) {
  std::vector<Matrix> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Matrix out_maps(0, m.dims[v]);
    for (int a : q.arrows_from(v)) out_maps = vstack(out_maps, m.maps[a]);
    out.push_back(out_maps.rows() == 0 ? Matrix::identity(m.dims[v]) : kernel(out_maps));
  }
  return out;
}

Representation projective(const FiniteAlgebraModel& m, int v) { return projective_sum(m, {v}).rep; }
Representation injective(const FiniteAlgebraModel& m, int v) { return injective_sum(m, {v}).rep; }

Representation simple(const FiniteAlgebraModel& m, int v) {
  const Quiver& q = m.quiver();
  Representation r;
  for (int u = 0; u < q.num_vertices(); ++u) r.dims.push_back(u == v ? 1 : 0);
  for (const auto& a : q.arrows()) r.maps.emplace_back(r.dims[a.target], r.dims[a.source]);
  return r;
}

namespace {

// kind true: projectives (paths from g), false: injectives (duals of paths into g).
ModuleSum build_sum(const FiniteAlgebraModel& m, const std::vector<int>& gens, bool proj) {
  const Quiver& q = m.quiver();
  int nv = q.num_vertices();
  ModuleSum s;
  s.gens = gens;
  s.rep.dims.assign(nv, 0);
  for (int g : gens) {
    std::vector<std::size_t> off(nv);
    for (int u = 0; u < nv; ++u) {
      off[u] = s.rep.dims[u];
      s.rep.dims[u] += proj ? m.corner(u, g).size() : m.corner(g, u).size();
    }
    s.offset.push_back(off);
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix mat(s.rep.dims[ar.target], s.rep.dims[ar.source]);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int g = gens[k];
      if (proj) {
        for (int w : m.corner(ar.source, g))
          for (const auto& [x, c] : m.coordinates(concat(m.word(w), Path::of_arrow(q, a))))
            mat(s.offset[k][ar.target] + m.position(x), s.offset[k][ar.source] + m.position(w)) += c;
      } else {
        for (int w : m.corner(g, ar.target))
          for (const auto& [x, c] : m.coordinates(concat(Path::of_arrow(q, a), m.word(w))))
            mat(s.offset[k][ar.target] + m.position(w), s.offset[k][ar.source] + m.position(x)) += c;
      }
    }
    s.rep.maps.push_back(std::move(mat));
  }
  return s;
}

}  // namespace

ModuleSum projective_sum(const FiniteAlgebraModel& m, const std::vector<int>& gens) { return build_sum(m, gens, true); }
ModuleSum injective_sum(const FiniteAlgebraModel& m, const std::vector<int>& gens) { return build_sum(m, gens, false); }

Representation regular_module(const FiniteAlgebraModel& m) {
  std::vector<int> all;
  for (int v = 0; v < m.num_vertices(); ++v) all.push_back(v);
  return projective_sum(m, all).rep;
}

Representation dual_module(const FiniteAlgebraModel& m) {
  std::vector<int> all;
  for (int v = 0; v < m.num_vertices(); ++v) all.push_back(v);
  return injective_sum(m, all).rep;
}

ModuleMap map_from_projective(const FiniteAlgebraModel& m, const ModuleSum& p, const Representation& n,
                              const std::vector<Vector>& images) {
  const Quiver& q = m.quiver();
  ModuleMap f = zero_map(p.rep, n);
  for (std::size_t k = 0; k < p.gens.size(); ++k) {
    int g = p.gens[k];
    for (int u = 0; u < q.num_vertices(); ++u)
      for (int w : m.corner(u, g)) {
        Vector col = apply_path(q, n, m.word(w), images[k]);
        std::size_t c = p.offset[k][u] + m.position(w);
        for (std::size_t i = 0; i < col.size(); ++i) f.at[u](i, c) = col[i];
      }
  }
  return f;
}

ModuleMap map_to_injective(const FiniteAlgebraModel& m, const Representation& n, const ModuleSum& inj,
                           const std::vector<Vector>& functionals) {
  const Quiver& q = m.quiver();
  ModuleMap f = zero_map(n, inj.rep);
  for (std::size_t k = 0; k < inj.gens.size(); ++k) {
    int g = inj.gens[k];
    for (int u = 0; u < q.num_vertices(); ++u)
      for (int w : m.corner(g, u)) {
        Vector row = row_times_path(n, m.word(w), functionals[k]);
        std::size_t r = inj.offset[k][u] + m.position(w);
        for (std::size_t j = 0; j < row.size(); ++j) f.at[u](r, j) = row[j];
      }
  }
  return f;
}

Cover projective_cover(const FiniteAlgebraModel& m, const Representation& rep) {
  auto tops = top_indices(m.quiver(), rep);
  std::vector<int> gens;
  std::vector<Vector> images;
  for (int v = 0; v < m.num_vertices(); ++v)
    for (auto c : tops[v]) {
      gens.push_back(v);
      Vector e(rep.dims[v]);
      e[c] = 1;
      images.push_back(std::move(e));
    }
  Cover cov{projective_sum(m, gens), {}};
  cov.map = map_from_projective(m, cov.projective, rep, images);
  return cov;
}

Envelope injective_envelope(const FiniteAlgebraModel& m, const Representation& rep) {
  auto soc = socle_basis(m.quiver(), rep);
  std::vector<int> gens;
  std::vector<Vector> functionals;
  for (int v = 0; v < m.num_vertices(); ++v) {
    const Matrix& s = soc[v];
    if (s.cols() == 0) continue;
    auto comp = complement_indices(s, rep.dims[v]);
    Matrix inv = inverse(hstack(s, unit_columns(rep.dims[v], comp)));
    for (std::size_t k = 0; k < s.cols(); ++k) {
      gens.push_back(v);
      Vector row(rep.dims[v]);
      for (std::size_t j = 0; j < rep.dims[v]; ++j) row[j] = inv(k, j);
      functionals.push_back(std::move(row));
    }
  }
  Envelope env{injective_sum(m, gens), {}};
  env.map = map_to_injective(m, rep, env.injective, functionals);
  return env;
}

}  // namespace cyqw
