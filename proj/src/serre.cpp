#include <stdexcept>

#include "cyqw/repthy.hpp"

namespace cyqw {

namespace {

Representation zero_rep(const Quiver& q) {
  Representation r;
  r.dims.assign(q.num_vertices(), 0);
  for (int a = 0; a < q.num_arrows(); ++a) r.maps.emplace_back(0, 0);
  return r;
}

ModuleMap identity_map(const Representation& r) {
  ModuleMap f;
  for (auto d : r.dims) f.at.push_back(Matrix::identity(d));
  return f;
}

ModuleMap scaled(const ModuleMap& f, const Rational& c) {
  ModuleMap g = f;
  for (auto& m : g.at)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
  return g;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(f.at[v] + g.at[v]);
  return h;
}

Matrix coords(const Matrix& basis, const Matrix& vecs) {
  if (basis.cols() == 0) return Matrix(0, vecs.cols());
  return SpanCoordinates(basis)(vecs);
}

struct InjectiveComplex {
  int lowest = 0;
  std::vector<ModuleSum> terms;
  std::vector<ModuleMap> d;
};

// A quasi-isomorphic bounded complex of injectives, built degree by degree through pushouts.
InjectiveComplex injectivize(const FiniteAlgebraModel& m, const ModuleComplex& x, int bound) {
  const Quiver& q = m.quiver();
  InjectiveComplex out;
  out.lowest = x.lowest;
  std::size_t len = x.terms.size();
  auto term = [&](std::size_t k) { return k < len ? x.terms[k] : zero_rep(q); };
  ModuleMap f_prev;  // X^{k-1} -> I^{k-1}
  for (std::size_t k = 0;; ++k) {
    if (k > len + static_cast<std::size_t>(bound) + 1) throw std::logic_error("injective coresolution did not terminate");
    Representation xk = term(k);
    Representation n;
    ModuleMap from_c, from_x;  // C -> N, X^k -> N
    Quotient c_of_prev;
    if (k == 0) {
      n = xk;
      from_x = identity_map(xk);
    } else {
      const Representation& iprev = out.terms[k - 1].rep;
      Quotient c = k >= 2 ? cokernel(q, iprev, out.d[k - 2]) : Quotient{iprev, identity_map(iprev), identity_map(iprev)};
      Representation xprev = term(k - 1);
      DirectSum sum = direct_sum(c.rep, xk);
      ModuleMap dx = k - 1 < x.d.size() ? x.d[k - 1] : zero_map(xprev, xk);
      ModuleMap glue = add(compose(sum.in1, compose(c.projection, f_prev)), compose(sum.in2, scaled(dx, -1)));
      Quotient nq = cokernel(q, sum.rep, glue);
      n = nq.rep;
      from_c = compose(nq.projection, sum.in1);
      from_x = compose(nq.projection, sum.in2);
      c_of_prev = c;
    }
    if (k >= len && n.total() == 0) break;
    Envelope env = injective_envelope(m, n);
    if (k > 0) out.d.push_back(compose(env.map, compose(from_c, c_of_prev.projection)));
    f_prev = compose(env.map, from_x);
    out.terms.push_back(std::move(env.injective));
  }
  return out;
}

// Termwise Hom(DΛ, -), taking D(e_xΛ) to Λe_x.
ModuleComplex nakayama_inverse(const FiniteAlgebraModel& m, const InjectiveComplex& ic) {
  ModuleComplex out;
  out.lowest = ic.lowest;
  std::vector<ModuleSum> proj;
  for (const auto& t : ic.terms) {
    proj.push_back(projective_sum(m, t.gens));
    out.terms.push_back(proj.back().rep);
  }
  for (std::size_t k = 0; k < ic.d.size(); ++k) {
    const ModuleSum& src = ic.terms[k];
    const ModuleSum& tgt = ic.terms[k + 1];
    const ModuleMap& g = ic.d[k];
    std::vector<Vector> images;
    for (std::size_t a = 0; a < src.gens.size(); ++a) {
      int x = src.gens[a];
      Vector img(proj[k + 1].rep.dims[x]);
      for (std::size_t b = 0; b < tgt.gens.size(); ++b) {
        int y = tgt.gens[b];
        std::size_t row = tgt.offset[b][y] + m.position(m.idempotent(y));
        for (int p : m.corner(x, y)) {
          const Rational& c = g.at[y](row, src.offset[a][y] + m.position(p));
          if (sgn(c) != 0) img[proj[k + 1].offset[b][x] + m.position(p)] += c;
        }
      }
      images.push_back(std::move(img));
    }
    out.d.push_back(map_from_projective(m, proj[k], proj[k + 1].rep, images));
  }
  return out;
}

std::vector<std::size_t> ranks_at(const ModuleMap& f) {
  std::vector<std::size_t> r;
  for (const auto& m : f.at) r.push_back(m.rows() == 0 || m.cols() == 0 ? 0 : rank(m));
  return r;
}

// Replaces x by a shorter quasi-isomorphic complex (smart truncations, or its homology).
ModuleComplex minimalize(const Quiver& q, const ModuleComplex& x) {
  auto h = homology_dims(x);
  if (h.empty()) return ModuleComplex{0, {}, {}};
  int lo = h.begin()->first, hi = h.rbegin()->first;
  if (lo == hi) return ModuleComplex{lo, {homology_module(q, x, lo)}, {}};
  ModuleComplex y;
  y.lowest = lo;
  std::size_t klo = lo - x.lowest, khi = hi - x.lowest;
  Submodule z = kernel(q, x.terms[khi], khi < x.d.size() ? x.d[khi] : zero_map(x.terms[khi], x.terms[khi]));
  Quotient c = klo >= 1 ? cokernel(q, x.terms[klo], x.d[klo - 1])
                        : Quotient{x.terms[klo], identity_map(x.terms[klo]), identity_map(x.terms[klo])};
  for (std::size_t k = klo; k <= khi; ++k) {
    if (k == klo)
      y.terms.push_back(c.rep);
    else if (k == khi)
      y.terms.push_back(z.rep);
    else
      y.terms.push_back(x.terms[k]);
  }
  for (std::size_t k = klo; k < khi; ++k) {
    ModuleMap f = x.d[k];
    if (k == klo) f = compose(f, c.section);
    if (k + 1 == khi) {
      ModuleMap g;
      for (std::size_t v = 0; v < f.at.size(); ++v) g.at.push_back(coords(z.inclusion.at[v], f.at[v]));
      f = g;
    }
    y.d.push_back(f);
  }
  return y;
}

}  // namespace

std::map<int, std::vector<std::size_t>> homology_dims(const ModuleComplex& x) {
  std::map<int, std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> rk;
  for (const auto& f : x.d) rk.push_back(ranks_at(f));
  for (std::size_t k = 0; k < x.terms.size(); ++k) {
    std::vector<std::size_t> h;
    bool nz = false;
    for (std::size_t v = 0; v < x.terms[k].dims.size(); ++v) {
      std::size_t val = x.terms[k].dims[v];
      if (k < rk.size()) val -= rk[k][v];
      if (k >= 1) val -= rk[k - 1][v];
      h.push_back(val);
      nz = nz || val != 0;
    }
    if (nz) out[x.lowest + static_cast<int>(k)] = h;
  }
  return out;
}

Representation homology_module(const Quiver& q, const ModuleComplex& x, int degree) {
  int k = degree - x.lowest;
  if (k < 0 || static_cast<std::size_t>(k) >= x.terms.size()) return zero_rep(q);
  const Representation& t = x.terms[k];
  Submodule z = static_cast<std::size_t>(k) < x.d.size() ? kernel(q, t, x.d[k])
                                                         : Submodule{t, identity_map(t)};
  if (k == 0) return z.rep;
  ModuleMap into;
  for (std::size_t v = 0; v < t.dims.size(); ++v) into.at.push_back(coords(z.inclusion.at[v], x.d[k - 1].at[v]));
  return cokernel(q, z.rep, into).rep;
}

bool SerreIterate::concentrated() const {
  for (const auto& [j, h] : homology)
    if (j != 0) return false;
  return true;
}

std::size_t SerreIterate::total_in_degree(int j) const {
  auto it = homology.find(j);
  if (it == homology.end()) return 0;
  std::size_t t = 0;
  for (auto d : it->second) t += d;
  return t;
}

std::vector<SerreIterate> serre_inverse_iterate(const FiniteAlgebraModel& m, int n, int steps) {
  GlobalDimension gd = global_dimension(m, n + 1);
  if (!gd.exact || gd.value > n)
    throw Refusal("global dimension " + std::string(gd.exact ? "" : ">= ") + std::to_string(gd.value) + " exceeds " +
                  std::to_string(n));
  const Quiver& q = m.quiver();
  ModuleComplex x{0, {regular_module(m)}, {}};
  std::vector<SerreIterate> out;
  out.push_back(SerreIterate{0, homology_dims(x)});
  for (int l = 1; l <= steps; ++l) {
    x = minimalize(q, x);
    if (x.terms.empty()) {
      out.push_back(SerreIterate{l, {}});
      continue;
    }
    x = nakayama_inverse(m, injectivize(m, x, gd.value));
    x.lowest -= n;
    out.push_back(SerreIterate{l, homology_dims(x)});
  }
  return out;
}

}  // namespace cyqw
