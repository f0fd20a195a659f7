#pragma once

#include <utility>
#include <vector>

#include "cyqw/linalg.hpp"
#include "cyqw/normalform.hpp"
#include "cyqw/pathalg.hpp"

namespace cyqw {

using SparseVec = std::vector<std::pair<int, Rational>>;

// A finite-dimensional quotient of a path algebra with its normal-word basis.
class FiniteAlgebraModel {
 public:
  explicit FiniteAlgebraModel(const PresentedGradedAlgebra& alg, int cap = kDefaultCap);

  const PresentedGradedAlgebra& algebra() const { return gb_.algebra(); }
  const Quiver& quiver() const { return gb_.quiver(); }
  const GroebnerBasis& groebner() const { return gb_; }
  int num_vertices() const { return quiver().num_vertices(); }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& word(int x) const { return basis_[x]; }

  // Basis indices of e_end Λ e_start, i.e. paths from start to end.
  const std::vector<int>& corner(int end, int start) const { return corner_[end][start]; }
  // Position of x inside its corner list.
  int position(int x) const { return position_[x]; }
  int index_of(const Path& p) const;
  int idempotent(int v) const { return idempotent_[v]; }

  // x·y (y applied first), zero unless target(y) = source(x).
  const SparseVec& product(int x, int y) const;
  // Normal form coordinates of an arbitrary path.
  SparseVec coordinates(const Path& p) const;

 private:
  GroebnerBasis gb_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<int>>> corner_;
  std::vector<int> position_;
  std::vector<int> idempotent_;
  std::vector<std::vector<SparseVec>> table_;  // table_[x][y]
  SparseVec empty_;
};

// Covariant representation: arrow a acts from the space at s(a) to the space at t(a).
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;

  std::size_t total() const;
  Matrix path_matrix(const Quiver& q, const Path& p) const;
};

// Per-vertex matrices.
struct ModuleMap {
  std::vector<Matrix> at;
};

bool is_module_map(const Quiver& q, const Representation& m, const Representation& n, const ModuleMap& f);
bool satisfies_relations(const PresentedGradedAlgebra& alg, const Representation& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap zero_map(const Representation& m, const Representation& n);
bool is_zero(const ModuleMap& f);

struct Submodule {
  Representation rep;
  ModuleMap inclusion;
};
struct Quotient {
  Representation rep;
  ModuleMap projection;
  ModuleMap section;  // linear right inverse of projection
};

Submodule kernel(const Quiver& q, const Representation& m, const ModuleMap& f);
Quotient cokernel(const Quiver& q, const Representation& n, const ModuleMap& f);
// m ⊕ n with inclusions and projections.
struct DirectSum {
  Representation rep;
  ModuleMap in1, in2, pr1, pr2;
};
DirectSum direct_sum(const Representation& m, const Representation& n);

// Per vertex: standard basis vectors spanning a complement of the radical / the socle basis.
std::vector<std::vector<std::size_t>> top_indices(const Quiver& q, const Representation& m);
std::vector<Matrix> socle_basis(const Quiver& q, const Representation& m);
std::vector<std::size_t> top_dims(const Quiver& q, const Representation& m);

// Direct sums of indecomposable projectives Λe_v or injectives D(e_vΛ).
struct ModuleSum {
  std::vector<int> gens;                         // vertex of each summand
  std::vector<std::vector<std::size_t>> offset;  // offset[g][u] inside rep.dims[u]
  Representation rep;
};

Representation projective(const FiniteAlgebraModel& m, int v);
Representation injective(const FiniteAlgebraModel& m, int v);
Representation simple(const FiniteAlgebraModel& m, int v);
ModuleSum projective_sum(const FiniteAlgebraModel& m, const std::vector<int>& gens);
ModuleSum injective_sum(const FiniteAlgebraModel& m, const std::vector<int>& gens);
Representation regular_module(const FiniteAlgebraModel& m);
Representation dual_module(const FiniteAlgebraModel& m);

// The map sending the top generator of summand g to images[g] ∈ n_{gens[g]}.
ModuleMap map_from_projective(const FiniteAlgebraModel& m, const ModuleSum& p, const Representation& n,
                              const std::vector<Vector>& images);
// The map whose summand-g component corresponds to the functional rows[g] on n_{gens[g]}.
ModuleMap map_to_injective(const FiniteAlgebraModel& m, const Representation& n, const ModuleSum& inj,
                           const std::vector<Vector>& functionals);

struct Cover {
  ModuleSum projective;
  ModuleMap map;
};
Cover projective_cover(const FiniteAlgebraModel& m, const Representation& rep);
struct Envelope {
  ModuleSum injective;
  ModuleMap map;
};
Envelope injective_envelope(const FiniteAlgebraModel& m, const Representation& rep);

}  // namespace cyqw
