#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyqw/model.hpp"

namespace cyqw {

struct ProjectiveResolution {
  std::vector<ModuleSum> terms;
  // d[0]: P_0 -> M, d[k]: P_k -> P_{k-1}
  std::vector<ModuleMap> d;
  // images[k][g]: image of the top generator g of P_k
  std::vector<std::vector<Vector>> images;
  bool complete = false;
  // Index of the last nonzero term.
  int length() const;
};

ProjectiveResolution projective_resolution(const FiniteAlgebraModel& m, const Representation& rep, int max_length);

std::size_t ext_dim(const FiniteAlgebraModel& m, const Representation& a, const Representation& b, int k);

struct GlobalDimension {
  int value = 0;
  bool exact = true;  // false: value is a lower bound reached at the cap
};
GlobalDimension global_dimension(const FiniteAlgebraModel& m, int cap);

// C[i][j] = dim e_j Λ e_i, the number of basis paths from i to j.
Matrix cartan_matrix(const FiniteAlgebraModel& m);
// det(tI - Φ), Φ = -C^{-T} C.
Polynomial coxeter_polynomial(const FiniteAlgebraModel& m);

// dims[u][v] = dim e_u X e_v.
struct Bimodule {
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<Matrix>> left;   // left[a][v]: X[s(a)][v] -> X[t(a)][v]
  std::vector<std::vector<Matrix>> right;  // right[a][u]: X[u][t(a)] -> X[u][s(a)]
  std::size_t total() const;
};

Bimodule regular_bimodule(const FiniteAlgebraModel& m);
bool actions_commute(const Quiver& q, const Bimodule& x);
Bimodule tensor_over(const FiniteAlgebraModel& m, const Bimodule& x, const Bimodule& y);
// Ext^n(DΛ, Λ).
Bimodule ext_bimodule(const FiniteAlgebraModel& m, int n);

struct GradedPiece {
  int degree = 0;
  std::vector<std::vector<std::size_t>> dims;
  std::size_t total = 0;
};
// Tensor powers of Ext^n(DΛ, Λ) over Λ for degrees 0..max_degree.
std::vector<GradedPiece> preprojective_graded_dims(const FiniteAlgebraModel& m, int n, int max_degree);

// Bounded cochain complex; d[k]: terms[k] -> terms[k+1], terms[k] sits in degree lowest + k.
struct ModuleComplex {
  int lowest = 0;
  std::vector<Representation> terms;
  std::vector<ModuleMap> d;
};

std::map<int, std::vector<std::size_t>> homology_dims(const ModuleComplex& x);
Representation homology_module(const Quiver& q, const ModuleComplex& x, int degree);

struct SerreIterate {
  int step = 0;
  std::map<int, std::vector<std::size_t>> homology;  // nonzero degrees only
  bool concentrated() const;
  std::size_t total_in_degree(int j) const;
};

// Homology of S_n^{-l}(Λ) for l = 0..steps.
std::vector<SerreIterate> serre_inverse_iterate(const FiniteAlgebraModel& m, int n, int steps);

}  // namespace cyqw
