#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyqw/complex.hpp"
#include "cyqw/normalform.hpp"
#include "cyqw/pathalg.hpp"

namespace cyqw {

struct PotentialTerm {
  Rational coef;
  std::vector<int> cycle;  // application order, lexicographically minimal rotation
  bool operator==(const PotentialTerm&) const = default;
};

class Potential {
 public:
  Potential() = default;
  // Cycles are rotated to canonical form and equal cycles merged.
  Potential(const Quiver& q, const std::vector<std::pair<Rational, std::vector<int>>>& terms);

  const std::vector<PotentialTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Potential&) const = default;

 private:
  std::vector<PotentialTerm> terms_;
};

std::vector<int> canonical_rotation(const std::vector<int>& cycle);

using Cut = std::set<int>;

struct QuiverWithPotential {
  Quiver quiver;
  Potential potential;
  std::optional<Cut> cut;
};

PathElement cyclic_derivative(const Quiver& q, const Potential& w, int a);
PresentedGradedAlgebra jacobian_algebra(const Quiver& q, const Potential& w, const std::optional<Cut>& cut);

struct CutCheck {
  bool ok = true;
  std::optional<std::size_t> offending_term;
};
CutCheck is_cut(const Potential& w, const Cut& d);

PresentedGradedAlgebra truncated_algebra(const Quiver& q, const Potential& w, const Cut& d);
BimoduleComplex dimer_bimodule_complex(const Quiver& q, const Potential& w, const Cut& d);

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

struct HypothesisReport {
  Finiteness a3;
  Tri a4_on_b = Tri::unknown;
  Tri a4_on_opposite = Tri::unknown;
  // Per vertex of e: no degree-0 arrow enters it (B) / leaves it (opposite). Informational.
  std::vector<std::pair<int, bool>> source_on_b;
  std::vector<std::pair<int, bool>> source_on_opposite;
  bool passes_on_b() const;
  bool passes_on_opposite() const;
  bool passes() const { return passes_on_b() || passes_on_opposite(); }
};

// e A (1-e) = 0 for the degree-zero part A of alg.
Tri degree_zero_corner_vanishes(const PresentedGradedAlgebra& alg, const std::set<int>& e, int cap);
HypothesisReport check_main_hypotheses(const PresentedGradedAlgebra& b, const std::set<int>& e, int cap = kDefaultCap);

}  // namespace cyqw
