#pragma once

#include <string>
#include <vector>

#include "cyqw/complex.hpp"
#include "cyqw/pathalg.hpp"

namespace cyqw {

struct McKayInput {
  int n = 0;
  std::vector<int> a;
};

struct WeightReport {
  bool ok = true;
  std::vector<std::string> violations;
};

WeightReport validate_weights(const McKayInput& in);
// Name of x_j from vertex i (j is 1-based).
std::string mckay_arrow_name(int j, int i);

PresentedGradedAlgebra mckay_algebra(const McKayInput& in);
PresentedGradedAlgebra degree_zero_part_mckay(const PresentedGradedAlgebra& b);
PresentedGradedAlgebra stable_algebra(const PresentedGradedAlgebra& alg);

// Wedge generators at homological degree l: strictly increasing 0-based tuples and a start vertex.
struct KoszulGenerator {
  int start;
  std::vector<int> tuple;
  int end;
  int twist;
};
std::vector<KoszulGenerator> koszul_basis(const McKayInput& in, int l);
BimoduleComplex koszul_complex(const McKayInput& in);

Integer invariant_monomial_count(const McKayInput& in, int i, int j, int l);

}  // namespace cyqw
