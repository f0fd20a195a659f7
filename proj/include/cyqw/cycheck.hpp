#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyqw/complex.hpp"
#include "cyqw/normalform.hpp"

namespace cyqw {

struct DegreePiece {
  int degree = 0;
  std::vector<std::size_t> dims;      // per homological position
  std::vector<std::size_t> ranks;     // ranks[l] = rank of d_l, ranks[0] = 0
  std::vector<std::size_t> homology;  // per homological position
  Integer algebra_dim;                // dim B_degree
  std::size_t blocks = 0;
  bool ok = false;
};

struct ComplexReport {
  bool squares_to_zero = true;
  std::optional<std::string> offending_entry;
  std::vector<DegreePiece> pieces;
  bool exact = true;
  bool passed() const { return squares_to_zero && exact; }
};

// Reduces both legs to normal form.
TensorElement reduce_tensor(const TensorElement& x, const GroebnerBasis& gb);
// d_{l-1} ∘ d_l, entry (row in term l-2, column in term l).
BimoduleComplex::Differential compose_differentials(const BimoduleComplex& p, std::size_t l);

ComplexReport verify_complex(const BimoduleComplex& p, const GroebnerBasis& gb, int degcap);

struct DualityReport {
  bool ok = true;
  std::vector<std::string> mismatches;
};

DualityReport verify_self_duality(const BimoduleComplex& p, int d);

}  // namespace cyqw
