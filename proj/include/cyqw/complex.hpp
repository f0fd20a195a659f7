#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyqw/pathalg.hpp"

namespace cyqw {

// Generator of B e_left ⊗ e_right B, shifted to sit in degree `twist`.
struct Generator {
  int left = 0;
  int right = 0;
  int twist = 0;
  std::string label;
  auto operator<=>(const Generator& o) const {
    return std::tie(left, right, twist) <=> std::tie(o.left, o.right, o.twist);
  }
  bool operator==(const Generator& o) const {
    return left == o.left && right == o.right && twist == o.twist;
  }
};

// Finite sum of left ⊗ right path pairs.
class TensorElement {
 public:
  using Key = std::pair<Path, Path>;
  void add(const Path& left, const Path& right, const Rational& c);
  void add(const TensorElement& o, const Rational& s = 1);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const TensorElement& o) const = default;

 private:
  std::map<Key, Rational> terms_;
};

class BimoduleComplex {
 public:
  // d[l] maps term l to term l-1; entry (row, col) = (generator of term l-1, generator of term l).
  using Differential = std::map<std::pair<int, int>, TensorElement>;

  BimoduleComplex() = default;
  BimoduleComplex(PresentedGradedAlgebra alg, std::vector<std::vector<Generator>> terms,
                  std::vector<Differential> diffs);

  const PresentedGradedAlgebra& algebra() const { return alg_; }
  std::size_t length() const { return terms_.size(); }
  const std::vector<Generator>& term(std::size_t l) const { return terms_[l]; }
  const std::vector<std::vector<Generator>>& terms() const { return terms_; }
  // diffs()[l] for l >= 1; diffs()[0] is empty.
  const std::vector<Differential>& diffs() const { return diffs_; }
  std::vector<Differential>& mutable_diffs() { return diffs_; }
  std::vector<int> ranks() const;

  // First n terms only.
  BimoduleComplex truncated(std::size_t n) const;

 private:
  PresentedGradedAlgebra alg_;
  std::vector<std::vector<Generator>> terms_;
  std::vector<Differential> diffs_;
};

}  // namespace cyqw
