#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cyqw/rational.hpp"

namespace cyqw {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  int degree = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::string& vertex_name(int v) const { return vertices_[v]; }

  int vertex_index(std::string_view id) const;
  int arrow_index(std::string_view name) const;
  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_arrow(std::string_view name) const;

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_into(int v) const;

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

// Arrows are stored in application order: arrows[0] is applied first.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a);
  static Path from_arrows(const Quiver& q, const std::vector<int>& arrows);

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  bool operator==(const Path&) const = default;
  // Length first, then lexicographic on arrow indices, then endpoints.
  std::strong_ordering operator<=>(const Path& o) const;
};

int degree(const Quiver& q, const Path& p);
// The path "q then p" if source(p) = target(q).
std::optional<Path> compose(const Path& p, const Path& q);
// The path "first then second"; caller guarantees composability.
Path concat(const Path& first, const Path& second);
bool is_valid_path(const Quiver& q, const Path& p);

class PathElement {
 public:
  using Terms = std::map<Path, Rational>;

  PathElement() = default;
  explicit PathElement(const Path& p, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Path& p, const Rational& c);
  // Largest path in the canonical order.
  const Path& leading() const { return terms_.rbegin()->first; }
  const Rational& leading_coef() const { return terms_.rbegin()->second; }
  Rational coeff(const Path& p) const;

  PathElement operator+(const PathElement& o) const;
  PathElement operator-(const PathElement& o) const;
  PathElement operator*(const Rational& s) const;
  PathElement& operator+=(const PathElement& o);
  PathElement& operator-=(const PathElement& o);
  bool operator==(const PathElement& o) const = default;

 private:
  Terms terms_;
};

// Bilinear extension of compose: x*y means y first, then x.
PathElement multiply(const PathElement& x, const PathElement& y);
// Multiply by paths on both sides: left_first then x then right_after.
PathElement sandwich(const Path& before, const PathElement& x, const Path& after);

class PresentedGradedAlgebra {
 public:
  PresentedGradedAlgebra() = default;
  PresentedGradedAlgebra(Quiver quiver, std::vector<PathElement> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<PathElement>& relations() const { return relations_; }
  bool operator==(const PresentedGradedAlgebra& o) const = default;

 private:
  Quiver quiver_;
  std::vector<PathElement> relations_;
};

PresentedGradedAlgebra opposite(const PresentedGradedAlgebra& alg);
PresentedGradedAlgebra quotient_by_vertices(const PresentedGradedAlgebra& alg, const std::set<int>& kill);
PresentedGradedAlgebra quotient_by_vertices(const PresentedGradedAlgebra& alg, const std::vector<std::string>& kill);
// Keeps only the listed arrows (indices), relations projected to terms that survive.
PresentedGradedAlgebra remove_arrows(const PresentedGradedAlgebra& alg, const std::set<int>& drop,
                                     bool drop_mixed_relations);
PresentedGradedAlgebra with_degrees(const PresentedGradedAlgebra& alg, const std::vector<int>& degrees);

std::string path_to_string(const Quiver& q, const Path& p);
std::string element_to_string(const Quiver& q, const PathElement& x);

}  // namespace cyqw
