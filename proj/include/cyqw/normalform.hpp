#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyqw/linalg.hpp"
#include "cyqw/pathalg.hpp"

namespace cyqw {

inline constexpr int kDefaultCap = 12;

// Prefix tree over arrow indices.
class WordTrie {
 public:
  explicit WordTrie(int alphabet = 0) : alphabet_(alphabet) { nodes_.emplace_back(alphabet_); }
  void insert(const std::vector<int>& word, int id);
  void erase(const std::vector<int>& word);
  // Leftmost, then shortest, occurrence of an inserted word as a factor: (position, id).
  std::optional<std::pair<std::size_t, int>> find_factor(const std::vector<int>& w) const;
  // Whether some inserted word is a prefix of w[from..].
  bool matches_at(const std::vector<int>& w, std::size_t from) const;

 private:
  struct Node {
    explicit Node(int alphabet) : next(alphabet, -1) {}
    std::vector<int> next;
    int id = -1;
  };
  int alphabet_;
  std::vector<Node> nodes_;
};

class GroebnerBasis {
 public:
  enum class Status { complete, truncated };

  GroebnerBasis(PresentedGradedAlgebra alg, std::vector<PathElement> elements, Status status, int cap,
                std::optional<int> unresolved_degree);

  const PresentedGradedAlgebra& algebra() const { return alg_; }
  const Quiver& quiver() const { return alg_.quiver(); }
  const std::vector<PathElement>& elements() const { return elements_; }
  Status status() const { return status_; }
  bool complete() const { return status_ == Status::complete; }
  int cap() const { return cap_; }
  // Smallest grading degree among unresolved ambiguities.
  std::optional<int> unresolved_degree() const { return unresolved_degree_; }
  bool certifies_grade(int grade) const;
  std::size_t max_leading_length() const;

  PathElement reduce(const PathElement& x) const;
  PathElement reduce(const Path& p) const { return reduce(PathElement(p)); }
  bool is_normal(const Path& p) const;
  // Normality of w given that w minus its last arrow is normal.
  bool extends_normally(const std::vector<int>& w) const;

 private:
  PresentedGradedAlgebra alg_;
  std::vector<PathElement> elements_;
  Status status_;
  int cap_;
  std::optional<int> unresolved_degree_;
  WordTrie trie_;
  WordTrie reversed_;
};

GroebnerBasis complete_groebner(const PresentedGradedAlgebra& alg, int cap = kDefaultCap);
PathElement normal_form(const PathElement& x, const GroebnerBasis& gb);

// Graph on normal words of length k = max(L-1, 0), L the longest leading path.
class NormalWordAutomaton {
 public:
  struct Edge {
    int to;
    int arrow;
  };

  explicit NormalWordAutomaton(const GroebnerBasis& gb, std::size_t state_limit = 2000000);

  std::size_t state_length() const { return k_; }
  const std::vector<Path>& states() const { return states_; }
  const std::vector<Path>& short_words() const { return short_; }
  const std::vector<std::vector<Edge>>& edges() const { return edges_; }
  bool has_cycle() const;
  bool has_zero_degree_cycle() const;
  // Topological order of the degree-zero edge subgraph (requires no such cycle).
  std::vector<int> zero_degree_order() const;

 private:
  const Quiver* quiver_;
  std::size_t k_ = 0;
  std::vector<Path> states_;
  std::vector<Path> short_;
  std::vector<std::vector<Edge>> edges_;
};

struct Corner {
  int end;    // i
  int start;  // j: paths from j to i
};

// counts[g][i][j]: normal words of grade g from j to i; nullopt when uncertifiable.
std::optional<std::vector<std::vector<std::vector<Integer>>>> graded_counts(const GroebnerBasis& gb, int max_grade);

std::optional<Integer> graded_dimension(const GroebnerBasis& gb, std::optional<Corner> corner, int grade);
std::optional<Integer> graded_dimension(const PresentedGradedAlgebra& alg, std::optional<Corner> corner, int grade,
                                        int cap = kDefaultCap);

struct Finiteness {
  enum class Answer { yes, no, unknown };
  Answer answer = Answer::unknown;
  Integer dimension;  // valid when answer == yes
  int cap = 0;
};

Finiteness is_finite_dimensional(const GroebnerBasis& gb);
Finiteness is_finite_dimensional(const PresentedGradedAlgebra& alg, int cap = kDefaultCap);

struct HilbertSeries {
  std::vector<std::optional<Integer>> dims;
  std::optional<std::pair<Polynomial, Polynomial>> rational;  // numerator, denominator
};

HilbertSeries hilbert_series(const GroebnerBasis& gb, int max_grade, std::size_t rational_state_limit = 64);
HilbertSeries hilbert_series(const PresentedGradedAlgebra& alg, int max_grade, int cap = kDefaultCap);

// All normal words with grade <= max_grade, grouped by grade; requires certification.
std::vector<std::vector<Path>> normal_words_by_grade(const GroebnerBasis& gb, int max_grade);
// All normal words (finite-dimensional case).
std::vector<Path> all_normal_words(const GroebnerBasis& gb);

}  // namespace cyqw
