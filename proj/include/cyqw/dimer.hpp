#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyqw/json_io.hpp"
#include "cyqw/lp.hpp"
#include "cyqw/qp.hpp"

namespace cyqw {

struct DimerEdge {
  std::string id;
  std::string white;
  std::string black;
};

struct DimerFace {
  std::string id;
  std::vector<std::string> edges;  // cyclic order along the boundary
};

struct DimerGraph {
  std::vector<std::string> white;
  std::vector<std::string> black;
  std::vector<DimerEdge> edges;
  std::vector<DimerFace> faces;

  int edge_index(const std::string& id) const;
};

struct DimerValidation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

DimerValidation validate_dimer(const DimerGraph& g);

DimerGraph dimer_from_json(const Json& doc);
Json dimer_to_json(const DimerGraph& g);

// Arrows are named after edges, vertices after faces. The white endpoint of each
// edge lies on the left of its arrow; flip yields the opposite quiver.
QuiverWithPotential dual_qp(const DimerGraph& g, bool flip = false);

using Matching = std::vector<int>;  // sorted edge indices
std::vector<Matching> perfect_matchings(const DimerGraph& g);
Cut matching_cut(const DimerGraph& g, const QuiverWithPotential& qp, const Matching& m);

struct ChargeResult {
  bool feasible = false;
  std::vector<Rational> charge;  // per arrow
  Rational margin;               // min over arrows
};

// Sum over each potential term is 2; sum of (1 - R) over arrows at each vertex is 2.
bool verify_charge(const QuiverWithPotential& qp, const std::vector<Rational>& r);
ChargeResult consistency_charge(const QuiverWithPotential& qp);

struct Theorem63Report {
  bool is_cut = false;
  Finiteness degree_zero;  // truncated algebra A
  HypothesisReport hypotheses;
  std::optional<bool> source_on_b;         // singleton e: vertex is a source of Q - D
  std::optional<bool> source_on_opposite;  // singleton e: vertex is a sink of Q - D
  bool passes() const;
};

Theorem63Report check_theorem_6_3(const DimerGraph& g, const std::vector<std::string>& cut_edges,
                                  const std::vector<std::string>& idem, int cap = kDefaultCap, bool flip = false);

}  // namespace cyqw
