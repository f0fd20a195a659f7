#include "cyqw/qp.hpp"

#include <algorithm>
#include <map>

namespace cyqw {

std::vector<int> canonical_rotation(const std::vector<int>& cycle) {
  std::vector<int> best = cycle;
  std::vector<int> cur = cycle;
  for (std::size_t k = 1; k < cycle.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

Potential::Potential(const Quiver& q, const std::vector<std::pair<Rational, std::vector<int>>>& terms) {
  std::map<std::vector<int>, Rational> acc;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& cyc = terms[t].second;
    if (cyc.empty()) throw InputError("potential term " + std::to_string(t) + " is empty");
    Path p = Path::from_arrows(q, cyc);
    if (p.source != p.target) throw InputError("potential term " + std::to_string(t) + " is not a cycle");
    acc[canonical_rotation(cyc)] += terms[t].first;
  }
  for (auto& [cyc, c] : acc)
    if (sgn(c) != 0) terms_.push_back(PotentialTerm{c, cyc});
}

PathElement cyclic_derivative(const Quiver& q, const Potential& w, int a) {
  PathElement r;
  for (const auto& t : w.terms()) {
    std::size_t len = t.cycle.size();
    for (std::size_t k = 0; k < len; ++k) {
      if (t.cycle[k] != a) continue;
      std::vector<int> rest;
      for (std::size_t m = 1; m < len; ++m) rest.push_back(t.cycle[(k + m) % len]);
      Path p = rest.empty() ? Path::trivial(q.arrow(a).target) : Path::from_arrows(q, rest);
      r.add(p, t.coef);
    }
  }
  return r;
}

PresentedGradedAlgebra jacobian_algebra(const Quiver& q, const Potential& w, const std::optional<Cut>& cut) {
  std::vector<Arrow> arrows = q.arrows();
  for (int a = 0; a < q.num_arrows(); ++a) arrows[a].degree = cut && cut->count(a) ? 1 : 0;
  Quiver graded(q.vertices(), arrows);
  std::vector<PathElement> rels;
  for (int a = 0; a < q.num_arrows(); ++a) {
    PathElement r = cyclic_derivative(graded, w, a);
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  return PresentedGradedAlgebra(std::move(graded), std::move(rels));
}

CutCheck is_cut(const Potential& w, const Cut& d) {
  CutCheck c;
  for (std::size_t t = 0; t < w.terms().size(); ++t) {
    int hits = 0;
    for (int a : w.terms()[t].cycle) hits += d.count(a) ? 1 : 0;
    if (hits != 1) {
      c.ok = false;
      c.offending_term = t;
      return c;
    }
  }
  return c;
}

PresentedGradedAlgebra truncated_algebra(const Quiver& q, const Potential& w, const Cut& d) {
  auto chk = is_cut(w, d);
  if (!chk.ok) throw InputError("arrow set is not a cut (potential term " + std::to_string(*chk.offending_term) + ")");
  PresentedGradedAlgebra b = jacobian_algebra(q, w, d);
  std::vector<PathElement> rels;
  for (int a : d) {
    PathElement r = cyclic_derivative(b.quiver(), w, a);
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  PresentedGradedAlgebra withd(b.quiver(), std::move(rels));
  return remove_arrows(withd, d, false);
}

BimoduleComplex dimer_bimodule_complex(const Quiver& q, const Potential& w, const Cut& d) {
  auto chk = is_cut(w, d);
  if (!chk.ok) throw InputError("arrow set is not a cut (potential term " + std::to_string(*chk.offending_term) + ")");
  PresentedGradedAlgebra b = jacobian_algebra(q, w, d);
  const Quiver& g = b.quiver();
  int nv = g.num_vertices(), na = g.num_arrows();
  std::vector<std::vector<Generator>> terms(4);
  for (int i = 0; i < nv; ++i) terms[0].push_back(Generator{i, i, 0, "e" + g.vertex_name(i)});
  for (int a = 0; a < na; ++a)
    terms[1].push_back(Generator{g.arrow(a).target, g.arrow(a).source, g.arrow(a).degree, g.arrow(a).name});
  for (int a = 0; a < na; ++a)
    terms[2].push_back(Generator{g.arrow(a).source, g.arrow(a).target, 1 - g.arrow(a).degree, g.arrow(a).name});
  for (int i = 0; i < nv; ++i) terms[3].push_back(Generator{i, i, 1, "e" + g.vertex_name(i)});
  std::vector<BimoduleComplex::Differential> diffs(4);
  for (int a = 0; a < na; ++a) {
    int s = g.arrow(a).source, t = g.arrow(a).target;
    diffs[1][{s, a}].add(Path::of_arrow(g, a), Path::trivial(s), 1);
    diffs[1][{t, a}].add(Path::trivial(t), Path::of_arrow(g, a), -1);
  }
  auto segment = [&](const std::vector<int>& seq, std::size_t from, std::size_t to, int at) {
    if (from == to) return Path::trivial(at);
    return Path::from_arrows(g, std::vector<int>(seq.begin() + from, seq.begin() + to));
  };
  for (const auto& term : w.terms()) {
    std::size_t len = term.cycle.size();
    for (std::size_t pb = 0; pb < len; ++pb) {
      int bb = term.cycle[pb];
      // Arrows applied after b, cyclically: q, a, p.
      std::vector<int> seq;
      for (std::size_t m = 1; m < len; ++m) seq.push_back(term.cycle[(pb + m) % len]);
      for (std::size_t m = 0; m < seq.size(); ++m) {
        int a = seq[m];
        Path qq = segment(seq, 0, m, g.arrow(bb).target);
        Path pp = segment(seq, m + 1, seq.size(), g.arrow(a).target);
        diffs[2][{a, bb}].add(pp, qq, term.coef);
      }
    }
  }
  for (int i = 0; i < nv; ++i) {
    for (int a = 0; a < na; ++a) {
      if (g.arrow(a).target == i) diffs[3][{a, i}].add(Path::of_arrow(g, a), Path::trivial(i), 1);
      if (g.arrow(a).source == i) diffs[3][{a, i}].add(Path::trivial(i), Path::of_arrow(g, a), -1);
    }
  }
  for (auto& dl : diffs)
    for (auto it = dl.begin(); it != dl.end();) it = it->second.is_zero() ? dl.erase(it) : std::next(it);
  return BimoduleComplex(std::move(b), std::move(terms), std::move(diffs));
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

bool HypothesisReport::passes_on_b() const {
  return a3.answer == Finiteness::Answer::yes && a4_on_b == Tri::yes;
}

bool HypothesisReport::passes_on_opposite() const {
  return a3.answer == Finiteness::Answer::yes && a4_on_opposite == Tri::yes;
}

Tri degree_zero_corner_vanishes(const PresentedGradedAlgebra& alg, const std::set<int>& e, int cap) {
  // A path from outside e into e crosses on some arrow; it suffices that every crossing degree-0 arrow is zero.
  const Quiver& q = alg.quiver();
  bool long_relations = true;
  for (const auto& r : alg.relations())
    for (const auto& [p, c] : r.terms()) long_relations = long_relations && p.length() >= 2;
  std::optional<GroebnerBasis> gb;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (ar.degree != 0 || e.count(ar.source) || !e.count(ar.target)) continue;
    if (long_relations) return Tri::no;
    if (!gb) gb = complete_groebner(alg, cap);
    if (!gb->certifies_grade(0)) return Tri::unknown;
    if (!gb->reduce(Path::of_arrow(q, a)).is_zero()) return Tri::no;
  }
  return Tri::yes;
}

HypothesisReport check_main_hypotheses(const PresentedGradedAlgebra& b, const std::set<int>& e, int cap) {
  const Quiver& q = b.quiver();
  if (e.empty() || static_cast<int>(e.size()) >= q.num_vertices())
    throw InputError("idempotent set must be a nonempty proper vertex subset");
  HypothesisReport r;
  r.a3 = is_finite_dimensional(quotient_by_vertices(b, e), cap);
  r.a4_on_b = degree_zero_corner_vanishes(b, e, cap);
  r.a4_on_opposite = degree_zero_corner_vanishes(opposite(b), e, cap);
  for (int v : e) {
    bool no_in = true, no_out = true;
    for (const auto& a : q.arrows()) {
      if (a.degree != 0) continue;
      if (a.target == v) no_in = false;
      if (a.source == v) no_out = false;
    }
    r.source_on_b.emplace_back(v, no_in);
    r.source_on_opposite.emplace_back(v, no_out);
  }
  return r;
}

}  // namespace cyqw
