#include "cyqw/dimer.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace cyqw;

namespace {

DimerGraph load(const char* name) { return dimer_from_json(read_json_file(test::data_path(name))); }
QuiverWithPotential load_qp(const char* name) { return qp_from_json(read_json_file(test::data_path(name))); }

bool same_up_to_flip(const QuiverWithPotential& x, const QuiverWithPotential& y) {
  test::QpShape sx = test::shape_of(x), sy = test::shape_of(y);
  return test::qp_isomorphic(sx, sy) || test::qp_isomorphic(test::flipped(sx), sy);
}

std::vector<Matching> brute_matchings(const DimerGraph& g) {
  std::vector<Matching> out;
  std::size_t ne = g.edges.size();
  for (unsigned long mask = 0; mask < (1UL << ne); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != g.white.size()) continue;
    std::map<std::string, int> wc, bc;
    Matching m;
    for (std::size_t e = 0; e < ne; ++e)
      if (mask >> e & 1) {
        ++wc[g.edges[e].white];
        ++bc[g.edges[e].black];
        m.push_back(static_cast<int>(e));
      }
    bool ok = wc.size() == g.white.size() && bc.size() == g.black.size();
    for (auto& [k, v] : wc) ok = ok && v == 1;
    for (auto& [k, v] : bc) ok = ok && v == 1;
    if (ok) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validation reports structural problems") {
  DimerGraph g = load("hexagonal_dimer.json");
  CHECK(validate_dimer(g).ok());
  DimerGraph odd = g;
  odd.faces[0].edges.pop_back();
  CHECK_FALSE(validate_dimer(odd).ok());
  DimerGraph unknown = g;
  unknown.faces[0].edges[0] = "q";
  CHECK_FALSE(validate_dimer(unknown).ok());
  DimerGraph colour = g;
  colour.edges[0].white = "b";
  CHECK_FALSE(validate_dimer(colour).ok());
  DimerGraph sphere = g;
  sphere.faces = {{"0", {"x", "y"}}, {"1", {"y", "z"}}, {"2", {"z", "x"}}};
  DimerValidation v = validate_dimer(sphere);
  CHECK_FALSE(v.ok());
  CHECK(v.violations.back().find("Euler") != std::string::npos);
  CHECK_THROWS_AS(dual_qp(sphere), InputError);
}

TEST_CASE("dimer json parsing") {
  CHECK_THROWS_AS(dimer_from_json(parse_json_text(R"({"white":[],"black":[]})")), InputError);
  DimerGraph g = dimer_from_json(parse_json_text(
      R"({"white":["w"],"black":["b"],"edges":[{"id":"x","white":"w","black":"b"},{"id":"y","white":"w","black":"b"},
      {"id":"z","white":"w","black":"b"}],"faces":[["x","y","z","x","y","z"]]})"));
  CHECK(g.faces[0].id == "1");
  for (const char* f : {"ex1_dimer.json", "ex2_dimer.json", "hexagonal_dimer.json", "digon_dimer.json"}) {
    DimerGraph d = load(f);
    std::string text = dimer_to_json(d).dump();
    CHECK(dimer_to_json(dimer_from_json(parse_json_text(text))).dump() == text);
  }
}

TEST_CASE("hexagonal dimer dualizes to three loops") {
  QuiverWithPotential qp = dual_qp(load("hexagonal_dimer.json"));
  CHECK(qp.quiver.num_vertices() == 1);
  CHECK(qp.quiver.num_arrows() == 3);
  REQUIRE(qp.potential.terms().size() == 2);
  CHECK(qp.potential.terms()[0].coef + qp.potential.terms()[1].coef == 0);
  for (const auto& t : qp.potential.terms()) CHECK(t.cycle.size() == 3);
}

TEST_CASE("first example dual matches the reference quiver with potential") {
  QuiverWithPotential qp = dual_qp(load("ex1_dimer.json"));
  CHECK(qp.quiver.num_vertices() == 4);
  CHECK(qp.quiver.num_arrows() == 8);
  CHECK(qp.potential.terms().size() == 4);
  CHECK(same_up_to_flip(qp, load_qp("ex1_qp.json")));
  QuiverWithPotential flipped = dual_qp(load("ex1_dimer.json"), true);
  CHECK(same_up_to_flip(flipped, load_qp("ex1_qp.json")));
  for (int a = 0; a < 8; ++a) {
    CHECK(flipped.quiver.arrow(a).source == qp.quiver.arrow(a).target);
    CHECK(flipped.quiver.arrow(a).target == qp.quiver.arrow(a).source);
  }
}

TEST_CASE("second example dual matches the reference quiver with potential") {
  QuiverWithPotential qp = dual_qp(load("ex2_dimer.json"));
  CHECK(qp.quiver.num_vertices() == 6);
  CHECK(qp.quiver.num_arrows() == 12);
  std::map<std::size_t, int> lengths;
  for (const auto& t : qp.potential.terms()) ++lengths[t.cycle.size()];
  CHECK(lengths == std::map<std::size_t, int>{{3, 2}, {4, 3}, {6, 1}});
  CHECK(same_up_to_flip(qp, load_qp("ex2_qp.json")));
}

TEST_CASE("isomorphism oracle rejects a perturbed potential") {
  QuiverWithPotential qp = load_qp("ex1_qp.json");
  QuiverWithPotential other = qp;
  auto terms = qp.potential.terms();
  std::vector<std::pair<Rational, std::vector<int>>> raw;
  for (const auto& t : terms) raw.emplace_back(t.coef, t.cycle);
  raw[0].first = -raw[0].first;
  other.potential = Potential(qp.quiver, raw);
  CHECK_FALSE(same_up_to_flip(qp, other));
}

TEST_CASE("perfect matchings and cuts") {
  struct Case {
    const char* file;
    std::size_t count;
  };
  for (Case c : {Case{"ex1_dimer.json", 8}, Case{"ex2_dimer.json", 12}, Case{"hexagonal_dimer.json", 3},
                 Case{"digon_dimer.json", 4}}) {
    DimerGraph g = load(c.file);
    QuiverWithPotential qp = dual_qp(g);
    auto ms = perfect_matchings(g);
    CHECK(ms.size() == c.count);
    CHECK(ms == brute_matchings(g));
    for (const auto& m : ms) CHECK(is_cut(qp.potential, matching_cut(g, qp, m)).ok);
  }
}

TEST_CASE("consistency charges") {
  ChargeResult ex1 = consistency_charge(dual_qp(load("ex1_dimer.json")));
  REQUIRE(ex1.feasible);
  for (const auto& r : ex1.charge) CHECK(r == Rational(1, 2));
  ChargeResult hex = consistency_charge(dual_qp(load("hexagonal_dimer.json")));
  REQUIRE(hex.feasible);
  for (const auto& r : hex.charge) CHECK(r == Rational(2, 3));
  QuiverWithPotential ex2 = dual_qp(load("ex2_dimer.json"));
  ChargeResult c2 = consistency_charge(ex2);
  REQUIRE(c2.feasible);
  CHECK(verify_charge(ex2, c2.charge));
  CHECK(c2.margin > 0);
  CHECK_FALSE(consistency_charge(dual_qp(load("digon_dimer.json"))).feasible);
}

TEST_CASE("charge verification rejects wrong witnesses") {
  QuiverWithPotential qp = dual_qp(load("ex1_dimer.json"));
  std::vector<Rational> r(8, Rational(1, 2));
  CHECK(verify_charge(qp, r));
  r[0] = Rational(1, 3);
  CHECK_FALSE(verify_charge(qp, r));
  CHECK_FALSE(verify_charge(qp, std::vector<Rational>(8, 0)));
}

TEST_CASE("singleton check on the first example") {
  Theorem63Report r = check_theorem_6_3(load("ex1_dimer.json"), {"x1", "x2"}, {"1"}, kDefaultCap, true);
  CHECK(r.is_cut);
  CHECK(r.degree_zero.answer == Finiteness::Answer::yes);
  CHECK(r.passes());
  CHECK_THROWS_AS(check_theorem_6_3(load("ex1_dimer.json"), {"x1", "y1"}, {"1"}), InputError);
}

TEST_CASE("two-vertex check on the second example") {
  Theorem63Report r = check_theorem_6_3(load("ex2_dimer.json"), {"a16", "a26", "a15"}, {"1", "2"}, kDefaultCap, true);
  CHECK(r.is_cut);
  REQUIRE(r.degree_zero.answer == Finiteness::Answer::yes);
  CHECK(r.degree_zero.dimension == 41);
  CHECK(r.passes());
}

TEST_CASE("property: matching enumeration agrees with subset search (1000 cases)") {
  auto g = test::rng_for(7);
  int failures = 0;
  for (int k = 0; k < 1000; ++k) {
    int n = test::uniform(g, 1, 4), ne = test::uniform(g, 0, 9);
    DimerGraph d;
    for (int i = 0; i < n; ++i) {
      d.white.push_back("w" + std::to_string(i));
      d.black.push_back("b" + std::to_string(i));
    }
    for (int e = 0; e < ne; ++e)
      d.edges.push_back({"e" + std::to_string(e), d.white[test::uniform(g, 0, n - 1)], d.black[test::uniform(g, 0, n - 1)]});
    if (perfect_matchings(d) != brute_matchings(d)) ++failures;
  }
  CHECK(failures == 0);
}
