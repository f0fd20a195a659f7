#include "cyqw/normalform.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace cyqw;

namespace {

PresentedGradedAlgebra polynomial_ring() {
  Quiver q({"o"}, {{"x", 0, 0, 1}, {"y", 0, 0, 1}});
  PathElement r(Path::from_arrows(q, {0, 1}));
  r.add(Path::from_arrows(q, {1, 0}), -1);
  return PresentedGradedAlgebra(q, {r});
}

PresentedGradedAlgebra exterior_algebra() {
  Quiver q({"o"}, {{"x", 0, 0, 1}, {"y", 0, 0, 1}});
  PathElement anti(Path::from_arrows(q, {0, 1}));
  anti.add(Path::from_arrows(q, {1, 0}), 1);
  return PresentedGradedAlgebra(q, {PathElement(Path::from_arrows(q, {0, 0})), PathElement(Path::from_arrows(q, {1, 1})), anti});
}

// Positive braid monoid on two generators; its deglex basis is infinite.
PresentedGradedAlgebra braid() {
  Quiver q({"o"}, {{"x", 0, 0, 1}, {"y", 0, 0, 1}});
  PathElement r(Path::from_arrows(q, {0, 1, 0}));
  r.add(Path::from_arrows(q, {1, 0, 1}), -1);
  return PresentedGradedAlgebra(q, {r});
}

}  // namespace

TEST_CASE("polynomial ring in two variables") {
  PresentedGradedAlgebra alg = polynomial_ring();
  GroebnerBasis gb = complete_groebner(alg);
  CHECK(gb.complete());
  for (int g = 0; g <= 6; ++g) CHECK(*graded_dimension(gb, std::nullopt, g) == g + 1);
  Finiteness f = is_finite_dimensional(gb);
  CHECK(f.answer == Finiteness::Answer::no);
  HilbertSeries hs = hilbert_series(gb, 6);
  REQUIRE(hs.rational);
  // 1/(1-t)^2
  CHECK(hs.rational->first == Polynomial::constant(1));
  CHECK(hs.rational->second == Polynomial({1, -2, 1}));
}

TEST_CASE("exterior algebra is four dimensional") {
  GroebnerBasis gb = complete_groebner(exterior_algebra());
  Finiteness f = is_finite_dimensional(gb);
  REQUIRE(f.answer == Finiteness::Answer::yes);
  CHECK(f.dimension == 4);
  CHECK(all_normal_words(gb).size() == 4);
  CHECK(*graded_dimension(gb, std::nullopt, 2) == 1);
  CHECK(*graded_dimension(gb, std::nullopt, 3) == 0);
}

TEST_CASE("path algebra of A2 has dimension 3 and separate corners") {
  Quiver q({"1", "2"}, {{"a", 0, 1, 0}});
  PresentedGradedAlgebra alg(q, {});
  GroebnerBasis gb = complete_groebner(alg);
  Finiteness f = is_finite_dimensional(gb);
  REQUIRE(f.answer == Finiteness::Answer::yes);
  CHECK(f.dimension == 3);
  CHECK(*graded_dimension(gb, Corner{1, 0}, 0) == 1);
  CHECK(*graded_dimension(gb, Corner{0, 1}, 0) == 0);
  CHECK(*graded_dimension(gb, Corner{0, 0}, 0) == 1);
}

TEST_CASE("degree-zero loop makes graded pieces infinite") {
  Quiver q({"o"}, {{"c", 0, 0, 0}});
  GroebnerBasis gb = complete_groebner(PresentedGradedAlgebra(q, {}));
  CHECK_FALSE(graded_dimension(gb, std::nullopt, 0).has_value());
  CHECK(is_finite_dimensional(gb).answer == Finiteness::Answer::no);
}

TEST_CASE("completion beyond the cap is reported as truncated") {
  GroebnerBasis gb = complete_groebner(braid(), 6);
  CHECK_FALSE(gb.complete());
  REQUIRE(gb.unresolved_degree());
  CHECK(*gb.unresolved_degree() > 3);
  CHECK(is_finite_dimensional(gb).answer == Finiteness::Answer::unknown);
  for (int g = 0; g <= 4; ++g) {
    auto d = graded_dimension(gb, std::nullopt, g);
    if (g < *gb.unresolved_degree()) {
      REQUIRE(d.has_value());
      CHECK(*d == test::oracle_length_dim(braid(), g));
    }
  }
  CHECK_FALSE(graded_dimension(gb, std::nullopt, *gb.unresolved_degree()).has_value());
}

TEST_CASE("reduction against a truncated basis still lands in the ideal class") {
  GroebnerBasis gb = complete_groebner(braid(), 5);
  const Quiver& q = gb.quiver();
  PathElement w(Path::from_arrows(q, {0, 1, 0, 0}));
  PathElement v(Path::from_arrows(q, {1, 0, 1, 0}));
  CHECK(normal_form(w - v, gb).is_zero());
}

TEST_CASE("word trie finds the leftmost factor") {
  WordTrie t(3);
  t.insert({1, 2}, 7);
  t.insert({0}, 3);
  auto f = t.find_factor({2, 1, 2, 0});
  REQUIRE(f);
  CHECK(f->first == 1);
  CHECK(f->second == 7);
  CHECK(t.matches_at({2, 0}, 1));
  t.erase({0});
  CHECK_FALSE(t.find_factor({2, 0}).has_value());
}

TEST_CASE("property: normal forms are idempotent and kill the ideal (1000 cases)") {
  auto g = test::rng_for(3);
  int failures = 0, complete = 0;
  for (int k = 0; k < 1000; ++k) {
    Quiver q = test::random_quiver(g, 3, 5, false, 0);
    std::vector<Arrow> as = q.arrows();
    for (auto& a : as) a.degree = 1;
    q = Quiver(q.vertices(), as);
    std::vector<PathElement> rels;
    for (int r = 0; r < 3; ++r) {
      PathElement x = test::random_relation(g, q, 4, 3);
      if (!x.is_zero()) rels.push_back(x);
    }
    PresentedGradedAlgebra alg(q, rels);
    GroebnerBasis gb = complete_groebner(alg, 7);
    complete += gb.complete() ? 1 : 0;
    PathElement x = test::random_element(g, q, 4, 4);
    PathElement nf = normal_form(x, gb);
    if (normal_form(nf, gb) != nf) ++failures;
    for (const auto& [p, c] : nf.terms())
      if (!gb.is_normal(p)) ++failures;
    for (const PathElement& r : rels) {
      Path u = test::random_path(g, q, 2);
      Path v = test::random_path(g, q, 2);
      if (u.source == r.leading().target && v.target == r.leading().source)
        if (!normal_form(sandwich(v, r, u), gb).is_zero()) ++failures;
    }
  }
  CHECK(failures == 0);
  CHECK(complete > 900);
}

TEST_CASE("property: certified graded dimensions match direct linear algebra (1000 cases)") {
  auto g = test::rng_for(4);
  int failures = 0, certified = 0;
  for (int k = 0; k < 1000; ++k) {
    Quiver q = test::random_quiver(g, 3, 4, false, 0);
    std::vector<Arrow> as = q.arrows();
    for (auto& a : as) a.degree = 1;
    q = Quiver(q.vertices(), as);
    std::vector<PathElement> rels;
    for (int r = 0; r < 2; ++r) {
      PathElement x = test::random_relation(g, q, 4, 2);
      if (!x.is_zero()) rels.push_back(x);
    }
    PresentedGradedAlgebra alg(q, rels);
    GroebnerBasis gb = complete_groebner(alg, 6);
    int grade = test::uniform(g, 0, 3);
    int i = test::uniform(g, 0, q.num_vertices() - 1), j = test::uniform(g, 0, q.num_vertices() - 1);
    auto d = graded_dimension(gb, Corner{i, j}, grade);
    if (!d) continue;
    ++certified;
    if (*d != test::oracle_length_dim(alg, grade, i, j)) ++failures;
  }
  CHECK(failures == 0);
  CHECK(certified > 900);
}
