#include "cyqw/cycheck.hpp"

#include "cyqw/mckay.hpp"
#include "cyqw/qp.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cyqw;

namespace {

Integer lattice_total(const McKayInput& in, int l) {
  Integer s = 0;
  for (int i = 0; i < in.n; ++i)
    for (int j = 0; j < in.n; ++j) s += invariant_monomial_count(in, i, j, l);
  return s;
}

}  // namespace

TEST_CASE("Koszul complex of 1/3(1,1,1) is a resolution in low degrees") {
  McKayInput in{3, {1, 1, 1}};
  BimoduleComplex p = koszul_complex(in);
  GroebnerBasis gb = complete_groebner(p.algebra());
  ComplexReport r = verify_complex(p, gb, 3);
  CHECK(r.squares_to_zero);
  CHECK(r.exact);
  REQUIRE(r.pieces.size() == 4);
  for (const auto& pc : r.pieces) {
    CHECK(pc.ok);
    CHECK(pc.algebra_dim == lattice_total(in, pc.degree));
    CHECK(pc.homology[0] == pc.algebra_dim);
    for (std::size_t l = 1; l < pc.homology.size(); ++l) CHECK(pc.homology[l] == 0);
  }
  CHECK(verify_self_duality(p, 3).ok);
}

TEST_CASE("sign sabotage in the middle differential is detected") {
  BimoduleComplex p = koszul_complex({5, {1, 2, 2}});
  auto& d2 = p.mutable_diffs()[2];
  REQUIRE(!d2.empty());
  TensorElement& entry = d2.begin()->second;
  TensorElement neg;
  for (const auto& [k, c] : entry.terms()) neg.add(k.first, k.second, -c);
  entry = neg;
  GroebnerBasis gb = complete_groebner(p.algebra());
  ComplexReport r = verify_complex(p, gb, 1);
  CHECK_FALSE(r.squares_to_zero);
  CHECK(r.offending_entry.has_value());
  CHECK_FALSE(r.passed());
}

TEST_CASE("composite differential vanishes entrywise for the Koszul complex") {
  BimoduleComplex p = koszul_complex({5, {1, 2, 2}});
  GroebnerBasis gb = complete_groebner(p.algebra());
  for (std::size_t l = 2; l < p.length(); ++l)
    for (const auto& [pos, x] : compose_differentials(p, l)) CHECK(reduce_tensor(x, gb).is_zero());
}

TEST_CASE("incomplete basis is refused") {
  BimoduleComplex p = koszul_complex({3, {1, 1, 1}});
  GroebnerBasis gb = complete_groebner(p.algebra(), 2);
  REQUIRE_FALSE(gb.complete());
  CHECK_THROWS_AS(verify_complex(p, gb, 1), Refusal);
  GroebnerBasis other = complete_groebner(koszul_complex({5, {1, 2, 2}}).algebra());
  CHECK_THROWS_AS(verify_complex(p, other, 1), Refusal);
}

TEST_CASE("dimer complex of the first example") {
  QuiverWithPotential qp = qp_from_json(read_json_file(test::data_path("ex1_qp.json")));
  BimoduleComplex p = dimer_bimodule_complex(qp.quiver, qp.potential, *qp.cut);
  CHECK(p.ranks() == std::vector<int>{4, 8, 8, 4});
  GroebnerBasis gb = complete_groebner(p.algebra());
  ComplexReport r = verify_complex(p, gb, 2);
  CHECK(r.passed());
  CHECK(verify_self_duality(p, 3).ok);
}

TEST_CASE("truncating the complex breaks exactness and duality") {
  BimoduleComplex p = koszul_complex({3, {1, 1, 1}}).truncated(3);
  GroebnerBasis gb = complete_groebner(p.algebra());
  ComplexReport r = verify_complex(p, gb, 1);
  CHECK(r.squares_to_zero);
  CHECK_FALSE(r.exact);
  DualityReport d = verify_self_duality(p, 3);
  CHECK_FALSE(d.ok);
  CHECK_FALSE(d.mismatches.empty());
}

TEST_CASE("wrong dimension breaks self-duality") {
  BimoduleComplex p = koszul_complex({5, {1, 2, 2}});
  CHECK(verify_self_duality(p, 3).ok);
  CHECK_FALSE(verify_self_duality(p, 2).ok);
}
