// One line per acceptance criterion; exit status is nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "cyqw/cycheck.hpp"
#include "cyqw/dimer.hpp"
#include "cyqw/mckay.hpp"
#include "cyqw/repthy.hpp"
#include "support.hpp"

using namespace cyqw;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

const std::vector<McKayInput> kMcKay{{5, {1, 2, 2}}, {5, {3, 1, 1}}, {3, {1, 1, 1}}, {7, {1, 2, 4}}};

std::string label(const McKayInput& in) {
  std::string s = std::to_string(in.n) + ",(";
  for (std::size_t j = 0; j < in.a.size(); ++j) s += (j ? "," : "") + std::to_string(in.a[j]);
  return s + ")";
}

PresentedGradedAlgebra abar(const McKayInput& in) { return degree_zero_part_mckay(stable_algebra(mckay_algebra(in))); }

using Edges = std::multiset<std::tuple<std::string, std::string, std::string>>;
Edges edges(const Quiver& q) {
  Edges out;
  for (const auto& a : q.arrows())
    out.insert({q.vertex_name(a.source), q.vertex_name(a.target), a.name.substr(0, a.name.find('_'))});
  return out;
}

QuiverWithPotential load_qp(const char* f) { return qp_from_json(read_json_file(test::data_path(f))); }
DimerGraph load_dimer(const char* f) { return dimer_from_json(read_json_file(test::data_path(f))); }

Integer lattice_total(const McKayInput& in, int l) {
  Integer s = 0;
  for (int i = 0; i < in.n; ++i)
    for (int j = 0; j < in.n; ++j) s += invariant_monomial_count(in, i, j, l);
  return s;
}

void presentation(Verdict& v) {
  McKayInput in{5, {1, 2, 2}};
  PresentedGradedAlgebra b = mckay_algebra(in);
  Edges wb;
  for (int i = 0; i < 5; ++i) {
    wb.insert({std::to_string(i), std::to_string((i + 1) % 5), "x1"});
    wb.insert({std::to_string(i), std::to_string((i + 2) % 5), "x2"});
    wb.insert({std::to_string(i), std::to_string((i + 2) % 5), "x3"});
  }
  v.require(edges(b.quiver()) == wb && b.relations().size() == 15, "B(5,(1,2,2))");
  PresentedGradedAlgebra a = degree_zero_part_mckay(b);
  Edges wa{{"0", "1", "x1"}, {"1", "2", "x1"}, {"2", "3", "x1"}, {"3", "4", "x1"}, {"0", "2", "x2"},
           {"0", "2", "x3"}, {"2", "4", "x2"}, {"2", "4", "x3"}, {"1", "3", "x2"}, {"1", "3", "x3"}};
  v.require(edges(a.quiver()) == wa && a.relations().size() == 5, "A(5,(1,2,2))");
  PresentedGradedAlgebra ab = abar(in);
  Edges wab{{"1", "2", "x1"}, {"2", "3", "x1"}, {"3", "4", "x1"}, {"2", "4", "x2"},
            {"2", "4", "x3"}, {"1", "3", "x2"}, {"1", "3", "x3"}};
  v.require(edges(ab.quiver()) == wab && ab.relations().size() == 2, "Abar(5,(1,2,2))");
  v.notes << "B 5v/15a/15r, A 10a/5r, Abar 4v/7a/2r;";
  for (int n = 2; n <= 6; ++n) {
    PresentedGradedAlgebra lin = abar({n, {1, n - 1}});
    bool ok = lin.quiver().num_vertices() == n - 1 && lin.quiver().num_arrows() == n - 2 && lin.relations().empty();
    for (const auto& ar : lin.quiver().arrows())
      ok = ok && std::stoi(lin.quiver().vertex_name(ar.target)) == std::stoi(lin.quiver().vertex_name(ar.source)) + 1;
    v.require(ok, "linear A_" + std::to_string(n - 1));
  }
  v.notes << " linear A_{n-1} n=2..6;";
  for (int d = 2; d <= 4; ++d) {
    PresentedGradedAlgebra be = degree_zero_part_mckay(mckay_algebra({d, std::vector<int>(d, 1)}));
    bool ok = be.quiver().num_vertices() == d && be.quiver().num_arrows() == d * (d - 1) &&
              static_cast<int>(be.relations().size()) == (d - 2) * d * (d - 1) / 2;
    std::map<std::pair<int, int>, int> mult;
    for (const auto& ar : be.quiver().arrows()) ++mult[{ar.source, ar.target}];
    for (int i = 0; i + 1 < d; ++i) ok = ok && mult[{i, i + 1}] == d;
    v.require(ok, "Beilinson d=" + std::to_string(d));
  }
  v.notes << " Beilinson d=2,3,4";
}

void lattice(Verdict& v) {
  std::size_t checked = 0;
  for (const auto& in : kMcKay) {
    GroebnerBasis gb = complete_groebner(mckay_algebra(in));
    auto counts = graded_counts(gb, 5);
    if (!gb.complete() || !counts) {
      v.require(false, "uncertified " + label(in));
      continue;
    }
    for (int l = 0; l <= 5; ++l)
      for (int i = 0; i < in.n; ++i)
        for (int j = 0; j < in.n; ++j) {
          ++checked;
          if ((*counts)[l][i][j] != invariant_monomial_count(in, i, j, l))
            v.require(false, label(in) + " l=" + std::to_string(l) + " (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
  }
  v.notes << checked << " corner dimensions compared";
}

void hypotheses(Verdict& v) {
  for (const auto& in : kMcKay) {
    PresentedGradedAlgebra b = mckay_algebra(in);
    HypothesisReport r = check_main_hypotheses(b, {b.quiver().vertex_index("0")});
    bool src = r.source_on_b.size() == 1 && r.source_on_b[0].second;
    v.require(r.a3.answer == Finiteness::Answer::yes && r.a4_on_b == Tri::yes && src, "McKay " + label(in));
  }
  v.notes << "McKay e={0}: 4/4;";
  QuiverWithPotential qp = load_qp("ex2_qp.json");
  PresentedGradedAlgebra b = jacobian_algebra(qp.quiver, qp.potential, qp.cut);
  int finite_singletons = 0;
  for (int i = 0; i < b.quiver().num_vertices(); ++i) {
    HypothesisReport r = check_main_hypotheses(b, {i});
    if (r.a3.answer != Finiteness::Answer::no) {
      ++finite_singletons;
      v.notes << " ex2 e={" << b.quiver().vertex_name(i) << "} A3=" << (r.a3.answer == Finiteness::Answer::yes ? "finite" : "unknown")
              << ";";
    }
  }
  v.require(finite_singletons == 0, "ex2 singletons expected to fail (A3), " + std::to_string(finite_singletons) + " do not");
  HypothesisReport pair = check_main_hypotheses(b, vertex_set_from_ids(b.quiver(), {"1", "2"}));
  v.require(pair.passes(), "ex2 e={1,2}");
  v.notes << " ex2 e={1,2} " << (pair.passes() ? "passes" : "fails");
}

void calabi_yau(Verdict& v) {
  auto check = [&](const BimoduleComplex& p, const std::string& name) {
    GroebnerBasis gb = complete_groebner(p.algebra());
    ComplexReport r = verify_complex(p, gb, 4);
    DualityReport d = verify_self_duality(p, 3);
    v.require(r.squares_to_zero, name + " d^2");
    v.require(r.exact, name + " homology");
    v.require(d.ok, name + " self-duality");
    v.notes << " " << name << (r.passed() && d.ok ? " ok" : " bad") << ";";
  };
  check(koszul_complex({3, {1, 1, 1}}), "koszul(3,(1,1,1))");
  check(koszul_complex({5, {1, 2, 2}}), "koszul(5,(1,2,2))");
  QuiverWithPotential qp = load_qp("ex1_qp.json");
  check(dimer_bimodule_complex(qp.quiver, qp.potential, *qp.cut), "dimer ex1");
  v.notes << " degcap 4";
}

void coxeter(Verdict& v) {
  std::vector<Polynomial> ps;
  for (const auto& in : {McKayInput{5, {1, 2, 2}}, McKayInput{5, {3, 1, 1}}}) {
    PresentedGradedAlgebra alg = abar(in);
    Polynomial p = coxeter_polynomial(FiniteAlgebraModel(alg));
    v.require(p.degree() == 4 && p.coeff(4) == 1, "monic degree 4 for " + label(in));
    // Reverse the vertex and arrow lists.
    const Quiver& q = alg.quiver();
    int nv = q.num_vertices(), na = q.num_arrows();
    std::vector<std::string> vs(q.vertices().rbegin(), q.vertices().rend());
    std::vector<Arrow> as;
    for (int a = na - 1; a >= 0; --a) as.push_back({q.arrow(a).name, nv - 1 - q.arrow(a).source, nv - 1 - q.arrow(a).target, 0});
    Quiver rq(vs, as);
    std::vector<PathElement> rels;
    for (const auto& r : alg.relations()) {
      PathElement x;
      for (const auto& [path, c] : r.terms()) {
        std::vector<int> w;
        for (int a : path.arrows) w.push_back(na - 1 - a);
        x.add(Path::from_arrows(rq, w), c);
      }
      rels.push_back(x);
    }
    v.require(coxeter_polynomial(FiniteAlgebraModel(PresentedGradedAlgebra(rq, rels))) == p, "relabel invariance " + label(in));
    v.notes << " " << label(in) << ": " << p.to_string() << ";";
    ps.push_back(p);
  }
  v.require(!(ps[0] == ps[1]), "polynomials differ");
}

void preprojective(Verdict& v) {
  auto compare = [&](const FiniteAlgebraModel& m, int n, const GroebnerBasis& bbar, int lmax, const std::string& name) {
    auto pieces = preprojective_graded_dims(m, n, lmax);
    std::ostringstream dims;
    for (const auto& pc : pieces) {
      auto g = graded_dimension(bbar, std::nullopt, pc.degree);
      v.require(g && *g == Integer(pc.total), name + " l=" + std::to_string(pc.degree));
      dims << (pc.degree ? "," : "") << pc.total;
    }
    v.notes << " " << name << " [" << dims.str() << "];";
  };
  for (int n = 3; n <= 5; ++n) {
    McKayInput in{n, {1, n - 1}};
    compare(FiniteAlgebraModel(abar(in)), 1, complete_groebner(stable_algebra(mckay_algebra(in))), 3, label(in));
  }
  McKayInput in{5, {1, 2, 2}};
  compare(FiniteAlgebraModel(abar(in)), 2, complete_groebner(stable_algebra(mckay_algebra(in))), 2, label(in));
  Quiver k({"2", "3", "4"}, {{"y1", 0, 1, 0}, {"y2", 0, 1, 0}, {"z1", 1, 2, 0}, {"z2", 1, 2, 0}});
  QuiverWithPotential qp = load_qp("ex1_qp.json");
  PresentedGradedAlgebra b = jacobian_algebra(qp.quiver, qp.potential, qp.cut);
  compare(FiniteAlgebraModel(PresentedGradedAlgebra(k, {})), 2,
          complete_groebner(quotient_by_vertices(b, std::vector<std::string>{"1"})), 3, "k(2=>3=>4) vs ex1");
}

void global_dim(Verdict& v) {
  for (const auto& in : kMcKay) {
    GlobalDimension g = global_dimension(FiniteAlgebraModel(abar(in)), 6);
    int d = static_cast<int>(in.a.size());
    v.require(g.exact && g.value <= d - 1, label(in));
    if (in.n == 5 && in.a == std::vector<int>{1, 2, 2}) v.require(g.value == 2, "value 2 for (5,(1,2,2))");
    v.notes << " " << label(in) << "=" << g.value << ";";
  }
  for (const char* f : {"ex1_qp.json", "ex2_qp.json"}) {
    QuiverWithPotential qp = load_qp(f);
    GlobalDimension g = global_dimension(FiniteAlgebraModel(truncated_algebra(qp.quiver, qp.potential, *qp.cut)), 6);
    v.require(g.exact && g.value <= 2, f);
    v.notes << " " << f << "=" << g.value << ";";
  }
}

void serre(Verdict& v) {
  McKayInput in{3, {1, 1, 1}};
  FiniteAlgebraModel m(degree_zero_part_mckay(mckay_algebra(in)));
  auto its = serre_inverse_iterate(m, 2, 3);
  for (int l = 1; l <= 3; ++l) {
    v.require(its[l].concentrated(), "Beilinson l=" + std::to_string(l) + " concentrated");
    v.require(Integer(its[l].total_in_degree(0)) == lattice_total(in, l), "Beilinson l=" + std::to_string(l) + " H0 dim");
    v.notes << " l=" << l << " H0=" << its[l].total_in_degree(0) << " B_l=" << lattice_total(in, l).get_str() << ";";
  }
  FiniteAlgebraModel a2(PresentedGradedAlgebra(Quiver({"1", "2"}, {{"a", 0, 1, 0}}), {}));
  auto small = serre_inverse_iterate(a2, 1, 3);
  bool violated = false;
  for (int l = 1; l <= 3; ++l) violated = violated || !small[l].concentrated();
  v.require(violated, "kA2 violation");
  v.notes << " kA2 " << (violated ? "violates" : "does not violate") << " concentration";
}

void dimers(Verdict& v) {
  auto same = [](const QuiverWithPotential& x, const QuiverWithPotential& y) {
    auto sx = test::shape_of(x), sy = test::shape_of(y);
    return test::qp_isomorphic(sx, sy) || test::qp_isomorphic(test::flipped(sx), sy);
  };
  v.require(same(dual_qp(load_dimer("ex1_dimer.json")), load_qp("ex1_qp.json")), "ex1 dual");
  v.require(same(dual_qp(load_dimer("ex2_dimer.json")), load_qp("ex2_qp.json")), "ex2 dual");
  std::size_t total = 0;
  for (const char* f : {"ex1_dimer.json", "ex2_dimer.json", "hexagonal_dimer.json"}) {
    DimerGraph g = load_dimer(f);
    QuiverWithPotential qp = dual_qp(g);
    for (const auto& m : perfect_matchings(g)) {
      ++total;
      v.require(is_cut(qp.potential, matching_cut(g, qp, m)).ok, std::string(f) + " matching");
    }
  }
  v.notes << " duals iso; " << total << " matchings all cuts;";
  for (auto [f, r] : {std::pair{"ex1_dimer.json", Rational(1, 2)}, std::pair{"hexagonal_dimer.json", Rational(2, 3)}}) {
    QuiverWithPotential qp = dual_qp(load_dimer(f));
    ChargeResult c = consistency_charge(qp);
    bool uniform = c.feasible && verify_charge(qp, c.charge);
    for (const auto& x : c.charge) uniform = uniform && x == r;
    v.require(uniform, std::string(f) + " charge");
    v.notes << " " << f << " R=" << to_string(r) << ";";
  }
}

void substrate(Verdict& v) {
  int assoc = 0, nf = 0, cartan = 0, json = 0;
  auto g = test::rng_for(100);
  for (int k = 0; k < 1000; ++k) {
    Quiver q = test::random_quiver(g, 4, 7, false);
    PathElement x = test::random_element(g, q, 3, 3), y = test::random_element(g, q, 3, 3), z = test::random_element(g, q, 3, 3);
    if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) ++assoc;
  }
  g = test::rng_for(101);
  for (int k = 0; k < 1000; ++k) {
    Quiver q = test::random_quiver(g, 3, 5, false, 0);
    std::vector<Arrow> as = q.arrows();
    for (auto& a : as) a.degree = 1;
    q = Quiver(q.vertices(), as);
    std::vector<PathElement> rels;
    for (int r = 0; r < 3; ++r) {
      PathElement rel = test::random_relation(g, q, 4, 3);
      if (!rel.is_zero()) rels.push_back(rel);
    }
    GroebnerBasis gb = complete_groebner(PresentedGradedAlgebra(q, rels), 7);
    PathElement w = normal_form(test::random_element(g, q, 4, 4), gb);
    if (normal_form(w, gb) != w) ++nf;
  }
  g = test::rng_for(102);
  for (int k = 0; k < 1000; ++k) {
    Quiver q = test::random_quiver(g, 4, 5, true, 0);
    std::vector<PathElement> rels;
    PathElement r = test::random_relation(g, q, 4, 3);
    if (!r.is_zero() && r.leading().length() >= 2) rels.push_back(r);
    FiniteAlgebraModel m(PresentedGradedAlgebra(q, rels));
    if (!global_dimension(m, 6).exact || abs(determinant(cartan_matrix(m))) != 1) ++cartan;
  }
  g = test::rng_for(103);
  for (int k = 0; k < 1000; ++k) {
    Quiver q = test::random_quiver(g, 4, 6, false, 2);
    std::vector<PathElement> rels;
    for (int r = 0; r < 3; ++r) {
      PathElement rel = test::random_relation(g, q, 6, 3);
      if (!rel.is_zero()) rels.push_back(rel);
    }
    PresentedGradedAlgebra alg(q, rels);
    std::string text = algebra_to_json(alg).dump();
    if (algebra_to_json(algebra_from_json(parse_json_text(text))).dump() != text) ++json;
  }
  v.require(assoc == 0, "associativity");
  v.require(nf == 0, "normal-form idempotence");
  v.require(cartan == 0, "Cartan determinant");
  v.require(json == 0, "json round-trip");
  v.notes << " failures over 1000 cases each: assoc " << assoc << ", nf " << nf << ", cartan " << cartan << ", json " << json;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "presentation reproduction", presentation}, {2, "lattice-oracle agreement", lattice},
      {3, "hypothesis suite", hypotheses},            {4, "Calabi-Yau complex verification", calabi_yau},
      {5, "Coxeter separation", coxeter},             {6, "preprojective identity", preprojective},
      {7, "global dimension", global_dim},            {8, "representation-infiniteness shadow", serre},
      {9, "dimer pipeline", dimers},                  {10, "substrate properties", substrate},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.ok) ++failed;
    std::cout << "criterion " << c.id << " " << (v.ok ? "PASS" : "FAIL") << " " << c.name << " (tolerance: exact, "
              << std::fixed << std::setprecision(1) << secs << "s):" << v.notes.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
