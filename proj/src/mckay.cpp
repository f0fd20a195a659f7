#include "cyqw/mckay.hpp"

#include <numeric>

namespace cyqw {

WeightReport validate_weights(const McKayInput& in) {
  if (in.a.empty()) throw InputError("weight list is empty");
  if (in.n < 2) throw InputError("modulus n must be at least 2");
  WeightReport r;
  long sum = 0;
  for (std::size_t j = 0; j < in.a.size(); ++j) {
    int aj = in.a[j];
    sum += aj;
    if (aj <= 0 || aj >= in.n) {
      r.ok = false;
      r.violations.push_back("(B1): a_" + std::to_string(j + 1) + " = " + std::to_string(aj) + " is not in (0, " +
                             std::to_string(in.n) + ")");
    } else if (std::gcd(in.n, aj) != 1) {
      r.ok = false;
      r.violations.push_back("(B1): gcd(" + std::to_string(in.n) + ", " + std::to_string(aj) +
                             ") = " + std::to_string(std::gcd(in.n, aj)));
    }
  }
  if (in.a.size() < 2) {
    r.ok = false;
    r.violations.push_back("need at least two weights");
  }
  if (sum != in.n) {
    r.ok = false;
    r.violations.push_back("(B2): sum of weights " + std::to_string(sum) + " != " + std::to_string(in.n));
  }
  return r;
}

std::string mckay_arrow_name(int j, int i) { return "x" + std::to_string(j) + "_" + std::to_string(i); }

namespace {

void require_valid(const McKayInput& in) {
  auto r = validate_weights(in);
  if (!r.ok) {
    std::string msg = "invalid weights:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw InputError(msg);
  }
}

int arrow_id(const McKayInput& in, int j, int i) { return j * in.n + ((i % in.n) + in.n) % in.n; }

}  // namespace

PresentedGradedAlgebra mckay_algebra(const McKayInput& in) {
  require_valid(in);
  int n = in.n, d = static_cast<int>(in.a.size());
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i)
      arrows.push_back(Arrow{mckay_arrow_name(j + 1, i), i, (i + in.a[j]) % n, i + in.a[j] >= n ? 1 : 0});
  Quiver q(vertices, arrows);
  std::vector<PathElement> rels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j)
      for (int jp = j + 1; jp < d; ++jp) {
        PathElement r;
        r.add(Path::from_arrows(q, {arrow_id(in, j, i), arrow_id(in, jp, i + in.a[j])}), 1);
        r.add(Path::from_arrows(q, {arrow_id(in, jp, i), arrow_id(in, j, i + in.a[jp])}), -1);
        rels.push_back(std::move(r));
      }
  return PresentedGradedAlgebra(std::move(q), std::move(rels));
}

PresentedGradedAlgebra degree_zero_part_mckay(const PresentedGradedAlgebra& b) {
  const Quiver& q = b.quiver();
  std::set<int> drop;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (q.arrow(a).degree != 0) drop.insert(a);
  for (const auto& r : b.relations()) {
    int zero_sides = 0;
    for (const auto& [p, c] : r.terms()) zero_sides += degree(q, p) == 0 ? 1 : 0;
    if (zero_sides != 0 && zero_sides != static_cast<int>(r.size()))
      throw std::logic_error("relation with exactly one degree-zero side");
  }
  return remove_arrows(b, drop, true);
}

PresentedGradedAlgebra stable_algebra(const PresentedGradedAlgebra& alg) {
  return quotient_by_vertices(alg, std::set<int>{alg.quiver().vertex_index("0")});
}

std::vector<KoszulGenerator> koszul_basis(const McKayInput& in, int l) {
  require_valid(in);
  int n = in.n, d = static_cast<int>(in.a.size());
  std::vector<KoszulGenerator> out;
  std::vector<int> tuple;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(tuple.size()) == l) {
      int s = 0;
      for (int j : tuple) s += in.a[j];
      for (int i = 0; i < n; ++i) out.push_back(KoszulGenerator{i, tuple, (i + s) % n, i + s >= n ? 1 : 0});
      return;
    }
    for (int j = from; j < d; ++j) {
      tuple.push_back(j);
      self(self, j + 1);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

BimoduleComplex koszul_complex(const McKayInput& in) {
  PresentedGradedAlgebra b = mckay_algebra(in);
  const Quiver& q = b.quiver();
  int n = in.n, d = static_cast<int>(in.a.size());
  std::vector<std::vector<KoszulGenerator>> basis;
  std::vector<std::vector<Generator>> terms;
  std::vector<std::map<std::pair<int, std::vector<int>>, int>> index(d + 1);
  for (int l = 0; l <= d; ++l) {
    basis.push_back(koszul_basis(in, l));
    std::vector<Generator> gens;
    for (std::size_t g = 0; g < basis[l].size(); ++g) {
      const auto& kg = basis[l][g];
      std::string label = "e" + std::to_string(kg.start);
      for (int j : kg.tuple) label += "^x" + std::to_string(j + 1);
      gens.push_back(Generator{kg.end, kg.start, kg.twist, label});
      index[l].emplace(std::make_pair(kg.start, kg.tuple), static_cast<int>(g));
    }
    terms.push_back(std::move(gens));
  }
  std::vector<BimoduleComplex::Differential> diffs(d + 1);
  for (int l = 1; l <= d; ++l) {
    for (std::size_t g = 0; g < basis[l].size(); ++g) {
      const auto& kg = basis[l][g];
      for (int r = 0; r < l; ++r) {
        int j = kg.tuple[r];
        std::vector<int> rest = kg.tuple;
        rest.erase(rest.begin() + r);
        Rational sign = r % 2 == 0 ? 1 : -1;
        // b x ⊗ (rest from start) ⊗ b'
        int h1 = index[l - 1].at({kg.start, rest});
        int from = ((kg.end - in.a[j]) % n + n) % n;
        Path x_left = Path::of_arrow(q, arrow_id(in, j, from));
        diffs[l][{h1, static_cast<int>(g)}].add(x_left, Path::trivial(kg.start), sign);
        // b ⊗ (rest from start + a_j) ⊗ x b'
        int h2 = index[l - 1].at({(kg.start + in.a[j]) % n, rest});
        Path x_right = Path::of_arrow(q, arrow_id(in, j, kg.start));
        diffs[l][{h2, static_cast<int>(g)}].add(Path::trivial(kg.end), x_right, sign);
      }
    }
  }
  return BimoduleComplex(std::move(b), std::move(terms), std::move(diffs));
}

Integer invariant_monomial_count(const McKayInput& in, int i, int j, int l) {
  require_valid(in);
  if (l < 0) throw InputError("negative grade");
  long target = static_cast<long>(l) * in.n + i - j;
  if (target < 0) return 0;
  int d = static_cast<int>(in.a.size());
  long bound = static_cast<long>(l + 1) * in.n;
  // Count m in N^d with m·a = target, each m_t <= bound.
  std::vector<Integer> ways(target + 1, 0);
  ways[0] = 1;
  for (int t = 0; t < d; ++t) {
    std::vector<Integer> next(target + 1, 0);
    for (long s = 0; s <= target; ++s) {
      if (ways[s] == 0) continue;
      for (long m = 0; m <= bound && s + m * in.a[t] <= target; ++m) next[s + m * in.a[t]] += ways[s];
    }
    ways = std::move(next);
  }
  return ways[target];
}

}  // namespace cyqw
