#include "cyqw/complex.hpp"

namespace cyqw {

void TensorElement::add(const Path& left, const Path& right, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void TensorElement::add(const TensorElement& o, const Rational& s) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c * s);
}

BimoduleComplex::BimoduleComplex(PresentedGradedAlgebra alg, std::vector<std::vector<Generator>> terms,
                                 std::vector<Differential> diffs)
    : alg_(std::move(alg)), terms_(std::move(terms)), diffs_(std::move(diffs)) {
  const Quiver& q = alg_.quiver();
  diffs_.resize(terms_.size());
  for (std::size_t l = 1; l < diffs_.size(); ++l) {
    for (const auto& [rc, entry] : diffs_[l]) {
      const Generator& h = terms_[l - 1].at(rc.first);
      const Generator& g = terms_[l].at(rc.second);
      for (const auto& [lr, c] : entry.terms()) {
        const Path& p = lr.first;
        const Path& r = lr.second;
        if (!is_valid_path(q, p) || !is_valid_path(q, r))
          throw std::logic_error("differential entry contains an invalid path");
        if (p.source != h.left || p.target != g.left || r.source != g.right || r.target != h.right)
          throw std::logic_error("differential entry violates generator endpoints at term " + std::to_string(l));
        if (degree(q, p) + degree(q, r) + h.twist != g.twist)
          throw std::logic_error("differential entry is not homogeneous at term " + std::to_string(l));
      }
    }
  }
}

std::vector<int> BimoduleComplex::ranks() const {
  std::vector<int> r;
  for (const auto& t : terms_) r.push_back(static_cast<int>(t.size()));
  return r;
}

BimoduleComplex BimoduleComplex::truncated(std::size_t n) const {
  std::vector<std::vector<Generator>> t(terms_.begin(), terms_.begin() + std::min(n, terms_.size()));
  std::vector<Differential> d(diffs_.begin(), diffs_.begin() + std::min(n, diffs_.size()));
  return BimoduleComplex(alg_, std::move(t), std::move(d));
}

}  // namespace cyqw
