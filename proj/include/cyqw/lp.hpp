#pragma once

#include <vector>

#include "cyqw/linalg.hpp"
#include "cyqw/rational.hpp"

namespace cyqw {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;
  Rational value;
};

// maximize c.x subject to A x = b, x >= 0. Exact two-phase simplex with Bland's rule.
LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace cyqw
