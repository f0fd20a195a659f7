#include "cyqw/lp.hpp"

#include <optional>
#include <stdexcept>

namespace cyqw {

namespace {

// Tableau rows 0..m-1 are constraints, last column is the right-hand side.
struct Tableau {
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // structural column count

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Maximizes obj over columns < usable; returns false if unbounded.
  bool run(const std::vector<Rational>& obj, std::size_t usable) {
    std::size_t m = basis.size();
    for (;;) {
      // reduced cost c_j - c_B B^-1 A_j
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable && !enter; ++j) {
        Rational red = obj[j];
        for (std::size_t i = 0; i < m; ++i) red -= obj[basis[i]] * t[i][j];
        if (sgn(red) > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(t[i][*enter]) <= 0) continue;
        Rational ratio = t[i].back() / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("maximize: dimension mismatch");
  Tableau tab;
  tab.cols = n;
  tab.t.assign(m, std::vector<Rational>(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int s = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = s * a(i, j);
    tab.t[i][n + i] = 1;
    tab.t[i].back() = s * b[i];
    tab.basis[i] = n + i;
  }
  std::vector<Rational> phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.run(phase1, n + m);
  LpResult res;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= n && sgn(tab.t[i].back()) != 0) return res;
  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(tab.t[i][j]) != 0) {
        tab.pivot(i, j);
        break;
      }
  }
  std::vector<Rational> obj(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  if (!tab.run(obj, n)) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i].back();
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace cyqw
