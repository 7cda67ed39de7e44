#include "eprgame/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace eprgame {

namespace {

template <Scalar T>
T pivot_eps() {
  if constexpr (std::same_as<T, double>) {
    return 1e-9;
  } else {
    return T(0);
  }
}

template <Scalar T>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows, std::vector<T>(cols, T(0))), rhs_(rows, T(0)), basis_(rows, 0) {}

  std::vector<std::vector<T>>& t() { return t_; }
  std::vector<T>& rhs() { return rhs_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const T inv = T(1) / t_[row][col];
    for (T& v : t_[row]) v *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row) continue;
      const T factor = t_[i][col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (t_[row][j] != 0) t_[i][j] -= factor * t_[row][j];
      }
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
    ++pivots_;
  }

  // Maximizes cost.x over columns with allowed[j]; returns false if unbounded.
  bool optimize(const std::vector<T>& cost, const std::vector<bool>& allowed) {
    const T eps = pivot_eps<T>();
    const std::size_t cols = cost.size();
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols && !entering; ++j) {
        if (!allowed[j]) continue;
        T reduced = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
          if (t_[i][j] != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (reduced > eps) entering = j;
      }
      if (!entering) return true;
      const std::size_t col = *entering;
      std::optional<std::size_t> leaving;
      T best_ratio{};
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (!(t_[i][col] > eps)) continue;
        const T ratio = rhs_[i] / t_[i][col];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, col);
    }
  }

  int pivots() const { return pivots_; }

 private:
  std::vector<std::vector<T>> t_;
  std::vector<T> rhs_;
  std::vector<std::size_t> basis_;
  int pivots_ = 0;
};

}  // namespace

template <Scalar T>
LpSolution<T> solve_lp(const LinearProgram<T>& lp) {
  const std::size_t n = lp.c.size();
  const std::size_t m = lp.a.size();
  if (lp.b.size() != m) throw std::invalid_argument("solve_lp: b has wrong length");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw std::invalid_argument("solve_lp: ragged constraint matrix");
  }

  // Columns: n structural, m slack, then one artificial per negative-rhs row.
  std::vector<std::size_t> needs_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.b[i] < 0) needs_artificial.push_back(i);
  }
  const std::size_t artificial_start = n + m;
  const std::size_t cols = artificial_start + needs_artificial.size();

  Tableau<T> tab(m, cols);
  std::size_t next_artificial = artificial_start;
  for (std::size_t i = 0; i < m; ++i) {
    const bool negate = lp.b[i] < 0;
    auto& row = tab.t()[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = negate ? T(-lp.a[i][j]) : lp.a[i][j];
    row[n + i] = negate ? T(-1) : T(1);
    tab.rhs()[i] = negate ? T(-lp.b[i]) : lp.b[i];
    if (negate) {
      row[next_artificial] = T(1);
      tab.basis()[i] = next_artificial++;
    } else {
      tab.basis()[i] = n + i;
    }
  }

  LpSolution<T> solution;
  if (!needs_artificial.empty()) {
    std::vector<T> phase_one(cols, T(0));
    for (std::size_t j = artificial_start; j < cols; ++j) phase_one[j] = T(-1);
    tab.optimize(phase_one, std::vector<bool>(cols, true));
    T infeasibility(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] >= artificial_start) infeasibility += tab.rhs()[i];
    }
    if (infeasibility > pivot_eps<T>()) {
      solution.status = LpStatus::kInfeasible;
      solution.pivots = tab.pivots();
      return solution;
    }
    // Drive zero-valued artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < artificial_start) continue;
      for (std::size_t j = 0; j < artificial_start; ++j) {
        if (abs_value(tab.t()[i][j]) > pivot_eps<T>()) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<T> cost(cols, T(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j];
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = artificial_start; j < cols; ++j) allowed[j] = false;
  const bool bounded = tab.optimize(cost, allowed);
  solution.pivots = tab.pivots();
  if (!bounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.x.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) solution.x[tab.basis()[i]] = tab.rhs()[i];
  }
  solution.objective = T(0);
  for (std::size_t j = 0; j < n; ++j) solution.objective += lp.c[j] * solution.x[j];
  return solution;
}

template LpSolution<double> solve_lp(const LinearProgram<double>&);
template LpSolution<Rational> solve_lp(const LinearProgram<Rational>&);

}  // namespace eprgame
