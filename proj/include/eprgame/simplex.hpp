#pragma once

#include <vector>

#include "eprgame/scalar.hpp"

namespace eprgame {

// maximize c.x subject to A x <= b, x >= 0. Rows of A have c.size() entries;
// b may have negative entries.
template <Scalar T>
struct LinearProgram {
  std::vector<std::vector<T>> a;
  std::vector<T> b;
  std::vector<T> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <Scalar T>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<T> x;
  T objective{};
  int pivots = 0;
};

// Dense two-phase tableau simplex with Bland's rule, so it terminates on
// degenerate problems. Pivot tolerance is 1e-9 for double and exact for
// Rational. Throws std::invalid_argument on ragged input.
template <Scalar T>
LpSolution<T> solve_lp(const LinearProgram<T>& lp);

}  // namespace eprgame
