#pragma once

// Dense two-phase primal simplex over an exact ordered field, using Bland's
// rule for both entering and leaving variables.
//
//   minimize c.x  subject to  A x = b,  x >= 0

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace minuscule {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar value{};
  std::vector<Scalar> x;
  std::vector<std::size_t> basis;  // basic structural columns, by row
  std::size_t pivots = 0;
};

template <class Scalar>
class ExactSimplex {
 public:
  using Matrix = std::vector<std::vector<Scalar>>;

  ExactSimplex(Matrix a, std::vector<Scalar> b) : a_(std::move(a)), b_(std::move(b)) {
    rows_ = a_.size();
    cols_ = rows_ ? a_.front().size() : 0;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LpSolution<Scalar> minimize(const std::vector<Scalar>& cost) const {
    Tableau t = phase_one();
    LpSolution<Scalar> sol;
    if (!t.feasible) {
      sol.status = LpStatus::Infeasible;
      sol.pivots = t.pivots;
      return sol;
    }
    set_objective(t, cost);
    const bool bounded = run(t, cols_);
    sol.pivots = t.pivots;
    if (!bounded) {
      sol.status = LpStatus::Unbounded;
      return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.x.assign(cols_, Scalar(0));
    for (std::size_t r = 0; r < t.basis.size(); ++r) {
      sol.x[t.basis[r]] = t.m[r].back();
      sol.basis.push_back(t.basis[r]);
    }
    sol.value = Scalar(0);
    for (std::size_t j = 0; j < cols_; ++j) sol.value += cost[j] * sol.x[j];
    return sol;
  }

  LpSolution<Scalar> maximize(const std::vector<Scalar>& cost) const {
    std::vector<Scalar> neg(cost.size());
    for (std::size_t j = 0; j < cost.size(); ++j) neg[j] = -cost[j];
    auto sol = minimize(neg);
    sol.value = -sol.value;
    return sol;
  }

 private:
  // Rows hold [structural | artificial | rhs]; the objective row holds
  // reduced costs over the same columns, with -z in the last slot.
  struct Tableau {
    std::vector<std::vector<Scalar>> m;
    std::vector<Scalar> obj;
    std::vector<std::size_t> basis;
    std::size_t width = 0;
    bool feasible = false;
    std::size_t pivots = 0;
  };

  void pivot(Tableau& t, std::size_t row, std::size_t col) const {
    ++t.pivots;
    auto& pr = t.m[row];
    const Scalar inv = Scalar(1) / pr[col];
    for (auto& v : pr) v *= inv;
    auto eliminate = [&](std::vector<Scalar>& target) {
      if (target[col] == 0) return;
      const Scalar f = target[col];
      for (std::size_t j = 0; j < target.size(); ++j)
        if (pr[j] != 0) target[j] -= f * pr[j];
    };
    for (std::size_t r = 0; r < t.m.size(); ++r)
      if (r != row) eliminate(t.m[r]);
    eliminate(t.obj);
    t.basis[row] = col;
  }

  // Bland's rule; columns >= limit never enter. Returns false if unbounded.
  bool run(Tableau& t, std::size_t limit) const {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j)
        if (t.obj[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Scalar best{};
      for (std::size_t r = 0; r < t.m.size(); ++r) {
        if (t.m[r][*enter] <= 0) continue;
        const Scalar ratio = t.m[r].back() / t.m[r][*enter];
        if (!leave || ratio < best || (ratio == best && t.basis[r] < t.basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(t, *leave, *enter);
    }
  }

  Tableau phase_one() const {
    Tableau t;
    t.width = cols_ + rows_ + 1;
    t.m.assign(rows_, std::vector<Scalar>(t.width, Scalar(0)));
    t.basis.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const bool flip = b_[r] < 0;
      for (std::size_t j = 0; j < cols_; ++j) t.m[r][j] = flip ? -a_[r][j] : a_[r][j];
      t.m[r][cols_ + r] = 1;
      t.m[r].back() = flip ? -b_[r] : b_[r];
      t.basis[r] = cols_ + r;
    }
    // Phase-one objective: minimize the sum of artificials.
    t.obj.assign(t.width, Scalar(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < t.width; ++j)
        if (j < cols_ || j == t.width - 1) t.obj[j] -= t.m[r][j];
    run(t, cols_ + rows_);
    if (t.obj.back() != 0) return t;  // -z != 0: artificials stay positive

    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and dropped.
    for (std::size_t r = 0; r < t.m.size();) {
      if (t.basis[r] < cols_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < cols_; ++j)
        if (t.m[r][j] != 0) {
          col = j;
          break;
        }
      if (col) {
        pivot(t, r, *col);
        ++r;
      } else {
        t.m.erase(t.m.begin() + static_cast<std::ptrdiff_t>(r));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    t.feasible = true;
    return t;
  }

  void set_objective(Tableau& t, const std::vector<Scalar>& cost) const {
    t.obj.assign(t.width, Scalar(0));
    for (std::size_t j = 0; j < cols_; ++j) t.obj[j] = cost[j];
    for (std::size_t r = 0; r < t.m.size(); ++r) {
      const Scalar cb = cost[t.basis[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < t.width; ++j) t.obj[j] -= cb * t.m[r][j];
    }
  }

  Matrix a_;
  std::vector<Scalar> b_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
};

}  // namespace minuscule
