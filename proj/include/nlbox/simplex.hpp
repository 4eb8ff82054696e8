#pragma once

#include "nlbox/common.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nlbox {

template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// minimize objective . z  subject to  a z = b,  z >= 0.
template <typename Scalar>
struct LpProblem {
  VectorT<Scalar> objective;
  MatrixT<Scalar> a;
  VectorT<Scalar> b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  VectorT<Scalar> z;
  Scalar objective_value = Scalar(0);
};

template <typename Scalar>
struct SimplexOptions {
  Scalar pivot_tol = Scalar(1e-12);
  Scalar optimality_tol = Scalar(1e-11);
  Scalar feasibility_tol = Scalar(1e-9);
  int max_iterations = 100000;
};

namespace detail {

// Dense tableau: the last row holds reduced costs, the last column the
// right-hand side. T(last,last) is minus the current objective value.
template <typename Scalar>
class Tableau {
 public:
  Tableau(MatrixT<Scalar> t, std::vector<int> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index vars() const { return t_.cols() - 1; }
  const MatrixT<Scalar>& data() const { return t_; }
  const std::vector<int>& basis() const { return basis_; }

  void pivot(Eigen::Index r, Eigen::Index col) {
    t_.row(r) /= t_(r, col);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const Scalar factor = t_(i, col);
      if (factor != Scalar(0)) t_.row(i) -= factor * t_.row(r);
    }
    basis_[r] = static_cast<int>(col);
  }

  /// Bland's rule: lowest-index improving column, lowest-index basic variable
  /// among tied ratios. Returns false when the problem is unbounded.
  bool run(const SimplexOptions<Scalar>& opt) {
    const Eigen::Index rhs = vars();
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < vars(); ++j) {
        if (t_(rows(), j) < -opt.optimality_tol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      Scalar best = Scalar(0);
      for (Eigen::Index i = 0; i < rows(); ++i) {
        const Scalar coeff = t_(i, entering);
        if (coeff <= opt.pivot_tol) continue;
        const Scalar ratio = t_(i, rhs) / coeff;
        if (leaving < 0 || ratio < best - opt.pivot_tol ||
            (std::abs(ratio - best) <= opt.pivot_tol && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
    throw std::runtime_error("simplex iteration limit reached");
  }

 private:
  MatrixT<Scalar> t_;
  std::vector<int> basis_;
};

}  // namespace detail

/// Two-phase dense simplex. Dependent equality rows are tolerated: phase 1
/// carries one artificial per row and rows whose artificial cannot be
/// pivoted out are dropped before phase 2.
template <typename Scalar>
LpSolution<Scalar> solve_lp(const LpProblem<Scalar>& problem, const SimplexOptions<Scalar>& opt = {}) {
  const Eigen::Index m = problem.a.rows();
  const Eigen::Index n = problem.a.cols();
  if (problem.objective.size() != n) throw InvalidArgument("objective length must equal the column count of A");
  if (problem.b.size() != m) throw InvalidArgument("b length must equal the row count of A");

  LpSolution<Scalar> sol;

  // Phase 1: min sum of artificials, rows sign-normalized so b >= 0.
  MatrixT<Scalar> t = MatrixT<Scalar>::Zero(m + 1, n + m + 1);
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const Scalar sign = problem.b(i) < Scalar(0) ? Scalar(-1) : Scalar(1);
    t.row(i).head(n) = sign * problem.a.row(i);
    t(i, n + i) = Scalar(1);
    t(i, n + m) = sign * problem.b(i);
    basis[static_cast<std::size_t>(i)] = static_cast<int>(n + i);
  }
  t.row(m).head(n) = -t.topLeftCorner(m, n).colwise().sum();
  t(m, n + m) = -t.col(n + m).head(m).sum();

  detail::Tableau<Scalar> phase1(std::move(t), std::move(basis));
  phase1.run(opt);

  const Scalar scale = std::max(Scalar(1), problem.b.size() ? problem.b.cwiseAbs().maxCoeff() : Scalar(1));
  if (-phase1.data()(m, n + m) > opt.feasibility_tol * scale) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  // Drive remaining artificials out of the basis; rows where that is
  // impossible are linear combinations of the others.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (phase1.basis()[static_cast<std::size_t>(i)] >= n) {
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(phase1.data()(i, j)) > opt.pivot_tol * Scalar(1e3)) {
          col = j;
          break;
        }
      }
      if (col < 0) continue;
      phase1.pivot(i, col);
    }
    keep.push_back(i);
  }

  // Phase 2 on the original columns only.
  const auto r = static_cast<Eigen::Index>(keep.size());
  MatrixT<Scalar> t2 = MatrixT<Scalar>::Zero(r + 1, n + 1);
  std::vector<int> basis2(keep.size());
  for (Eigen::Index k = 0; k < r; ++k) {
    const Eigen::Index i = keep[static_cast<std::size_t>(k)];
    t2.row(k).head(n) = phase1.data().row(i).head(n);
    t2(k, n) = phase1.data()(i, n + m);
    basis2[static_cast<std::size_t>(k)] = phase1.basis()[static_cast<std::size_t>(i)];
  }
  t2.row(r).head(n) = problem.objective.transpose();
  for (Eigen::Index k = 0; k < r; ++k) {
    const Scalar cb = problem.objective(basis2[static_cast<std::size_t>(k)]);
    if (cb != Scalar(0)) t2.row(r) -= cb * t2.row(k);
  }

  detail::Tableau<Scalar> phase2(std::move(t2), std::move(basis2));
  if (!phase2.run(opt)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.z = VectorT<Scalar>::Zero(n);
  for (Eigen::Index k = 0; k < r; ++k)
    sol.z(phase2.basis()[static_cast<std::size_t>(k)]) = std::max(Scalar(0), phase2.data()(k, n));
  sol.objective_value = problem.objective.dot(sol.z);
  return sol;
}

}  // namespace nlbox
