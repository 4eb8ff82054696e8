#include "nlbox/optim.hpp"

namespace nlbox {

LpProblem<double> min_l1_problem(const Box& box) {
  const auto& marg = marginalization_matrix();
  LpProblem<double> lp;
  lp.objective = VectorX::Ones(32);
  lp.a.resize(16, 32);
  lp.a << marg, -marg;
  lp.b = Eigen::Map<const Atoms16>(box.table().data());
  return lp;
}

L1Result min_l1(const Box& box) {
  const auto sol = solve_lp(min_l1_problem(box));
  if (sol.status != LpStatus::Optimal) throw NoJqpdExists("no quasi-distribution reproduces this box (signaling)");
  const Atoms16 q = sol.z.head<16>() - sol.z.tail<16>();
  return L1Result{sol.objective_value, Jqpd(q, tol::kEquality)};
}

}  // namespace nlbox
