#include "nlbox/principles.hpp"

#include <cmath>

namespace nlbox {

namespace {

double prob_parity(const Box& box, int parity, int x, int y) {
  return box(0, parity, x, y) + box(1, 1 ^ parity, x, y);
}

}  // namespace

double binary_mutual_information(const Matrix2& joint) {
  const Vector2 row = joint.rowwise().sum();
  const Vector2 col = joint.colwise().sum();
  double info = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double pij = joint(i, j);
      if (pij > 0.0) info += pij * std::log2(pij / (row(i) * col(j)));
    }
  }
  return std::max(0.0, info);
}

IcReport ic_van_dam(const Box& box, double tol) {
  // Signaling boxes are rejected up front, like the other principle checks.
  (void)correlators(box);

  IcReport r{};
  r.p_i = 0.5 * (prob_parity(box, 0, 0, 0) + prob_parity(box, 0, 1, 0));
  r.p_ii = 0.5 * (prob_parity(box, 0, 0, 1) + prob_parity(box, 1, 1, 1));
  r.e_i = 2.0 * r.p_i - 1.0;
  r.e_ii = 2.0 * r.p_ii - 1.0;
  r.criterion_lhs = r.e_i * r.e_i + r.e_ii * r.e_ii;
  r.violates_ic = r.criterion_lhs > 1.0 + tol;

  r.mutual_info_total = 0.0;
  for (int beta = 0; beta < 2; ++beta) {
    Matrix2 joint = Matrix2::Zero();  // (alpha_beta, g)
    for (int alpha0 = 0; alpha0 < 2; ++alpha0) {
      for (int alpha1 = 0; alpha1 < 2; ++alpha1) {
        const int x = alpha0 ^ alpha1;
        const int target = beta ? alpha1 : alpha0;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            const int guess = alpha0 ^ a ^ b;
            joint(target, guess) += 0.25 * box(a, b, x, beta);
          }
        }
      }
    }
    r.mutual_info_total += binary_mutual_information(joint);
  }
  return r;
}

IcCorrelations ic_negativity_rep(const Jqpd& jq) {
  const Atoms16 signs = chsh_signs(0, 0);
  IcCorrelations out{0.0, 0.0};
  for (int k = 0; k < 16; ++k) {
    const double term = signs(k) * jq[k];
    if (bit(k, 3) == bit(k, 2))
      out.e_i += term;
    else
      out.e_ii += term;
  }
  return out;
}

}  // namespace nlbox
