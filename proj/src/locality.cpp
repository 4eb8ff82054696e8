#include "nlbox/principles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nlbox {

LocalVerdict check_local(const Box& box, double tol) {
  const Matrix2 s = chsh_all(box);
  const double max_abs = s.cwiseAbs().maxCoeff();
  return LocalVerdict{max_abs <= 2.0 + tol, max_abs, s};
}

InequalityVerdict check_uffink(const Box& box, double tol) {
  const Matrix2 e = correlators(box).e;
  double lhs = 0.0;
  // Minus sign on e(i,j): pair it with its diagonal partner, the other two add.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double diff = e(1 - i, 1 - j) - e(i, j);
      const double sum = e(i, 1 - j) + e(1 - i, j);
      lhs = std::max(lhs, diff * diff + sum * sum);
    }
  }
  return InequalityVerdict{lhs <= 4.0 + tol, lhs, 4.0};
}

TlmVerdict check_tlm(const Box& box, double tol) {
  constexpr double kZeroVariance = 1e-12;
  const Correlators c = correlators(box);
  bool zero_variance = false;
  Matrix2 angle;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double var_a = 1.0 - c.ma(x) * c.ma(x);
      const double var_b = 1.0 - c.mb(y) * c.mb(y);
      double corr = 0.0;
      if (var_a < kZeroVariance || var_b < kZeroVariance) {
        zero_variance = true;
      } else {
        corr = (c.e(x, y) - c.ma(x) * c.mb(y)) / std::sqrt(var_a * var_b);
      }
      angle(x, y) = std::asin(std::clamp(corr, -1.0, 1.0));
    }
  }
  double lhs = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) lhs = std::max(lhs, std::abs(angle.sum() - 2.0 * angle(i, j)));
  return TlmVerdict{lhs <= std::numbers::pi + tol, lhs, zero_variance};
}

}  // namespace nlbox
