#include "nlbox/optim.hpp"
#include "nlbox/principles.hpp"

namespace nlbox {

Box ml_macroscopic(const Box& box, int n) {
  if (n < 1 || n > 64) throw InvalidArgument("copy count must be in 1..64");
  (void)correlators(box);

  const int width = 2 * n + 1;  // (#zeros - #ones) ranges over -n..n
  Table4 out = Table4::Zero();
  MatrixX dist(width, width), next(width, width);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      dist.setZero();
      dist(n, n) = 1.0;
      for (int step = 0; step < n; ++step) {
        next.setZero();
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            const double p = box(a, b, x, y);
            if (p == 0.0) continue;
            const int da = a ? -1 : 1;
            const int db = b ? -1 : 1;
            // Interior shift; reachable states never touch the border here.
            const int r0 = std::max(0, -da), c0 = std::max(0, -db);
            next.block(r0 + da, c0 + db, width - 1, width - 1) += p * dist.block(r0, c0, width - 1, width - 1);
          }
        }
        dist.swap(next);
      }
      // Difference >= 0 maps to macroscopic outcome 0; ties included.
      for (int i = 0; i < width; ++i) {
        for (int j = 0; j < width; ++j) {
          const int alpha = (i - n) >= 0 ? 0 : 1;
          const int beta = (j - n) >= 0 ? 0 : 1;
          out(Box::row(x, y), Box::col(alpha, beta)) += dist(i, j);
        }
      }
    }
  }
  return Box(out, tol::kEquality);
}

namespace {

bool macroscopically_local(const BoxFamily& family, double gamma, int n) {
  return min_l1(ml_macroscopic(family(gamma), n)).m_star <= 1.0 + tol::kEquality;
}

}  // namespace

double ml_threshold(const BoxFamily& family, int n, double tol) {
  if (n < 1 || n % 2 == 0) throw InvalidArgument("macroscopic threshold needs an odd copy count");
  if (!(tol > 0.0)) throw InvalidArgument("bisection tolerance must be positive");
  if (macroscopically_local(family, 1.0, n)) return 1.0;
  if (!macroscopically_local(family, 0.0, n)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (macroscopically_local(family, mid, n) ? lo : hi) = mid;
  }
  return lo;
}

double ml_threshold(int n, double tol) {
  return ml_threshold([](double g) { return make_isotropic(g); }, n, tol);
}

}  // namespace nlbox
