#include "nlbox/boxes.hpp"

#include <cmath>
#include <string>

namespace nlbox {

Box::Box(const Table4& p, double tol) : p_(p) {
  if (!p_.allFinite()) throw InvalidArgument("box entries must be finite");
  if ((p_.array() < -tol).any() || (p_.array() > 1.0 + tol).any())
    throw InvalidArgument("box entries must lie in [0,1]");
  for (int r = 0; r < 4; ++r) {
    if (std::abs(p_.row(r).sum() - 1.0) > tol)
      throw InvalidArgument("box row " + std::to_string(r) + " does not sum to 1");
  }
}

Box make_pr(int variant) {
  if (variant < 0 || variant > 7) throw InvalidArgument("PR variant must be in 0..7");
  Table4 p = Table4::Zero();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int parity = (x & y) ^ (bit(variant, 0) & y) ^ (bit(variant, 1) & x) ^ bit(variant, 2);
      for (int a = 0; a < 2; ++a) p(Box::row(x, y), Box::col(a, a ^ parity)) = 0.5;
    }
  }
  return Box(p);
}

Box make_deterministic(int a0, int a1, int b0, int b1) {
  require_bit(a0, "a0");
  require_bit(a1, "a1");
  require_bit(b0, "b0");
  require_bit(b1, "b1");
  const int a[2] = {a0, a1};
  const int b[2] = {b0, b1};
  Table4 p = Table4::Zero();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) p(Box::row(x, y), Box::col(a[x], b[y])) = 1.0;
  return Box(p);
}

Box make_noise() { return Box(Table4::Constant(0.25)); }

Box make_isotropic(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in [0,1]");
  const double alpha = 0.25 * (1.0 + gamma);
  const double beta = 0.25 * (1.0 - gamma);
  Table4 p;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) p(Box::row(x, y), Box::col(a, b)) = ((a ^ b) == (x & y)) ? alpha : beta;
  return Box(p);
}

Box make_slice(const SliceSpec& spec) {
  if (spec.terms.empty()) throw InvalidArgument("slice needs at least one term");
  double total = 0.0;
  Table4 p = Table4::Zero();
  for (const auto& term : spec.terms) {
    if (!(term.weight >= 0.0)) throw InvalidArgument("slice coefficients must be nonnegative");
    total += term.weight;
    p += term.weight * term.box.table();
  }
  if (std::abs(total - 1.0) > tol::kValidation) throw InvalidArgument("slice coefficients must sum to 1");
  return Box(p);
}

std::vector<Box> ns_vertices() {
  std::vector<Box> out;
  out.reserve(24);
  for (int k = 0; k < 16; ++k) out.push_back(make_deterministic(bit(k, 3), bit(k, 2), bit(k, 1), bit(k, 0)));
  for (int v = 0; v < 8; ++v) out.push_back(make_pr(v));
  return out;
}

Correlators correlators(const Box& box, double tol) {
  Correlators c;
  // Marginal <A_x> measured in each row (x,y); the two rows must agree.
  Matrix2 ma_rows, mb_rows;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double e = 0.0, ma = 0.0, mb = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double p = box(a, b, x, y);
          e += ((a ^ b) ? -p : p);
          ma += (a ? -p : p);
          mb += (b ? -p : p);
        }
      }
      c.e(x, y) = e;
      ma_rows(x, y) = ma;
      mb_rows(x, y) = mb;
    }
  }
  for (int i = 0; i < 2; ++i) {
    if (std::abs(ma_rows(i, 0) - ma_rows(i, 1)) > tol || std::abs(mb_rows(0, i) - mb_rows(1, i)) > tol)
      throw SignalingMarginals("box marginals depend on the remote input");
    c.ma(i) = 0.5 * (ma_rows(i, 0) + ma_rows(i, 1));
    c.mb(i) = 0.5 * (mb_rows(0, i) + mb_rows(1, i));
  }
  return c;
}

double chsh_from_correlators(const Matrix2& e, int m, int n) {
  return e.sum() - 2.0 * e(1 - n, 1 - m);
}

Matrix2 chsh_all(const Box& box, double tol) {
  const Correlators c = correlators(box, tol);
  Matrix2 s;
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) s(m, n) = chsh_from_correlators(c.e, m, n);
  return s;
}

double max_abs_chsh(const Box& box, double tol) { return chsh_all(box, tol).cwiseAbs().maxCoeff(); }

bool is_no_signaling(const Box& box, double tol) {
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      const double y0 = box(a, 0, x, 0) + box(a, 1, x, 0);
      const double y1 = box(a, 0, x, 1) + box(a, 1, x, 1);
      if (std::abs(y0 - y1) > tol) return false;
    }
  }
  for (int y = 0; y < 2; ++y) {
    for (int b = 0; b < 2; ++b) {
      const double x0 = box(0, b, 0, y) + box(1, b, 0, y);
      const double x1 = box(0, b, 1, y) + box(1, b, 1, y);
      if (std::abs(x0 - x1) > tol) return false;
    }
  }
  return true;
}

}  // namespace nlbox
