#pragma once

#include "nlbox/common.hpp"

#include <vector>

namespace nlbox {

/// Conditional behavior p(a,b|x,y) of a bipartite two-input/two-output box.
///
/// Row index is the input pair (x,y) in order (0,0),(0,1),(1,0),(1,1); column
/// index is the outcome pair (a,b) in the same order. Construction validates
/// that every entry lies in [0,1] and every row sums to 1.
class Box {
 public:
  explicit Box(const Table4& p, double tol = tol::kValidation);

  static constexpr int row(int x, int y) { return 2 * x + y; }
  static constexpr int col(int a, int b) { return 2 * a + b; }

  double operator()(int a, int b, int x, int y) const { return p_(row(x, y), col(a, b)); }
  const Table4& table() const { return p_; }

 private:
  Table4 p_;
};

/// Second moments e(x,y) = <A_x B_y> and first moments of the +/-1 variables.
struct Correlators {
  Matrix2 e;
  Vector2 ma;
  Vector2 mb;
};

struct SliceTerm {
  double weight;
  Box box;
};

/// Convex mixture sum_i w_i * box_i; weights must be nonnegative and sum to 1.
struct SliceSpec {
  std::vector<SliceTerm> terms;
};

/// PR box number `variant` in 0..7: a xor b = xy xor v0*y xor v1*x xor v2,
/// where v0, v1, v2 are the low three bits of the variant.
Box make_pr(int variant);
Box make_deterministic(int a0, int a1, int b0, int b1);
Box make_noise();
Box make_isotropic(double gamma);
Box make_slice(const SliceSpec& spec);

/// The 16 deterministic boxes followed by the 8 PR boxes.
std::vector<Box> ns_vertices();

Correlators correlators(const Box& box, double tol = tol::kEquality);

/// CHSH value for one sign placement given second moments. S(m,n) carries its
/// minus sign on <A_{1-n} B_{1-m}>, so S(0,0) = e00 + e01 + e10 - e11.
double chsh_from_correlators(const Matrix2& e, int m, int n);

/// All four signed CHSH values, indexed s(m,n).
Matrix2 chsh_all(const Box& box, double tol = tol::kEquality);

double max_abs_chsh(const Box& box, double tol = tol::kEquality);

bool is_no_signaling(const Box& box, double tol = tol::kEquality);

}  // namespace nlbox
