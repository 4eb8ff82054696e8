#pragma once

#include "nlbox/boxes.hpp"

#include <vector>

namespace nlbox {

/// Signed weights over the 16 joint assignments (a0,a1,b0,b1).
///
/// Atom index is 8*a0 + 4*a1 + 2*b0 + b1 (lexicographic in a0,a1,b0,b1).
/// Individual atoms may be negative; the total must be 1.
class Jqpd {
 public:
  explicit Jqpd(const Atoms16& q, double tol = tol::kValidation);

  static Jqpd uniform();
  static Jqpd point_mass(int a0, int a1, int b0, int b1);

  static constexpr int index(int a0, int a1, int b0, int b1) { return 8 * a0 + 4 * a1 + 2 * b0 + b1; }

  double operator[](int i) const { return q_(i); }
  const Atoms16& atoms() const { return q_; }

 private:
  Atoms16 q_;
};

/// Product weights of N independent copies; atom index is the concatenation
/// of the per-copy indices with copy 0 most significant.
struct MultiJqpd {
  int copies;
  VectorX q;
};

/// Sign exponent (a0 xor a1)(b0 xor b1) xor a_n xor b_m.
int f_exponent(int m, int n, int a0, int a1, int b0, int b1);

/// (-1)^{f_{m,n}} for every atom, in atom order.
Atoms16 chsh_signs(int m, int n);

Jqpd isotropic_jqpd(double gamma);

/// Observable box p(a,b|x,y) obtained by summing out the unobserved bits.
Box marginals_of(const Jqpd& jq);

/// 16x16 matrix mapping atoms onto flattened box entries (row-major table).
const Eigen::Matrix<double, 16, 16>& marginalization_matrix();

MultiJqpd product_jqpd(const std::vector<Jqpd>& parts);

double l1_norm(const Jqpd& jq);

/// 2 * sum (-1)^{f_{m,n}} q, the CHSH value read off atoms directly.
double chsh_from_atoms(const Jqpd& jq, int m, int n);

}  // namespace nlbox
