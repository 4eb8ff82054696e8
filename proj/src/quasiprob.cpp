#include "nlbox/quasiprob.hpp"

#include <cmath>

namespace nlbox {

Jqpd::Jqpd(const Atoms16& q, double tol) : q_(q) {
  if (!q_.allFinite()) throw InvalidArgument("jqpd atoms must be finite");
  if (std::abs(q_.sum() - 1.0) > tol) throw InvalidArgument("jqpd atoms must sum to 1");
}

Jqpd Jqpd::uniform() { return Jqpd(Atoms16::Constant(1.0 / 16.0)); }

Jqpd Jqpd::point_mass(int a0, int a1, int b0, int b1) {
  require_bit(a0, "a0");
  require_bit(a1, "a1");
  require_bit(b0, "b0");
  require_bit(b1, "b1");
  Atoms16 q = Atoms16::Zero();
  q(index(a0, a1, b0, b1)) = 1.0;
  return Jqpd(q);
}

int f_exponent(int m, int n, int a0, int a1, int b0, int b1) {
  for (int v : {m, n, a0, a1, b0, b1}) require_bit(v, "f_exponent argument");
  const int a[2] = {a0, a1};
  const int b[2] = {b0, b1};
  return ((a0 ^ a1) & (b0 ^ b1)) ^ a[n] ^ b[m];
}

Atoms16 chsh_signs(int m, int n) {
  Atoms16 s;
  for (int k = 0; k < 16; ++k) s(k) = f_exponent(m, n, bit(k, 3), bit(k, 2), bit(k, 1), bit(k, 0)) ? -1.0 : 1.0;
  return s;
}

Jqpd isotropic_jqpd(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in [0,1]");
  return Jqpd((Atoms16::Ones() + 2.0 * gamma * chsh_signs(0, 0)) / 16.0);
}

const Eigen::Matrix<double, 16, 16>& marginalization_matrix() {
  static const Eigen::Matrix<double, 16, 16> m = [] {
    Eigen::Matrix<double, 16, 16> out = Eigen::Matrix<double, 16, 16>::Zero();
    for (int k = 0; k < 16; ++k) {
      const int a[2] = {bit(k, 3), bit(k, 2)};
      const int b[2] = {bit(k, 1), bit(k, 0)};
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) out(4 * Box::row(x, y) + Box::col(a[x], b[y]), k) = 1.0;
    }
    return out;
  }();
  return m;
}

Box marginals_of(const Jqpd& jq) {
  const Atoms16 flat = marginalization_matrix() * jq.atoms();
  if ((flat.array() < -tol::kObservableNegativity).any())
    throw ObservableNegativity("jqpd yields a negative observable probability");
  Table4 p = Eigen::Map<const Table4>(flat.data());
  // Clip round-off so the box validates; genuine negativity was rejected above.
  p = p.cwiseMax(0.0);
  return Box(p, tol::kObservableNegativity);
}

MultiJqpd product_jqpd(const std::vector<Jqpd>& parts) {
  if (parts.empty()) throw InvalidArgument("product needs at least one factor");
  if (parts.size() > 3) throw SizeLimit("explicit product limited to 3 copies");
  VectorX q = parts.front().atoms();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    VectorX next(q.size() * 16);
    for (Eigen::Index j = 0; j < q.size(); ++j) next.segment<16>(16 * j) = q(j) * parts[i].atoms();
    q = std::move(next);
  }
  return MultiJqpd{static_cast<int>(parts.size()), std::move(q)};
}

double l1_norm(const Jqpd& jq) { return jq.atoms().cwiseAbs().sum(); }

double chsh_from_atoms(const Jqpd& jq, int m, int n) { return 2.0 * chsh_signs(m, n).dot(jq.atoms()); }

}  // namespace nlbox
