#include "nlbox/optim.hpp"
#include "nlbox/principles.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace nlbox;

namespace {

constexpr double kTsirelsonGamma = 0.70710678118654752;

// Largest gamma in [0,1] on the isotropic line where `holds` is true.
template <typename Pred>
double bisect_isotropic(Pred holds, double tol = 1e-10) {
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (holds(make_isotropic(mid)) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("check_local") {
  auto v = check_local(make_noise());
  CHECK(v.local);
  CHECK(v.max_abs_s == 0.0);
  v = check_local(make_isotropic(0.5));
  CHECK(v.local);
  CHECK(v.max_abs_s == doctest::Approx(2.0).epsilon(1e-15));
  v = check_local(make_isotropic(0.6));
  CHECK_FALSE(v.local);
  CHECK(v.max_abs_s == doctest::Approx(2.4).epsilon(1e-14));
}

TEST_CASE("check_uffink") {
  auto v = check_uffink(make_noise());
  CHECK(v.satisfied);
  CHECK(v.lhs == 0.0);
  v = check_uffink(make_pr(0));
  CHECK_FALSE(v.satisfied);
  CHECK(v.lhs == 8.0);
  for (double g : {0.1, 0.5, 0.7, 0.9}) CHECK(check_uffink(make_isotropic(g)).lhs == doctest::Approx(8 * g * g));
}

TEST_CASE("check_tlm") {
  for (double g : {0.0, 0.3, 0.6, 0.7, 0.71, 0.9}) {
    const auto v = check_tlm(make_isotropic(g));
    CHECK(v.lhs == doctest::Approx(4 * std::asin(g)).epsilon(1e-13));
    CHECK(v.satisfied == (g <= kTsirelsonGamma));
  }
  const auto pr = check_tlm(make_pr(0));
  CHECK_FALSE(pr.satisfied);
  CHECK(pr.lhs == doctest::Approx(2 * std::numbers::pi));
  const auto det = check_tlm(make_deterministic(1, 1, 1, 1));
  CHECK(det.satisfied);
  CHECK(det.lhs == 0.0);
  CHECK(det.zero_variance);
}

TEST_CASE("principle checks refuse signaling boxes") {
  Table4 p = Table4::Constant(0.25);
  p.row(0) << 1.0, 0.0, 0.0, 0.0;
  const Box sig(p);
  CHECK_THROWS_AS(check_local(sig), SignalingMarginals);
  CHECK_THROWS_AS(check_uffink(sig), SignalingMarginals);
  CHECK_THROWS_AS(check_tlm(sig), SignalingMarginals);
  CHECK_THROWS_AS(ic_van_dam(sig), SignalingMarginals);
  CHECK_THROWS_AS(ml_macroscopic(sig, 3), SignalingMarginals);
}

TEST_CASE("van Dam protocol") {
  const IcReport pr = ic_van_dam(make_pr(0));
  CHECK(pr.p_i == 1.0);
  CHECK(pr.p_ii == 1.0);
  CHECK(pr.mutual_info_total == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pr.violates_ic);

  const IcReport noise = ic_van_dam(make_noise());
  CHECK(noise.p_i == 0.5);
  CHECK(noise.p_ii == 0.5);
  CHECK(noise.mutual_info_total == 0.0);
  CHECK_FALSE(noise.violates_ic);

  for (double g : {0.2, 0.5, 0.7, 0.72, 0.95}) {
    const IcReport r = ic_van_dam(make_isotropic(g));
    CHECK(r.e_i == doctest::Approx(g).epsilon(1e-14));
    CHECK(r.e_ii == doctest::Approx(g).epsilon(1e-14));
    CHECK(r.violates_ic == (g > kTsirelsonGamma));
    // Symmetric boxes: each question is a binary symmetric channel.
    CHECK(r.mutual_info_total == doctest::Approx(2 * (1 - oracle::binary_entropy(r.p_i))).epsilon(1e-12));
  }
}

TEST_CASE("van Dam report invariants on random NS boxes") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const Box box = oracle::random_ns_box(rng);
    const IcReport r = ic_van_dam(box);
    CHECK(r.e_i == 2 * r.p_i - 1);
    CHECK(r.e_ii == 2 * r.p_ii - 1);
    CHECK(r.mutual_info_total >= 0.0);
    CHECK(r.mutual_info_total <= 2.0 + 1e-12);
    CHECK(std::abs(r.p_i + r.p_ii - (1.0 + chsh_all(box)(0, 0) / 4.0)) <= 1e-9);

    const IcCorrelations neg = ic_negativity_rep(min_l1(box).jqpd);
    CHECK(std::abs(neg.e_i - r.e_i) <= 1e-8);
    CHECK(std::abs(neg.e_ii - r.e_ii) <= 1e-8);
  }
}

TEST_CASE("negative-probability form of the van Dam correlations") {
  const IcCorrelations c = ic_negativity_rep(isotropic_jqpd(0.6));
  CHECK(c.e_i == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(c.e_ii == doctest::Approx(0.6).epsilon(1e-14));
  const IcCorrelations u = ic_negativity_rep(Jqpd::uniform());
  CHECK(u.e_i == 0.0);
  CHECK(u.e_ii == 0.0);
  const IcCorrelations t = ic_negativity_rep(isotropic_jqpd(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(t.e_i * t.e_i + t.e_ii * t.e_ii - 1.0) <= 1e-12);
}

TEST_CASE("Tsirelson coincidence on the isotropic line") {
  const double tlm = bisect_isotropic([](const Box& b) { return check_tlm(b, 0.0).satisfied; });
  const double uff = bisect_isotropic([](const Box& b) { return check_uffink(b, 0.0).satisfied; });
  const double ic = bisect_isotropic([](const Box& b) { return !ic_van_dam(b, 0.0).violates_ic; });
  CHECK(std::abs(tlm - kTsirelsonGamma) <= 1e-9);
  CHECK(std::abs(uff - kTsirelsonGamma) <= 1e-9);
  CHECK(std::abs(ic - kTsirelsonGamma) <= 1e-9);
}

TEST_CASE("NTCC reference constants") {
  CHECK(kNtccIsotropicChsh.value == 3.266);
  CHECK(kNtccMStar.value == 1.508);
  CHECK(kNtccGamma.value == 0.754);
  CHECK(kNtccIsotropicGammaFromChsh.value == doctest::Approx(kNtccIsotropicChsh.value / 4).epsilon(1e-3));
  CHECK_FALSE(kNtccIsotropicChsh.citation.empty());
  CHECK_FALSE(kNtccMStar.citation.empty());
}
