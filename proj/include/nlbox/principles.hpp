#pragma once

#include "nlbox/boxes.hpp"
#include "nlbox/quasiprob.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace nlbox {

// ---------------------------------------------------------------------------
// Locality, Uffink and TLM (first NPA level) checks
// ---------------------------------------------------------------------------

struct LocalVerdict {
  bool local;
  double max_abs_s;
  Matrix2 s;
};

/// Local iff every |S(m,n)| <= 2 + tol.
LocalVerdict check_local(const Box& box, double tol = tol::kVerdict);

struct InequalityVerdict {
  bool satisfied;
  double lhs;
  double bound;
};

/// Quadratic bound on second moments, maximized over the four placements of
/// the minus sign; satisfied iff lhs <= 4 + tol.
InequalityVerdict check_uffink(const Box& box, double tol = tol::kVerdict);

struct TlmVerdict {
  bool satisfied;
  double lhs;
  bool zero_variance;  // some correlation was set to 0 because a marginal is deterministic
};

/// Arcsine sum of the correlation coefficients
/// C = (<AB> - <A><B>) / sqrt(var A var B), maximized over the four sign
/// placements. Satisfied iff lhs <= pi + tol, which is membership in the
/// first level of the NPA hierarchy.
TlmVerdict check_tlm(const Box& box, double tol = tol::kVerdict);

// ---------------------------------------------------------------------------
// Information causality (van Dam protocol)
// ---------------------------------------------------------------------------

struct IcReport {
  double p_i;
  double p_ii;
  double e_i;
  double e_ii;
  double criterion_lhs;      // e_i^2 + e_ii^2
  double mutual_info_total;  // bits, summed over Bob's two questions
  bool violates_ic;
};

/// Alice inputs x = alpha0 ^ alpha1 and sends alpha0 ^ a; Bob inputs y = beta
/// and guesses g = alpha0 ^ a ^ b. Mutual information is computed from the
/// exact joint distribution of (alpha_beta, g) for each beta.
IcReport ic_van_dam(const Box& box, double tol = tol::kVerdict);

struct IcCorrelations {
  double e_i;
  double e_ii;
};

/// E_I and E_II read off atoms: signed sums over a0 == a1 and a0 != a1.
IcCorrelations ic_negativity_rep(const Jqpd& jq);

double binary_mutual_information(const Matrix2& joint);

// ---------------------------------------------------------------------------
// Macroscopic locality
// ---------------------------------------------------------------------------

/// Coarse-grains n independent copies: for each input pair the macroscopic
/// outcome is 0 iff (#zeros - #ones) >= 0 on that side.
Box ml_macroscopic(const Box& box, int n);

using BoxFamily = std::function<Box(double)>;

/// Largest gamma in [0,1] for which the n-copy macroscopic box of
/// family(gamma) still has M* = 1, found by bisection to `tol`. n must be odd.
double ml_threshold(const BoxFamily& family, int n, double tol);
double ml_threshold(int n, double tol);

// ---------------------------------------------------------------------------
// Local orthogonality
// ---------------------------------------------------------------------------

/// Event over k copies. Slot 2c is Alice's side of copy c, slot 2c+1 Bob's.
class LoEvent {
 public:
  LoEvent(std::vector<int> outcomes, std::vector<int> settings);

  /// Parses "ab...|xy...", e.g. "1110|0011" = p(a=1,b=1,a'=1,b'=0|x=0,y=0,x'=1,y'=1).
  static LoEvent parse(std::string_view text);

  int copies() const { return static_cast<int>(outcomes_.size() / 2); }
  const std::vector<int>& outcomes() const { return outcomes_; }
  const std::vector<int>& settings() const { return settings_; }

 private:
  std::vector<int> outcomes_;
  std::vector<int> settings_;
};

/// True iff some slot has the same setting and a different outcome.
bool lo_orthogonal(const LoEvent& e1, const LoEvent& e2);

/// Product of single-copy probabilities.
double lo_event_probability(const LoEvent& event, const Box& box);

struct LoResult {
  double sum;
  bool satisfied;
};

LoResult lo_evaluate(const std::vector<LoEvent>& events, const Box& box, double tol = tol::kVerdict);

/// Named inequalities: "LO1", "LO2-5", "LO2-10".
std::vector<LoEvent> lo_preset(std::string_view id);

/// Every single-copy inequality of the LO1 form, for both parties:
/// P(a != a0 | x, y') + P(a0 | x, y) <= 1 with y != y', and Bob's mirror.
std::vector<std::vector<LoEvent>> lo1_family();

struct Lo1Verdict {
  bool satisfied;
  double max_sum;
};

Lo1Verdict check_lo1(const Box& box, double tol = tol::kVerdict);

// ---------------------------------------------------------------------------
// Communication complexity (inner-product parity game)
// ---------------------------------------------------------------------------

struct ReferenceThreshold {
  double value;
  std::string_view citation;
};

// Reference data only; these are not computed here.
inline constexpr ReferenceThreshold kNtccIsotropicChsh{
    3.266, "isotropic boxes with S > 3.266 collapse communication complexity via nonlocality distillation "
           "(Brunner & Skrzypczyk 2009)"};
inline constexpr ReferenceThreshold kNtccIsotropicMStarFromChsh{1.633, "M* = S/2 at S = 3.266"};
inline constexpr ReferenceThreshold kNtccIsotropicGammaFromChsh{0.8165, "gamma = S/4 at S = 3.266"};
inline constexpr ReferenceThreshold kNtccMStar{1.508, "NTCC violated for M* > 1.508 on the PR-D-I slice"};
inline constexpr ReferenceThreshold kNtccGamma{0.754, "gamma = M*/2 at M* = 1.508"};

struct IpGameResult {
  double empirical;
  double analytic;
  std::int64_t successes;
  std::int64_t trials;
};

/// Monte Carlo run of the inner-product parity protocol. Each trial draws
/// uniform v, w in {0,1}^n_bits, feeds (v_i, w_i) into box i, and counts a
/// success when parity(b) ^ parity(a) == parity(v . w).
///
/// The analytic rate is (1 + (2*pbar - 1)^n_bits) / 2 where pbar is the
/// per-box probability that a ^ b == xy under uniform inputs; for isotropic
/// boxes 2*pbar - 1 = gamma.
///
/// Randomness: std::mt19937_64, one engine per block of 4096 trials seeded
/// with std::seed_seq{seed & 0xffffffff, seed >> 32, block}. Each box use
/// consumes one 64-bit draw: bit 0 is v_i, bit 1 is w_i, and the top 53 bits
/// form the uniform used to sample (a,b) by inverse CDF in column order.
IpGameResult ntcc_ip_game(const Box& box, int n_bits, std::int64_t trials, std::uint64_t seed);

inline constexpr std::int64_t kIpGameBlock = 4096;

}  // namespace nlbox
