#include "nlbox/principles.hpp"

#include <cmath>
#include <random>

namespace nlbox {

namespace {

double unit_uniform(std::uint64_t draw) { return static_cast<double>(draw >> 11) * 0x1.0p-53; }

// Inverse CDF over outcome columns (0,0),(0,1),(1,0),(1,1); zero-probability
// outcomes are never returned.
int sample_outcome(const Table4& p, int row, double u) {
  double cumulative = 0.0;
  int last_positive = 0;
  for (int c = 0; c < 4; ++c) {
    const double pc = p(row, c);
    if (pc <= 0.0) continue;
    last_positive = c;
    cumulative += pc;
    if (u < cumulative) return c;
  }
  return last_positive;
}

}  // namespace

IpGameResult ntcc_ip_game(const Box& box, int n_bits, std::int64_t trials, std::uint64_t seed) {
  if (n_bits < 0) throw InvalidArgument("n_bits must be nonnegative");
  if (trials < 1) throw InvalidArgument("trials must be at least 1");

  double pbar = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a) pbar += 0.25 * box(a, a ^ (x & y), x, y);
  const double bias = 2.0 * pbar - 1.0;

  const Table4& p = box.table();
  std::int64_t successes = 0;
  for (std::int64_t start = 0, block = 0; start < trials; start += kIpGameBlock, ++block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block)};
    std::mt19937_64 engine(seq);
    const std::int64_t end = std::min(trials, start + kIpGameBlock);
    for (std::int64_t t = start; t < end; ++t) {
      int inner = 0, parity_a = 0, parity_b = 0;
      for (int i = 0; i < n_bits; ++i) {
        const std::uint64_t draw = engine();
        const int v = static_cast<int>(draw & 1u);
        const int w = static_cast<int>((draw >> 1) & 1u);
        const int outcome = sample_outcome(p, Box::row(v, w), unit_uniform(draw));
        inner ^= v & w;
        parity_a ^= outcome >> 1;
        parity_b ^= outcome & 1;
      }
      // Bob announces parity_b; Alice guesses parity_b ^ parity_a.
      if ((parity_a ^ parity_b) == inner) ++successes;
    }
  }
  return IpGameResult{static_cast<double>(successes) / static_cast<double>(trials),
                      0.5 * (1.0 + std::pow(bias, n_bits)), successes, trials};
}

}  // namespace nlbox
