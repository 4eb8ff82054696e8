#pragma once

#include "nlbox/boxes.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace nlbox {

/// Resolves a named box: "pr1", "pr:<0..7>", "noise", "iso:<gamma>",
/// "det:<a0a1b0b1>" (four bits, e.g. det:1111).
Box box_from_preset(std::string_view name);

struct ReportOptions {
  double tol = tol::kVerdict;
  std::vector<int> ml_copies;  // macroscopic copy counts to evaluate, may be empty
};

/// Verdicts and witnesses for every principle on one box. Fields that need a
/// no-signaling box (correlators, M*, ML) are null when the box signals.
nlohmann::json report_box(const Box& box, std::string_view id, const ReportOptions& options = {});

/// 64-bit FNV-1a over the %.17g rendering of the table.
std::string box_hash(const Box& box);

/// gamma * P + beta * B + (1 - gamma - beta) * N over a regular grid on [0,1]^2.
struct ScanGrid {
  std::string slice = "pr-d-i";
  int gamma_steps = 11;
  int beta_steps = 11;
};

/// Named slices: "pr-d-i" (PR1, D1111, I), "pr-l12-i" (PR1, L12, I), "noise" (I, I, I).
struct SliceVertices {
  Box p;
  Box b;
  Box n;
};
SliceVertices slice_vertices(std::string_view name);

inline constexpr std::string_view kScanHeader = "gamma,beta,S,mstar,ns,local,uffink,tlm,ic,lo2_10";

/// CSV with kScanHeader; one row per feasible grid point (gamma + beta <= 1),
/// gamma outer, beta inner. Verdict columns are 1 when the principle holds.
std::string scan_slice(const ScanGrid& grid, double tol = tol::kVerdict, int jobs = 1);

/// CSV "n,gamma,mstar": M* of the n-copy macroscopic isotropic box over a
/// gamma grid on [0,1]. Every n must be odd and at most 15.
std::string sweep_ml(const std::vector<int>& n_list, int gamma_steps, int jobs = 1);

}  // namespace nlbox
