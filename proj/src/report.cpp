#include "nlbox/report.hpp"

#include "nlbox/json_io.hpp"
#include "nlbox/optim.hpp"
#include "nlbox/principles.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <thread>

namespace nlbox {

namespace {

double parse_real(std::string_view text) {
  // std::from_chars for double is incomplete in older libstdc++.
  std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw InvalidArgument("not a number: " + s);
  return v;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; callers write into
// preallocated slots so output order is independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

const char* flag(bool v) { return v ? "1" : "0"; }

}  // namespace

Box box_from_preset(std::string_view name) {
  if (name == "pr1") return make_pr(0);
  if (name == "noise") return make_noise();
  if (name.starts_with("pr:")) {
    int v = -1;
    const auto digits = name.substr(3);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw InvalidArgument("bad PR variant");
    return make_pr(v);
  }
  if (name.starts_with("iso:")) return make_isotropic(parse_real(name.substr(4)));
  if (name.starts_with("det:")) {
    const auto bits = name.substr(4);
    if (bits.size() != 4) throw InvalidArgument("det preset needs four bits a0a1b0b1");
    int b[4];
    for (int i = 0; i < 4; ++i) {
      if (bits[i] != '0' && bits[i] != '1') throw InvalidArgument("det preset needs four bits a0a1b0b1");
      b[i] = bits[i] - '0';
    }
    return make_deterministic(b[0], b[1], b[2], b[3]);
  }
  throw InvalidArgument("unknown box preset: " + std::string(name));
}

std::string box_hash(const Box& box) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      for (char ch : format_double(box.table()(r, c)) + ",") {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json report_box(const Box& box, std::string_view id, const ReportOptions& options) {
  using nlohmann::json;
  const double tol = options.tol;
  json r;
  r["id"] = std::string(id);
  r["hash"] = box_hash(box);
  r["box"] = box_to_json(box);

  const bool ns = is_no_signaling(box, tol::kEquality);
  r["ns"] = {{"satisfied", ns}};

  auto lo_entry = [&](std::string_view preset) {
    const LoResult res = lo_evaluate(lo_preset(preset), box, tol);
    return json{{"sum", res.sum}, {"satisfied", res.satisfied}};
  };
  const Lo1Verdict lo1 = check_lo1(box, tol);
  r["lo"] = {{"LO1", lo_entry("LO1")},
             {"LO1_family", {{"max_sum", lo1.max_sum}, {"satisfied", lo1.satisfied}}},
             {"LO2-5", lo_entry("LO2-5")},
             {"LO2-10", lo_entry("LO2-10")}};

  if (!ns) {
    for (const char* key : {"S", "max_abs_S", "mstar", "jqpd", "local", "uffink", "tlm", "ic", "ntcc", "ml"})
      r[key] = nullptr;
    r["unavailable_reason"] = "box is signaling: no quasi-distribution or correlators exist";
    return r;
  }

  const LocalVerdict local = check_local(box, tol);
  r["S"] = {{local.s(0, 0), local.s(0, 1)}, {local.s(1, 0), local.s(1, 1)}};
  r["max_abs_S"] = local.max_abs_s;
  r["local"] = {{"satisfied", local.local}, {"witness_max_abs_S", local.max_abs_s}};

  const L1Result l1 = min_l1(box);
  r["mstar"] = l1.m_star;
  r["jqpd"] = jqpd_to_json(l1.jqpd);

  const InequalityVerdict uff = check_uffink(box, tol);
  r["uffink"] = {{"satisfied", uff.satisfied}, {"lhs", uff.lhs}, {"bound", uff.bound}};

  const TlmVerdict tlm = check_tlm(box, tol);
  r["tlm"] = {{"satisfied", tlm.satisfied}, {"lhs", tlm.lhs}, {"bound", std::acos(-1.0)},
              {"zero_variance", tlm.zero_variance}};

  const IcReport ic = ic_van_dam(box, tol);
  r["ic"] = {{"protocol", "van Dam"},
             {"satisfied", !ic.violates_ic},
             {"criterion_lhs", ic.criterion_lhs},
             {"p_i", ic.p_i},
             {"p_ii", ic.p_ii},
             {"e_i", ic.e_i},
             {"e_ii", ic.e_ii},
             {"mutual_info_total", ic.mutual_info_total}};

  r["ntcc"] = {{"known_violation", l1.m_star > kNtccMStar.value},
               {"mstar_threshold", kNtccMStar.value},
               {"source", std::string(kNtccMStar.citation)},
               {"isotropic_chsh_threshold", kNtccIsotropicChsh.value},
               {"isotropic_chsh_source", std::string(kNtccIsotropicChsh.citation)}};

  json ml = json::array();
  for (int n : options.ml_copies) {
    const Box macro = ml_macroscopic(box, n);
    const double m = min_l1(macro).m_star;
    ml.push_back({{"n", n}, {"mstar", m}, {"satisfied", m <= 1.0 + tol::kEquality}, {"max_abs_S", max_abs_chsh(macro)}});
  }
  r["ml"] = std::move(ml);
  return r;
}

SliceVertices slice_vertices(std::string_view name) {
  if (name == "pr-d-i") return {make_pr(0), make_deterministic(1, 1, 1, 1), make_noise()};
  if (name == "pr-l12-i") return {make_pr(0), make_slice({{{0.5, make_pr(0)}, {0.5, make_pr(1)}}}), make_noise()};
  if (name == "noise") return {make_noise(), make_noise(), make_noise()};
  throw InvalidArgument("unknown slice: " + std::string(name));
}

std::string scan_slice(const ScanGrid& grid, double tol, int jobs) {
  if (grid.gamma_steps < 2 || grid.beta_steps < 2) throw InvalidArgument("grid needs at least 2 steps per axis");
  const SliceVertices v = slice_vertices(grid.slice);

  struct Point {
    double gamma, beta;
  };
  std::vector<Point> points;
  for (int i = 0; i < grid.gamma_steps; ++i) {
    for (int j = 0; j < grid.beta_steps; ++j) {
      const double g = static_cast<double>(i) / (grid.gamma_steps - 1);
      const double b = static_cast<double>(j) / (grid.beta_steps - 1);
      if (g + b <= 1.0 + tol::kValidation) points.push_back({g, b});
    }
  }

  std::vector<std::string> rows(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t k) {
    const auto [g, b] = points[k];
    const Box box = make_slice({{{g, v.p}, {b, v.b}, {std::max(0.0, 1.0 - g - b), v.n}}});
    const bool ns = is_no_signaling(box, tol::kEquality);
    std::string line = format_double(g) + "," + format_double(b) + ",";
    if (ns) {
      const LocalVerdict local = check_local(box, tol);
      line += format_double(local.max_abs_s) + "," + format_double(min_l1(box).m_star) + ",1," + flag(local.local) +
              "," + flag(check_uffink(box, tol).satisfied) + "," + flag(check_tlm(box, tol).satisfied) + "," +
              flag(!ic_van_dam(box, tol).violates_ic);
    } else {
      line += "nan,nan,0,0,0,0,0";
    }
    line += std::string(",") + flag(lo_evaluate(lo_preset("LO2-10"), box, tol).satisfied) + "\n";
    rows[k] = std::move(line);
  });

  std::string out(kScanHeader);
  out += "\n";
  for (const auto& row : rows) out += row;
  return out;
}

std::string sweep_ml(const std::vector<int>& n_list, int gamma_steps, int jobs) {
  if (gamma_steps < 2) throw InvalidArgument("gamma grid needs at least 2 steps");
  for (int n : n_list) {
    if (n < 1 || n > 15 || n % 2 == 0) throw InvalidArgument("copy counts must be odd and in 1..15");
  }
  std::vector<std::pair<int, double>> points;
  for (int n : n_list)
    for (int i = 0; i < gamma_steps; ++i) points.emplace_back(n, static_cast<double>(i) / (gamma_steps - 1));

  std::vector<std::string> rows(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t k) {
    const auto [n, g] = points[k];
    const double m = min_l1(ml_macroscopic(make_isotropic(g), n)).m_star;
    rows[k] = std::to_string(n) + "," + format_double(g) + "," + format_double(m) + "\n";
  });

  std::string out = "n,gamma,mstar\n";
  for (const auto& row : rows) out += row;
  return out;
}

}  // namespace nlbox
