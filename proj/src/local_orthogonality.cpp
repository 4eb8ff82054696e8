#include "nlbox/principles.hpp"

#include <algorithm>
#include <string>

namespace nlbox {

LoEvent::LoEvent(std::vector<int> outcomes, std::vector<int> settings)
    : outcomes_(std::move(outcomes)), settings_(std::move(settings)) {
  if (outcomes_.size() != settings_.size()) throw InvalidArgument("every slot needs one outcome and one setting");
  if (outcomes_.empty() || outcomes_.size() % 2 != 0) throw InvalidArgument("event needs an Alice and a Bob slot per copy");
  if (outcomes_.size() > 4) throw InvalidArgument("events over more than 2 copies are not supported");
  for (int v : outcomes_) require_bit(v, "outcome");
  for (int v : settings_) require_bit(v, "setting");
}

LoEvent LoEvent::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw InvalidArgument("event must look like \"ab|xy\"");
  auto bits = [](std::string_view s) {
    std::vector<int> out;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw InvalidArgument("event string may only contain 0, 1 and '|'");
      out.push_back(ch - '0');
    }
    return out;
  };
  return LoEvent(bits(text.substr(0, bar)), bits(text.substr(bar + 1)));
}

bool lo_orthogonal(const LoEvent& e1, const LoEvent& e2) {
  if (e1.copies() != e2.copies()) throw InvalidArgument("events span different copy counts");
  for (std::size_t s = 0; s < e1.outcomes().size(); ++s) {
    if (e1.settings()[s] == e2.settings()[s] && e1.outcomes()[s] != e2.outcomes()[s]) return true;
  }
  return false;
}

double lo_event_probability(const LoEvent& event, const Box& box) {
  double p = 1.0;
  const auto& o = event.outcomes();
  const auto& s = event.settings();
  for (std::size_t c = 0; c < o.size(); c += 2) p *= box(o[c], o[c + 1], s[c], s[c + 1]);
  return p;
}

LoResult lo_evaluate(const std::vector<LoEvent>& events, const Box& box, double tol) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (!lo_orthogonal(events[i], events[j]))
        throw NonOrthogonalEvents("events " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
    }
  }
  double sum = 0.0;
  for (const auto& e : events) sum += lo_event_probability(e, box);
  return LoResult{sum, sum <= 1.0 + tol};
}

namespace {

std::vector<LoEvent> parse_all(std::initializer_list<std::string_view> items) {
  std::vector<LoEvent> out;
  for (auto s : items) out.push_back(LoEvent::parse(s));
  return out;
}

}  // namespace

std::vector<LoEvent> lo_preset(std::string_view id) {
  if (id == "LO1") return parse_all({"10|01", "11|01", "00|00", "01|00"});
  if (id == "LO2-5") return parse_all({"0000|0000", "1110|0011", "0011|0110", "1101|1011", "0111|1101"});
  if (id == "LO2-10")
    return parse_all({"1111|0000", "1100|1010", "0100|1100", "0011|0001", "0010|0111", "1011|0000", "0101|1100",
                      "1101|1100", "1010|0110", "1001|0100"});
  throw InvalidArgument("unknown LO preset: " + std::string(id));
}

std::vector<std::vector<LoEvent>> lo1_family() {
  std::vector<std::vector<LoEvent>> family;
  for (int fixed = 0; fixed < 2; ++fixed) {           // x for Alice's family, y for Bob's
    for (int remote = 0; remote < 2; ++remote) {      // remote input paired with the fixed outcome
      const int other = 1 - remote;
      for (int o0 = 0; o0 < 2; ++o0) {
        // Alice: P(a = 1-o0 | x=fixed, y=other) + P(a = o0 | x=fixed, y=remote)
        family.push_back({LoEvent({1 - o0, 0}, {fixed, other}), LoEvent({1 - o0, 1}, {fixed, other}),
                          LoEvent({o0, 0}, {fixed, remote}), LoEvent({o0, 1}, {fixed, remote})});
        // Bob mirror.
        family.push_back({LoEvent({0, 1 - o0}, {other, fixed}), LoEvent({1, 1 - o0}, {other, fixed}),
                          LoEvent({0, o0}, {remote, fixed}), LoEvent({1, o0}, {remote, fixed})});
      }
    }
  }
  return family;
}

Lo1Verdict check_lo1(const Box& box, double tol) {
  double max_sum = 0.0;
  for (const auto& inequality : lo1_family()) max_sum = std::max(max_sum, lo_evaluate(inequality, box, tol).sum);
  return Lo1Verdict{max_sum <= 1.0 + tol, max_sum};
}

}  // namespace nlbox
