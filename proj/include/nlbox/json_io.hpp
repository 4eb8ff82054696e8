#pragma once

#include "nlbox/boxes.hpp"
#include "nlbox/quasiprob.hpp"

#include <json.hpp>

#include <string>

namespace nlbox {

// {"p": [[r00],[r01],[r10],[r11]]}, each row in outcome order 00,01,10,11.
nlohmann::json box_to_json(const Box& box);
Box box_from_json(const nlohmann::json& j);

// {"q": [16 reals]} in atom order (a0,a1,b0,b1).
nlohmann::json jqpd_to_json(const Jqpd& jq);
Jqpd jqpd_from_json(const nlohmann::json& j);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

}  // namespace nlbox
