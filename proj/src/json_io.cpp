#include "nlbox/json_io.hpp"

#include <cstdio>

namespace nlbox {

nlohmann::json box_to_json(const Box& box) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) row.push_back(box.table()(r, c));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"p", std::move(rows)}};
}

Box box_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p")) throw InvalidArgument("box JSON needs a \"p\" field");
  const auto& rows = j.at("p");
  if (!rows.is_array() || rows.size() != 4) throw InvalidArgument("\"p\" must hold 4 rows");
  Table4 p;
  for (int r = 0; r < 4; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4) throw InvalidArgument("each box row must hold 4 numbers");
    for (int c = 0; c < 4; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw InvalidArgument("box entries must be numbers");
      p(r, c) = v.get<double>();
    }
  }
  return Box(p);
}

nlohmann::json jqpd_to_json(const Jqpd& jq) {
  nlohmann::json q = nlohmann::json::array();
  for (int k = 0; k < 16; ++k) q.push_back(jq[k]);
  return nlohmann::json{{"q", std::move(q)}};
}

Jqpd jqpd_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q")) throw InvalidArgument("jqpd JSON needs a \"q\" field");
  const auto& q = j.at("q");
  if (!q.is_array() || q.size() != 16) throw InvalidArgument("\"q\" must hold 16 numbers");
  Atoms16 atoms;
  for (int k = 0; k < 16; ++k) {
    const auto& v = q[static_cast<std::size_t>(k)];
    if (!v.is_number()) throw InvalidArgument("jqpd atoms must be numbers");
    atoms(k) = v.get<double>();
  }
  return Jqpd(atoms);
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace nlbox
