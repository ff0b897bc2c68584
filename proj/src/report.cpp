#include "octavian/report.hpp"

#include <sstream>

namespace octavian {

std::string Report::json() const {
  nlohmann::ordered_json root;
  root["schema"] = 1;
  root["command"] = command_;
  root["config"] = config_;
  auto claims = nlohmann::ordered_json::array();
  for (const Claim& c : claims_) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["pass"] = c.pass;
    claims.push_back(std::move(j));
  }
  root["claims"] = std::move(claims);
  root["data"] = data_;
  root["pass"] = all_pass();
  return root.dump(2) + "\n";
}

std::string Report::text() const {
  std::ostringstream out;
  out << "command: " << command_ << "\n";
  for (const auto& [key, value] : config_.items())
    out << "config " << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  for (const Claim& c : claims_)
    out << "claim " << c.name << ": expected " << c.expected << ", computed "
        << c.computed << (c.pass ? "  [pass]" : "  [FAIL]") << "\n";
  for (const auto& [key, value] : data_.items())
    out << "data " << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  out << "overall: " << (all_pass() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace octavian
