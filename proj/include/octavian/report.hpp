#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "octavian/rational.hpp"

namespace octavian {

/// One verified statement: a computed value against the expected one. Both
/// sides are decimal strings so arbitrary-precision values survive any JSON
/// consumer untouched.
struct Claim {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Machine-readable run report: command, configuration snapshot, claim list
/// and free-form data fields. Key order is insertion order and nothing time-
/// or host-dependent is ever recorded, so identical configurations print
/// byte-identical JSON.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void config(const std::string& key, std::int64_t value) {
    config_[key] = value;
  }
  void config(const std::string& key, const std::string& value) {
    config_[key] = value;
  }

  void data(const std::string& key, std::int64_t value) { data_[key] = value; }
  void data(const std::string& key, const std::string& value) {
    data_[key] = value;
  }
  void data(const std::string& key, bool value) { data_[key] = value; }
  void data(const std::string& key, const nlohmann::ordered_json& value) {
    data_[key] = value;
  }

  void claim(const std::string& name, const std::string& expected,
             const std::string& computed) {
    claims_.push_back({name, expected, computed, expected == computed});
  }
  void claim(const std::string& name, std::int64_t expected,
             std::int64_t computed) {
    claim(name, std::to_string(expected), std::to_string(computed));
  }
  void claim(const std::string& name, const BigInt& expected,
             const BigInt& computed) {
    claim(name, expected.get_str(), computed.get_str());
  }
  void claim_true(const std::string& name, bool computed) {
    claim(name, "true", computed ? "true" : "false");
  }

  [[nodiscard]] bool all_pass() const {
    for (const Claim& c : claims_)
      if (!c.pass) return false;
    return true;
  }
  [[nodiscard]] const std::vector<Claim>& claims() const { return claims_; }

  [[nodiscard]] std::string json() const;
  [[nodiscard]] std::string text() const;

 private:
  std::string command_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
  std::vector<Claim> claims_;
};

}  // namespace octavian
