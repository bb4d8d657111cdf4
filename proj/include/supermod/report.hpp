#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace supermod {

/// One checked claim and, on failure, a witness such as the offending residual.
struct Clause {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Result of a certificate or verification suite. Passes iff every clause
/// passes.
struct Report {
  std::string subject_key = "suite";  // "suite" or "example"
  std::string subject;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Clause> clauses;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;

  bool pass() const {
    for (const auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }

  Clause& add(std::string name, bool ok, std::string witness = {}) {
    clauses.push_back({std::move(name), ok, std::move(witness)});
    return clauses.back();
  }

  /// Appends another report's clauses, prefixing their names.
  void absorb(const Report& other, const std::string& prefix) {
    for (const auto& c : other.clauses) clauses.push_back({prefix + c.name, c.pass, c.witness});
    for (const auto& n : other.notes) notes.push_back(n);
  }

  nlohmann::ordered_json to_json(bool with_timing = true) const {
    nlohmann::ordered_json j;
    j[subject_key] = subject;
    for (const auto& [k, v] : params.items()) j[k] = v;
    j["seed"] = seed;
    j["pass"] = pass();
    auto& cl = j["clauses"] = nlohmann::ordered_json::array();
    for (const auto& c : clauses) {
      nlohmann::ordered_json e{{"name", c.name}, {"pass", c.pass}};
      if (!c.witness.empty()) e["witness"] = c.witness;
      cl.push_back(std::move(e));
    }
    if (!notes.empty()) j["notes"] = notes;
    if (with_timing) j["wall_time_ms"] = wall_ms;
    return j;
  }

  std::string to_text(bool color = false, bool with_timing = true) const {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    std::string s = subject_key + " " + subject;
    for (const auto& [k, v] : params.items()) s += " " + k + "=" + v.dump();
    s += " seed=" + std::to_string(seed) + "\n";
    for (const auto& n : notes) s += "  note: " + n + "\n";
    for (const auto& c : clauses) {
      s += std::string("  [") + (c.pass ? green : red) + (c.pass ? "PASS" : "FAIL") + reset +
           "] " + c.name;
      if (!c.witness.empty()) s += "  -- " + c.witness;
      s += "\n";
    }
    s += std::string("result: ") + (pass() ? green : red) + (pass() ? "PASS" : "FAIL") + reset;
    if (with_timing) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", wall_ms);
      s += buf;
    }
    return s + "\n";
  }
};

}  // namespace supermod
