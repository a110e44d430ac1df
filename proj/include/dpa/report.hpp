#pragma once
#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace dpa {

struct Failure {
  std::string input, lhs, rhs;
};

struct Check {
  std::string law;     // law or sub-check name
  std::string diagram; // diagram or relation name
  long long arity = 0;
  long long instances = 0;
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
};

struct Report {
  std::string scenario;
  int chr = 0;
  double wall_ms = 0;
  std::vector<Check> checks;

  bool pass() const {
    for (auto &c : checks)
      if (!c.pass()) return false;
    return true;
  }
  long long instances() const {
    long long n = 0;
    for (auto &c : checks) n += c.instances;
    return n;
  }
  nlohmann::json to_json() const {
    nlohmann::json out;
    out["scenario"] = scenario;
    out["characteristic"] = chr;
    out["instances"] = instances();
    out["wall_ms"] = wall_ms;
    out["pass"] = pass();
    out["checks"] = nlohmann::json::array();
    for (auto &c : checks) {
      nlohmann::json jc;
      jc["law"] = c.law;
      jc["diagram"] = c.diagram;
      jc["arity"] = c.arity;
      jc["instances"] = c.instances;
      jc["failures"] = nlohmann::json::array();
      for (auto &f : c.failures)
        jc["failures"].push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
      out["checks"].push_back(jc);
    }
    return out;
  }
  std::string text() const {
    std::string s;
    for (auto &c : checks) {
      s += c.law + " " + c.diagram + " arity<=" + std::to_string(c.arity) + ": " +
           std::to_string(c.instances) + " instances, " +
           (c.pass() ? "PASS" : std::to_string(c.failures.size()) + " FAILURES") + "\n";
      for (auto &f : c.failures)
        s += "  input=" + f.input + "\n    lhs=" + f.lhs + "\n    rhs=" + f.rhs + "\n";
    }
    return s;
  }
};

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

} // namespace dpa
