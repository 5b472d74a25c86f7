#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace k3ml::verify {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct Report {
  std::string check_id;
  Json inputs = Json::object();
  Json computed = Json::object();
  Json expected = nullptr;  // {"values": {...}, "provenance": "..."} or null
  double tolerance = 0;
  Status status = Status::skipped;
  long long runtime_ms = 0;
  std::string note;  // failure detail; empty on success
};

Json to_json(const Report& r, bool with_runtime = true);
std::string to_json_text(const std::vector<Report>& reports, bool with_runtime = true);
std::string to_text(const std::vector<Report>& reports);
// check_id,status,tolerance,runtime_ms,computed
std::string to_csv(const std::vector<Report>& reports);

bool all_pass(const std::vector<Report>& reports);

// Measures wall time into a report.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace k3ml::verify
