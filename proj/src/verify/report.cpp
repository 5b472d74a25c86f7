#include "k3ml/verify/report.hpp"

#include <sstream>

namespace k3ml::verify {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

Json to_json(const Report& r, bool with_runtime) {
  Json j;
  j["check_id"] = r.check_id;
  j["inputs"] = r.inputs;
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  j["tolerance"] = r.tolerance;
  j["status"] = status_name(r.status);
  j["runtime_ms"] = with_runtime ? r.runtime_ms : 0;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string to_json_text(const std::vector<Report>& reports, bool with_runtime) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, with_runtime));
  return arr.dump(2) + "\n";
}

std::string to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << status_name(r.status) << "  " << r.check_id << "  " << r.computed.dump();
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "check_id,status,tolerance,runtime_ms,computed\n";
  for (const auto& r : reports) {
    std::string c = r.computed.dump();
    std::string quoted;
    for (char ch : c) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    os << r.check_id << ',' << status_name(r.status) << ',' << Json(r.tolerance).dump() << ',' << r.runtime_ms << ",\"" << quoted << "\"\n";
  }
  return os.str();
}

bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.status != Status::pass) return false;
  return true;
}

}  // namespace k3ml::verify
