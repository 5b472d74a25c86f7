#pragma once

#include <cmath>
#include <exception>
#include <string>

#include "k3ml/exact/rational.hpp"
#include "k3ml/verify/checks.hpp"

namespace k3ml::verify::detail {

constexpr double kPi = 3.14159265358979323846;

// Runs body(report) -> bool pass; exceptions become a fail report with the message as note.
template <class Body>
Report run_check(std::string id, Json inputs, double tolerance, Body&& body) {
  Report r;
  r.check_id = std::move(id);
  r.inputs = std::move(inputs);
  r.tolerance = tolerance;
  const Stopwatch clock;
  try {
    r.status = body(r) ? Status::pass : Status::fail;
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.note = e.what();
  }
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

// {"values": {name: reference value}, "provenance": ...} for a key of reference_values().
Json expected_entry(const std::string& key, const std::string& name);

Json big_to_json(const exact::BigInt& v);

inline bool within(double a, double b, double tol) { return std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= tol; }

}  // namespace k3ml::verify::detail
