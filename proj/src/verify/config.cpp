#include <cstdlib>
#include <fstream>
#include <string>

#include "common.hpp"
#include "k3ml/error.hpp"
#include "k3ml/fibration/io.hpp"

namespace k3ml::verify {

void RunConfig::validate() const {
  if (radius <= 0) throw DomainError("radius must be positive");
  if (!(quadrature_tol > 0)) throw DomainError("quadrature_tol must be positive");
  if (n_max <= 0) throw DomainError("n_max must be positive");
  if (p_max <= 0) throw DomainError("p_max must be positive");
  if (threads < 1) throw DomainError("threads must be at least 1");
}

RunConfig apply_environment(RunConfig cfg) {
  if (const char* env = std::getenv("K3ML_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cfg.threads = static_cast<unsigned>(v);
  }
  return cfg;
}

const Json& reference_values() {
  static const Json values = [] {
    const auto path = fibration::fixture_dir() / "reference_values.json";
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path.string());
    return Json::parse(in);
  }();
  return values;
}

namespace detail {

Json expected_entry(const std::string& key, const std::string& name) {
  const Json& ref = reference_values();
  if (!ref.contains(key)) throw DomainError("no reference value " + key);
  Json e;
  e["values"] = Json::object();
  e["values"][name] = ref[key]["value"];
  e["provenance"] = ref[key]["provenance"];
  return e;
}

Json big_to_json(const exact::BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

}  // namespace detail

}  // namespace k3ml::verify
