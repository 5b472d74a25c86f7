#include "k3ml/fibration/io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace k3ml::fibration {

using exact::PolyQ;
using exact::PolyQd;
using exact::QuadFieldElement;
using exact::Rational;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> parse_keys(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t start = offset;
    offset += line.size() + 1;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", start);
    kv[trim(line.substr(0, colon))] = trim(line.substr(colon + 1));
  }
  return kv;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

QuadFieldElement parse_scalar(const std::string& tok, long d) {
  const auto colon = tok.find(':');
  if (colon == std::string::npos) return QuadFieldElement(exact::parse_rational(tok));
  if (d == 0) throw ParseError("irrational coefficient '" + tok + "' without a field", 0);
  return QuadFieldElement(exact::parse_rational(tok.substr(0, colon)), exact::parse_rational(tok.substr(colon + 1)), d);
}

std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = body.find(',', pos);
    out.push_back(trim(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

PolyQd parse_product(const std::string& text, long d, const std::string& var) {
  PolyQd acc = PolyQd::constant(QuadFieldElement(Rational(1), 0, d), var);
  std::size_t pos = 0;
  for (;;) {
    const auto star = text.find('*', pos);
    std::string tok = trim(text.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
    if (tok.empty()) throw ParseError("empty factor in '" + text + "'", pos);
    unsigned exponent = 1;
    std::string base = tok;
    const auto close = tok.rfind(']');
    const auto caret = tok.rfind('^');
    if (caret != std::string::npos && (close == std::string::npos || caret > close)) {
      base = trim(tok.substr(0, caret));
      exponent = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
    }
    PolyQd factor;
    if (base.front() == '[') {
      if (base.back() != ']') throw ParseError("unterminated coefficient list", pos);
      std::vector<QuadFieldElement> coeffs;
      for (const auto& c : split_list(base.substr(1, base.size() - 2))) coeffs.push_back(parse_scalar(c, d));
      factor = PolyQd(std::move(coeffs), var);
    } else {
      factor = PolyQd::constant(parse_scalar(base, d), var);
    }
    acc *= factor.pow(exponent);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return acc.with_variable(var);
}

PolyQ parse_int_list(const std::string& text, const std::string& var) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("expected '[...]' in '" + text + "'", 0);
  std::vector<Rational> coeffs;
  if (!trim(t.substr(1, t.size() - 2)).empty())
    for (const auto& c : split_list(t.substr(1, t.size() - 2))) coeffs.push_back(exact::parse_rational(c));
  return PolyQ(std::move(coeffs), var);
}

}  // namespace

CurveQ parse_curve(const std::string& text) {
  auto kv = parse_keys(text);
  const std::string var = kv.count("variable") ? kv["variable"] : "s";
  CurveQ e;
  e.name = kv.count("name") ? kv["name"] : "";
  auto get = [&](const char* key) { return kv.count(key) ? parse_int_list(kv[key], var) : PolyQ({}, var); };
  e.a1 = get("a1");
  e.a2 = get("a2");
  e.a3 = get("a3");
  e.a4 = get("a4");
  e.a6 = get("a6");
  return e;
}

CurveQ read_curve(const std::filesystem::path& path) { return parse_curve(slurp(path)); }

SectionData parse_section(const std::string& text) {
  auto kv = parse_keys(text);
  SectionData out;
  out.name = kv.count("name") ? kv["name"] : "";
  out.curve = kv.count("curve") ? kv["curve"] : "";
  out.field_d = kv.count("field") ? std::stol(kv["field"]) : 0;
  if (out.field_d != 0 && !exact::valid_field_parameter(out.field_d))
    throw DomainError("section field parameter " + std::to_string(out.field_d) + " is not squarefree");
  const std::string var = kv.count("variable") ? kv["variable"] : "s";
  for (const char* key : {"X", "Y", "Z"})
    if (!kv.count(key)) throw ParseError(std::string("section is missing coordinate ") + key, 0);
  out.point.X = RationalFunction<QuadFieldElement>(parse_product(kv["X"], out.field_d, var));
  out.point.Y = RationalFunction<QuadFieldElement>(parse_product(kv["Y"], out.field_d, var));
  out.point.Z = RationalFunction<QuadFieldElement>(parse_product(kv["Z"], out.field_d, var));
  return out;
}

SectionData read_section(const std::filesystem::path& path) { return parse_section(slurp(path)); }

CurveQd to_quadratic(const CurveQ& e, long d) {
  CurveQd out;
  out.name = e.name;
  out.field_d = d;
  out.a1 = exact::to_quadratic(e.a1, d);
  out.a2 = exact::to_quadratic(e.a2, d);
  out.a3 = exact::to_quadratic(e.a3, d);
  out.a4 = exact::to_quadratic(e.a4, d);
  out.a6 = exact::to_quadratic(e.a6, d);
  return out;
}

namespace {

PolyQ rational_poly(const PolyQd& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) {
    if (!x.is_rational()) throw DomainError("section coordinate is not rational");
    c.push_back(x.a());
  }
  return PolyQ(std::move(c), p.variable());
}

RationalFunction<Rational> rational_rf(const RationalFunction<QuadFieldElement>& f) {
  return RationalFunction<Rational>(rational_poly(f.numerator()), rational_poly(f.denominator()));
}

}  // namespace

ProjectivePoint<Rational> rational_part(const PointQd& p) {
  return {rational_rf(p.X), rational_rf(p.Y), rational_rf(p.Z)};
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("K3ML_FIXTURES")) return env;
  return K3ML_FIXTURE_DIR;
}

}  // namespace k3ml::fibration

namespace k3ml::fibration {

PointQd to_quadratic_point(const ProjectivePoint<Rational>& p, long d) {
  auto lift_rf = [d](const RationalFunction<Rational>& f) {
    return RationalFunction<QuadFieldElement>(exact::to_quadratic(f.numerator(), d), exact::to_quadratic(f.denominator(), d));
  };
  return {lift_rf(p.X), lift_rf(p.Y), lift_rf(p.Z)};
}

}  // namespace k3ml::fibration
