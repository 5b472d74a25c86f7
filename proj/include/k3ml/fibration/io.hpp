#pragma once

#include <filesystem>
#include <string>

#include "k3ml/fibration/curve.hpp"

namespace k3ml::fibration {

using CurveQ = Curve<exact::Rational>;
using CurveQd = Curve<exact::QuadFieldElement>;
using PointQd = ProjectivePoint<exact::QuadFieldElement>;

// Curve file: "key: value" lines, keys name, variable, a1 a2 a3 a4 a6.
// Coefficient lists are ascending integer lists "[c0, c1, ...]"; omitted a_i are 0.
CurveQ parse_curve(const std::string& text);
CurveQ read_curve(const std::filesystem::path& path);

struct SectionData {
  std::string name;
  std::string curve;  // name of the curve file the section lives on
  long field_d = 0;
  PointQd point;
};

// Section file: keys name, curve, field, variable, X, Y, Z. Each coordinate is a
// '*'-separated product of scalars ("p/q" or "a:b" for a + b sqrt(field)) and
// ascending coefficient lists "[c0, c1, ...]" with an optional "^e".
SectionData parse_section(const std::string& text);
SectionData read_section(const std::filesystem::path& path);

CurveQd to_quadratic(const CurveQ& e, long d);

// Coordinates of a section known to have rational coefficients.
ProjectivePoint<exact::Rational> rational_part(const PointQd& p);

std::filesystem::path fixture_dir();

}  // namespace k3ml::fibration

namespace k3ml::fibration {

PointQd to_quadratic_point(const ProjectivePoint<exact::Rational>& p, long d);

}  // namespace k3ml::fibration
