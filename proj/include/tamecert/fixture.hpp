#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "tamecert/forms.hpp"
#include "tamecert/lie_algebra.hpp"

namespace tamecert::pipeline {

/// A Lie algebra with an optional complex structure and 2-form, as read from JSON:
///   { "name", "dim", "basis": [..], "brackets": [{"i", "j", "v": {"k": q}}],
///     "J": [[q]] (row-major), "omega": [{"i", "j", "v": q}] }
/// Rationals are JSON integers or "p/q" strings; indices are zero-based with i < j.
/// J is kept as a raw matrix so that an invalid structure can still be reported on.
struct Fixture {
  std::string name;
  LieAlgebra algebra;
  std::optional<Matrix> J;
  std::optional<forms::TwoForm> omega;
};

/// Throws ParseError naming the offending field, DimensionMismatch or JacobiViolation.
Fixture parse_fixture(const nlohmann::json& doc);
Fixture parse_fixture_text(const std::string& text);
Fixture load_fixture(const std::filesystem::path& path);

nlohmann::json to_json(const Fixture& f);

Scalar parse_rational(const nlohmann::json& value, const std::string& field);
nlohmann::json rational_json(const Scalar& q);
nlohmann::json vector_json(const Vector& v);
Vector parse_vector(const nlohmann::json& value, const std::string& field);

}  // namespace tamecert::pipeline
