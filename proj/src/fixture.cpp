#include "tamecert/fixture.hpp"

#include <fstream>
#include <sstream>

#include "tamecert/errors.hpp"

namespace tamecert::pipeline {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& field) {
  if (!obj.contains(key)) throw ParseError(field.empty() ? key : field + "." + key, "missing");
  return obj.at(key);
}

std::size_t parse_index(const json& v, const std::string& field, std::size_t bound) {
  if (!v.is_number_integer()) throw ParseError(field, "expected an integer");
  const auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= bound)
    throw ParseError(field, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(i);
}

std::size_t parse_key(const std::string& key, const std::string& field, std::size_t bound) {
  std::size_t pos = 0;
  long long k = -1;
  try {
    k = std::stoll(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty()) throw ParseError(field, "key '" + key + "' is not an index");
  if (k < 0 || static_cast<std::size_t>(k) >= bound) throw ParseError(field, "index " + key + " out of range");
  return static_cast<std::size_t>(k);
}

}  // namespace

Scalar parse_rational(const json& value, const std::string& field) {
  if (value.is_number_integer()) return Scalar(value.dump());
  if (value.is_string()) {
    try {
      return parse_scalar(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(field, e.what());
    }
  }
  throw ParseError(field, "expected an integer or a \"p/q\" string");
}

json rational_json(const Scalar& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Vector parse_vector(const json& value, const std::string& field) {
  if (!value.is_array()) throw ParseError(field, "expected an array");
  Vector v;
  for (std::size_t i = 0; i < value.size(); ++i) v.push_back(parse_rational(value[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

Fixture parse_fixture(const json& doc) {
  if (!doc.is_object()) throw ParseError("", "fixture must be a JSON object");
  Fixture f;
  const json& name = require(doc, "name", "");
  if (!name.is_string()) throw ParseError("name", "expected a string");
  f.name = name.get<std::string>();

  const json& dim_json = require(doc, "dim", "");
  if (!dim_json.is_number_integer() || dim_json.get<long long>() < 0) throw ParseError("dim", "expected a non-negative integer");
  const auto n = static_cast<std::size_t>(dim_json.get<long long>());

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const json& basis = doc.at("basis");
    if (!basis.is_array()) throw ParseError("basis", "expected an array of strings");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].is_string()) throw ParseError("basis[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(basis[i].get<std::string>());
    }
    if (labels.size() != n)
      throw ParseError("basis", "has " + std::to_string(labels.size()) + " labels, dim is " + std::to_string(n));
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  }

  std::vector<BracketEntry> brackets;
  const json& br = require(doc, "brackets", "");
  if (!br.is_array()) throw ParseError("brackets", "expected an array");
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::string field = "brackets[" + std::to_string(e) + "]";
    if (!br[e].is_object()) throw ParseError(field, "expected an object");
    BracketEntry entry;
    entry.i = parse_index(require(br[e], "i", field), field + ".i", n);
    entry.j = parse_index(require(br[e], "j", field), field + ".j", n);
    if (entry.i >= entry.j) throw ParseError(field, "requires i < j");
    const json& v = require(br[e], "v", field);
    if (!v.is_object()) throw ParseError(field + ".v", "expected an object of coefficients");
    for (auto it = v.begin(); it != v.end(); ++it) {
      const std::string vf = field + ".v." + it.key();
      const std::size_t k = parse_key(it.key(), vf, n);
      const Scalar q = parse_rational(it.value(), vf);
      if (q != 0) entry.value[k] = q;
    }
    brackets.push_back(std::move(entry));
  }
  try {
    f.algebra = LieAlgebra::create(labels, brackets);
  } catch (const DimensionMismatch& e) {
    throw ParseError("brackets", e.what());
  }

  if (doc.contains("J")) {
    const json& j = doc.at("J");
    if (!j.is_array() || j.size() != n) throw ParseError("J", "expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::string field = "J[" + std::to_string(r) + "]";
      const Vector row = parse_vector(j[r], field);
      if (row.size() != n) throw ParseError(field, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
    }
    f.J = std::move(m);
  }

  if (doc.contains("omega")) {
    const json& om = doc.at("omega");
    if (!om.is_array()) throw ParseError("omega", "expected an array");
    forms::TwoForm w(n);
    for (std::size_t e = 0; e < om.size(); ++e) {
      const std::string field = "omega[" + std::to_string(e) + "]";
      if (!om[e].is_object()) throw ParseError(field, "expected an object");
      const auto i = parse_index(require(om[e], "i", field), field + ".i", n);
      const auto j = parse_index(require(om[e], "j", field), field + ".j", n);
      if (i >= j) throw ParseError(field, "requires i < j");
      w.set(i, j, w.coefficient(i, j) + parse_rational(require(om[e], "v", field), field + ".v"));
    }
    f.omega = std::move(w);
  }
  return f;
}

Fixture parse_fixture_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_fixture(doc);
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture_text(ss.str());
}

json to_json(const Fixture& f) {
  const std::size_t n = f.algebra.dim();
  json doc = {{"name", f.name}, {"dim", n}, {"basis", f.algebra.labels()}, {"brackets", json::array()}};
  for (const auto& b : f.algebra.brackets()) {
    json v = json::object();
    for (const auto& [k, q] : b.value) v[std::to_string(k)] = rational_json(q);
    doc["brackets"].push_back({{"i", b.i}, {"j", b.j}, {"v", v}});
  }
  if (f.J) {
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r) rows.push_back(vector_json(f.J->row(r)));
    doc["J"] = rows;
  }
  if (f.omega) {
    json om = json::array();
    for (const auto& [i, j] : forms::index_pairs(n))
      if (f.omega->coefficient(i, j) != 0) om.push_back({{"i", i}, {"j", j}, {"v", rational_json(f.omega->coefficient(i, j))}});
    doc["omega"] = om;
  }
  return doc;
}

}  // namespace tamecert::pipeline
