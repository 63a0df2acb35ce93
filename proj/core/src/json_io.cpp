#include "iwasawa/json_io.hpp"

#include <fstream>
#include <set>

#include "iwasawa/errors.hpp"

namespace iwasawa {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FormatError("expected a rational string \"p/q\", got " + j.dump());
}

Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const Gaussian& x) { return to_string(x); }

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw FormatError("ragged matrix row");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("algebra JSON must be an object");
  if (!j.contains("basis") || !j["basis"].is_array()) throw FormatError("missing 'basis' array");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw FormatError("basis names must be strings");
    names.push_back(b.get<std::string>());
    if (!seen.insert(names.back()).second) throw FormatError("duplicate basis name '" + names.back() + "'");
  }
  const std::size_t n = names.size();
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() != static_cast<long>(n))
      throw FormatError("'dim' does not match the number of basis names");
  }
  std::vector<Rational> table(n * n * n, Rational(0));
  auto index = [&](const Json& name) {
    if (!name.is_string()) throw FormatError("bracket operands must be basis names");
    auto s = name.get<std::string>();
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == s) return i;
    throw FormatError("unknown basis name '" + s + "'");
  };
  if (j.contains("structure")) {
    const auto& s = j["structure"];
    if (!s.is_array() || s.size() != n) throw FormatError("'structure' must have shape dim^3");
    for (std::size_t a = 0; a < n; ++a) {
      if (!s[a].is_array() || s[a].size() != n) throw FormatError("'structure' must have shape dim^3");
      for (std::size_t b = 0; b < n; ++b) {
        if (!s[a][b].is_array() || s[a][b].size() != n)
          throw FormatError("'structure' must have shape dim^3");
        for (std::size_t k = 0; k < n; ++k) table[(a * n + b) * n + k] = rational_from_json(s[a][b][k]);
      }
    }
    return LieAlgebra(std::move(names), std::move(table));
  }
  std::set<std::pair<std::size_t, std::size_t>> specified;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw FormatError("'brackets' must be an array");
    for (const auto& br : j["brackets"]) {
      if (!br.is_object() || !br.contains("left") || !br.contains("right") || !br.contains("result"))
        throw FormatError("each bracket needs 'left', 'right' and 'result'");
      std::size_t a = index(br["left"]);
      std::size_t b = index(br["right"]);
      auto key = std::minmax(a, b);
      if (!specified.insert(key).second)
        throw FormatError("bracket [" + names[a] + "," + names[b] + "] specified twice");
      if (!br["result"].is_object()) throw FormatError("bracket 'result' must be an object");
      for (auto it = br["result"].begin(); it != br["result"].end(); ++it) {
        std::size_t k = index(Json(it.key()));
        Rational v = rational_from_json(it.value());
        if (a == b && !is_zero(v)) throw FormatError("[" + names[a] + "," + names[a] + "] must be zero");
        table[(a * n + b) * n + k] = v;
        table[(b * n + a) * n + k] = -v;
      }
    }
  }
  return LieAlgebra(std::move(names), std::move(table));
}

Json algebra_to_json(const LieAlgebra& alg) {
  Json j;
  j["dim"] = alg.dim();
  j["basis"] = alg.names();
  Json brackets = Json::array();
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Json result = Json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(alg.c(a, b, k))) result[alg.names()[k]] = to_json(alg.c(a, b, k));
      if (!result.empty())
        brackets.push_back({{"left", alg.names()[a]}, {"right", alg.names()[b]}, {"result", result}});
    }
  j["brackets"] = brackets;
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("invalid JSON in '" + path + "': " + e.what());
  }
}

LieAlgebra load_algebra(const std::string& path) { return algebra_from_json(load_json(path)); }

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace iwasawa
