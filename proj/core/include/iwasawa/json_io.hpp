#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "iwasawa/lie_algebra.hpp"

namespace iwasawa {

using Json = nlohmann::json;

/// Reads the structure-constant format
///   {"dim": n, "basis": [...], "brackets": [{"left": "X", "right": "Y", "result": {"Z": "1"}}]}
/// Rationals are "p/q" strings (bare JSON integers are accepted too). Omitted brackets are
/// zero, antisymmetric completion is implicit, and specifying a pair twice (in either
/// order) is a FormatError. A raw "structure" table c[i][j][k] may be given instead of
/// "brackets"; it is taken verbatim, without completion.
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& alg);

LieAlgebra load_algebra(const std::string& path);
void save_json(const std::string& path, const Json& j);
Json load_json(const std::string& path);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& x);
Json to_json(const QVec& v);
Json to_json(const QMatrix& m);
Json to_json(const Gaussian& x);
QMatrix matrix_from_json(const Json& j);

}  // namespace iwasawa
