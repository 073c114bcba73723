#pragma once

#include "splitcubic/hesse.hpp"
#include "splitcubic/lattice.hpp"
#include "splitcubic/matrix.hpp"
#include "splitcubic/plane.hpp"
#include "splitcubic/polynomial.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace splitcubic {

using Json = nlohmann::ordered_json;

// Integers and rationals travel as decimal strings.
Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const FieldElement& x);
/// {"rows", "cols", "entries": [[...], ...]}
Json to_json(const IntMatrix& m);
Json to_json(const FieldMatrix& m);
/// [{"exponents": [...], "coefficient": {...}}, ...] in graded-lex order.
Json to_json(const MultiPoly& p);
Json to_json(const Plane& s);
Json to_json(const FlexDatum& flex);
Json to_json(const LatticeReport& r);
Json to_json(const QuadraticSurd& s);

/// Accepts decimal strings or JSON integers. ParseError on anything else.
Integer integer_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
IntMatrix load_int_matrix(const std::filesystem::path& path);

/// $SPLITCUBIC_GOLDEN_DIR if set, else the data directory of the source tree.
std::filesystem::path golden_dir();
/// The 19x19 matrix M + I stored in appendix_M_plus_I.json.
IntMatrix load_appendix_golden();

}  // namespace splitcubic
