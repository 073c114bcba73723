#include "splitcubic/serialize.hpp"

#include "splitcubic/errors.hpp"

#include <cstdlib>
#include <fstream>

#ifndef SPLITCUBIC_DEFAULT_GOLDEN_DIR
#define SPLITCUBIC_DEFAULT_GOLDEN_DIR "data"
#endif

namespace splitcubic {

Json to_json(const Integer& v) { return to_string(v); }

Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const FieldElement& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coefficients())
        coeffs.push_back(to_json(c));
    return {{"field", x.field()->label()}, {"coefficients", coeffs}};
}

namespace {

template <class T>
Json matrix_json(const Matrix<T>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& v : m.row(i))
            row.push_back(to_json(v));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace

Json to_json(const IntMatrix& m) { return matrix_json(m); }

Json to_json(const FieldMatrix& m) { return matrix_json(m); }

Json to_json(const MultiPoly& p)
{
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({{"exponents", e}, {"coefficient", to_json(c)}});
    return out;
}

Json to_json(const Plane& s) { return to_json(s.canonical()); }

Json to_json(const FlexDatum& flex)
{
    const auto point = normalize_projective(flex.point);
    Json p = Json::array();
    Json t = Json::array();
    for (const auto& c : point)
        p.push_back(c.to_string("z"));
    for (const auto& c : flex.tangent)
        t.push_back(c.to_string("z"));
    return {{"point", p}, {"tangentCoefficients", t}};
}

Json to_json(const LatticeReport& r)
{
    Json snf = Json::array();
    for (const auto& d : r.snf_diagonal)
        snf.push_back(to_json(d));
    return {{"rank", r.rank},
            {"determinant", to_json(r.determinant)},
            {"snfDiagonal", snf},
            {"definiteness", to_string(r.definiteness)}};
}

Json to_json(const QuadraticSurd& s)
{
    return {{"p", to_json(s.p)}, {"q", to_json(s.q)}, {"D", to_json(s.d)}, {"text", s.to_string()}};
}

Integer integer_from_json(const Json& j)
{
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

IntMatrix int_matrix_from_json(const Json& j)
{
    const Json& rows = j.is_object() ? j.at("entries") : j;
    if (!rows.is_array())
        throw Error(ErrorCode::ParseError, "matrix entries must be an array of rows");
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Integer> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != c)
            throw Error(ErrorCode::ParseError, "matrix rows must be arrays of equal length");
        for (const auto& v : row)
            entries.push_back(integer_from_json(v));
    }
    if (j.is_object() && (j.value("rows", r) != r || j.value("cols", c) != c))
        throw Error(ErrorCode::ParseError, "declared shape does not match the entries");
    return IntMatrix(r, c, std::move(entries));
}

IntMatrix load_int_matrix(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    return int_matrix_from_json(j);
}

std::filesystem::path golden_dir()
{
    if (const char* env = std::getenv("SPLITCUBIC_GOLDEN_DIR"); env && *env)
        return env;
    return SPLITCUBIC_DEFAULT_GOLDEN_DIR;
}

IntMatrix load_appendix_golden() { return load_int_matrix(golden_dir() / "appendix_M_plus_I.json"); }

}  // namespace splitcubic
