#include "splitcubic/matrix.hpp"

#include <sstream>

namespace splitcubic {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Integer> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (long v : row)
            entries.emplace_back(v);
    }
    return IntMatrix(r, c, std::move(entries));
}

IntMatrix int_identity(std::size_t n)
{
    IntMatrix m(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

FieldMatrix field_identity(const FieldPtr& field, std::size_t n)
{
    FieldMatrix m = field_zero(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = FieldElement(field, Rational(1));
    return m;
}

FieldMatrix field_zero(const FieldPtr& field, std::size_t rows, std::size_t cols)
{
    return FieldMatrix(rows, cols, FieldElement(field));
}

FieldMatrix field_matrix(const FieldPtr& field, std::vector<std::vector<FieldElement>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<FieldElement> entries;
    entries.reserve(r * c);
    for (auto& row : rows) {
        if (row.size() != c)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (auto& v : row) {
            require_same_field(field, v.field());
            entries.push_back(std::move(v));
        }
    }
    return FieldMatrix(r, c, std::move(entries));
}

RationalMatrix to_rational(const IntMatrix& m)
{
    std::vector<Rational> entries;
    entries.reserve(m.rows() * m.cols());
    for (const auto& v : m.entries())
        entries.emplace_back(v);
    return RationalMatrix(m.rows(), m.cols(), std::move(entries));
}

FieldMatrix scaled(const FieldMatrix& m, const FieldElement& s)
{
    std::vector<FieldElement> entries;
    entries.reserve(m.rows() * m.cols());
    for (const auto& v : m.entries())
        entries.push_back(v * s);
    return FieldMatrix(m.rows(), m.cols(), std::move(entries));
}

FieldPtr common_field(const FieldMatrix& m)
{
    if (m.empty())
        return NumberField::rationals();
    const FieldPtr& field = m.entries().front().field();
    for (const auto& v : m.entries())
        require_same_field(field, v.field());
    return field;
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << m(i, j).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace splitcubic
