#pragma once

#include "splitcubic/errors.hpp"
#include "splitcubic/number_field.hpp"
#include "splitcubic/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace splitcubic {

/// Dense row-major matrix. Entries have no default value, so construction
/// always supplies a fill element (which fixes the field for FieldMatrix).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw Error(ErrorCode::DimensionMismatch,
                        "expected " + std::to_string(rows_ * cols_) + " entries, got " + std::to_string(data_.size()));
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] const std::vector<T>& entries() const { return data_; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    [[nodiscard]] Matrix transpose() const
    {
        std::vector<T> out;
        out.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i)
                out.push_back((*this)(i, j));
        return Matrix(cols_, rows_, std::move(out));
    }

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        std::vector<T> out;
        out.reserve(nr * nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                out.push_back((*this)(r0 + i, c0 + j));
        return Matrix(nr, nc, std::move(out));
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Lexicographic over (shape, entries).
    friend bool operator<(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_)
            return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_)
            return a.cols_ < b.cols_;
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            if (a.data_[k] < b.data_[k])
                return true;
            if (b.data_[k] < a.data_[k])
                return false;
        }
        return false;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows() || a.cols() == 0)
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    std::vector<T> out;
    out.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k)
                acc += a(i, k) * b(k, j);
            out.push_back(std::move(acc));
        }
    return Matrix<T>(a.rows(), b.cols(), std::move(out));
}

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using FieldMatrix = Matrix<FieldElement>;

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix int_identity(std::size_t n);
FieldMatrix field_identity(const FieldPtr& field, std::size_t n);
FieldMatrix field_zero(const FieldPtr& field, std::size_t rows, std::size_t cols);
FieldMatrix field_matrix(const FieldPtr& field, std::vector<std::vector<FieldElement>> rows);

RationalMatrix to_rational(const IntMatrix& m);
/// Scalar multiple of a field matrix.
FieldMatrix scaled(const FieldMatrix& m, const FieldElement& s);

/// Throws MixedField unless every entry lies in one field; returns that field.
FieldPtr common_field(const FieldMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace splitcubic
