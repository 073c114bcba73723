#pragma once

#include "splitcubic/matrix.hpp"

#include <vector>

namespace splitcubic {

template <class T>
struct RrefResult {
    Matrix<T> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with leftmost pivot column, first nonzero row,
/// pivot scaled to one. The output is the unique RREF of the row space, which
/// is what plane equality relies on.
RrefResult<FieldElement> rref(const FieldMatrix& m);
RrefResult<Rational> rref(const RationalMatrix& m);

std::size_t rank(const FieldMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. NotSquare for rectangular input.
Integer det_bareiss(const IntMatrix& a);

struct SnfResult {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;

    /// The min(rows, cols) diagonal entries of D.
    [[nodiscard]] std::vector<Integer> diagonal() const;
};

/// Smith normal form with U*A*V = D, U and V unimodular, D diagonal with
/// nonnegative entries forming a divisibility chain.
SnfResult snf(const IntMatrix& a);

/// Checks every SNF postcondition against the input.
bool snf_postcondition_holds(const IntMatrix& a, const SnfResult& result);

/// Basis of the rational null space, one vector per free column of the RREF,
/// each scaled to a primitive integer vector whose last nonzero entry is positive.
std::vector<std::vector<Integer>> rational_kernel_primitive(const IntMatrix& a);

bool is_symmetric(const IntMatrix& g);

/// Sylvester's criterion on leading principal minors. NotSymmetric on bad input.
bool is_positive_definite(const IntMatrix& g);

/// The k leading principal minors, k = 1..n.
std::vector<Integer> leading_minors(const IntMatrix& g);

}  // namespace splitcubic
