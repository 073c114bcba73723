#pragma once

// Reference computations that avoid the library's own algorithms. They are
// deliberately naive: Laplace expansion, dense Gaussian elimination over Q,
// schoolbook polynomial products.

#include "splitcubic/matrix.hpp"
#include "splitcubic/number_field.hpp"
#include "splitcubic/plane.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using splitcubic::FieldElement;
using splitcubic::FieldMatrix;
using splitcubic::FieldPtr;
using splitcubic::Integer;
using splitcubic::IntMatrix;
using splitcubic::Rational;

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t laplace_det(const SmallMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    std::int64_t det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        SmallMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        const std::int64_t term = m[0][c] * laplace_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors d_k / d_{k-1} from the gcds d_k of all k x k minors;
/// zero once the minors vanish. Length min(rows, cols).
inline std::vector<std::int64_t> invariant_factors(const SmallMatrix& a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    const std::size_t n = std::min(rows, cols);
    std::vector<std::int64_t> out;
    std::int64_t prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        std::int64_t g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                SmallMatrix minor(k, std::vector<std::int64_t>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor[i][j] = a[r[i]][c[j]];
                g = std::gcd(g, std::abs(laplace_det(minor)));
            }
        if (g == 0) {
            out.resize(n, 0);
            return out;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline IntMatrix to_int_matrix(const SmallMatrix& a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    IntMatrix m(rows, cols, Integer(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(a[i][j]);
    return m;
}

inline SmallMatrix random_small_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    SmallMatrix m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
        for (auto& v : row)
            v = dist(rng);
    return m;
}

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0)
                continue;
            const Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank over a number field K of degree n, computed as (rank over Q of the
/// realified matrix) / n. Each entry x becomes the n x n matrix of
/// multiplication by x in the power basis, built from schoolbook products.
inline std::size_t realified_rank(const FieldMatrix& m)
{
    const FieldPtr field = splitcubic::common_field(m);
    const std::size_t n = field->degree();
    std::vector<std::vector<Rational>> big(m.rows() * n, std::vector<Rational>(m.cols() * n, Rational(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<Rational> basis(n, Rational(0));
                basis[k] = 1;
                const FieldElement product = m(i, j) * FieldElement(field, basis);
                for (std::size_t r = 0; r < n; ++r)
                    big[i * n + r][j * n + k] = product.coefficients()[r];
            }
    return rational_rank(big) / n;
}

/// Intersection number read from the realified rank of the stacked systems.
inline int intersection_by_realification(const splitcubic::Plane& s, const splitcubic::Plane& t)
{
    std::vector<FieldElement> entries = s.canonical().entries();
    entries.insert(entries.end(), t.canonical().entries().begin(), t.canonical().entries().end());
    const std::size_t r = realified_rank(FieldMatrix(6, 6, entries));
    switch (r) {
    case 6:
        return 0;
    case 5:
        return 1;
    case 4:
        return -1;
    default:
        return 3;
    }
}

/// Positive definiteness by rational LDL^T: all pivots positive.
inline bool ldl_positive_definite(const IntMatrix& g)
{
    const std::size_t n = g.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(g(i, j));
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

/// Coefficients of x*y reduced by the monic modulus, schoolbook style.
inline std::vector<Rational> schoolbook_product(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                                const std::vector<Rational>& modulus)
{
    const std::size_t n = modulus.size() - 1;
    std::vector<Rational> prod(2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            prod[i + j] += x[i] * y[j];
    for (std::size_t d = prod.size(); d-- > n;) {
        const Rational lead = prod[d];
        if (lead == 0)
            continue;
        for (std::size_t k = 0; k <= n; ++k)
            prod[d - n + k] -= lead * modulus[k];
    }
    prod.resize(n);
    return prod;
}

inline FieldElement random_element(std::mt19937& rng, const FieldPtr& field, int bound = 9)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    std::vector<Rational> c(field->degree());
    for (auto& v : c) {
        v = Rational(num(rng), den(rng));
        v.canonicalize();
    }
    return FieldElement(field, c);
}

}  // namespace oracle
