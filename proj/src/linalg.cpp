#include "splitcubic/linalg.hpp"

#include <algorithm>

namespace splitcubic {

namespace {

Rational reciprocal(const Rational& x) { return 1 / x; }
FieldElement reciprocal(const FieldElement& x) { return nf_inv(x); }

template <class T>
RrefResult<T> rref_impl(Matrix<T> a)
{
    RrefResult<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < a.rows() && is_zero(a(pivot_row, c)))
            ++pivot_row;
        if (pivot_row == a.rows())
            continue;
        a.swap_rows(r, pivot_row);
        const T inv = reciprocal(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            if (!is_zero(a(r, j)))
                a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c)))
                continue;
            const T factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!is_zero(a(r, j)))
                    a(i, j) -= factor * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(a);
    return out;
}

// Forward elimination only; enough for rank.
template <class T>
std::size_t rank_impl(Matrix<T> a)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < a.rows() && is_zero(a(pivot_row, c)))
            ++pivot_row;
        if (pivot_row == a.rows())
            continue;
        a.swap_rows(r, pivot_row);
        const T inv = reciprocal(a(r, c));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (is_zero(a(i, c)))
                continue;
            const T factor = a(i, c) * inv;
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                if (!is_zero(a(r, j)))
                    a(i, j) -= factor * a(r, j);
            a(i, c) = a(i, c) - a(i, c);
        }
        ++r;
    }
    return r;
}

void row_axpy(IntMatrix& m, std::size_t target, const Integer& q, std::size_t source)
{
    // row_target -= q * row_source
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(source, j) != 0)
            m(target, j) -= q * m(source, j);
}

void col_axpy(IntMatrix& m, std::size_t target, const Integer& q, std::size_t source)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, source) != 0)
            m(i, target) -= q * m(i, source);
}

}  // namespace

RrefResult<FieldElement> rref(const FieldMatrix& m)
{
    common_field(m);
    return rref_impl(m);
}

RrefResult<Rational> rref(const RationalMatrix& m) { return rref_impl(m); }

std::size_t rank(const FieldMatrix& m)
{
    common_field(m);
    return rank_impl(m);
}

std::size_t rank(const IntMatrix& m) { return rank_impl(to_rational(m)); }

Integer det_bareiss(const IntMatrix& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<Integer> SnfResult::diagonal() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        out.push_back(D(i, i));
    return out;
}

SnfResult snf(const IntMatrix& a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    SnfResult out{a, int_identity(rows), int_identity(cols)};
    IntMatrix& D = out.D;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool any_left = true;
        while (true) {
            // smallest nonzero entry of the trailing block goes to (t, t)
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (D(i, j) != 0 && (pi == rows || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                any_left = false;
                break;
            }
            D.swap_rows(t, pi);
            out.U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            out.V.swap_cols(t, pj);

            bool remainder_left = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D(i, t) == 0)
                    continue;
                const Integer q = D(i, t) / D(t, t);
                row_axpy(D, i, q, t);
                row_axpy(out.U, i, q, t);
                remainder_left = remainder_left || D(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D(t, j) == 0)
                    continue;
                const Integer q = D(t, j) / D(t, t);
                col_axpy(D, j, q, t);
                col_axpy(out.V, j, q, t);
                remainder_left = remainder_left || D(t, j) != 0;
            }
            if (remainder_left)
                continue;

            // divisibility: pull an offending row into row t and start over
            std::size_t offending = rows;
            for (std::size_t i = t + 1; i < rows && offending == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        offending = i;
                        break;
                    }
            if (offending == rows)
                break;
            row_axpy(D, t, Integer(-1), offending);
            row_axpy(out.U, t, Integer(-1), offending);
        }
        if (!any_left)
            break;
        if (D(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j)
                D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < rows; ++j)
                out.U(t, j) = -out.U(t, j);
        }
    }
#ifndef NDEBUG
    if (!snf_postcondition_holds(a, out))
        throw Error(ErrorCode::VerificationFailed, "Smith normal form postcondition violated");
#endif
    return out;
}

bool snf_postcondition_holds(const IntMatrix& a, const SnfResult& r)
{
    if (r.U.rows() != a.rows() || r.V.rows() != a.cols() || r.D.rows() != a.rows() || r.D.cols() != a.cols())
        return false;
    if (abs(det_bareiss(r.U)) != 1 || abs(det_bareiss(r.V)) != 1)
        return false;
    if (a.rows() > 0 && a.cols() > 0 && r.U * a * r.V != r.D)
        return false;
    for (std::size_t i = 0; i < r.D.rows(); ++i)
        for (std::size_t j = 0; j < r.D.cols(); ++j)
            if (i != j && r.D(i, j) != 0)
                return false;
    const auto diag = r.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0)
            return false;
        if (i + 1 < diag.size()) {
            if (diag[i] == 0 && diag[i + 1] != 0)
                return false;
            if (diag[i] != 0 && !mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()))
                return false;
        }
    }
    return true;
}

std::vector<std::vector<Integer>> rational_kernel_primitive(const IntMatrix& a)
{
    const auto reduced = rref(to_rational(a));
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : reduced.pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < reduced.pivots.size(); ++r)
            v[reduced.pivots[r]] = -reduced.reduced(r, free);

        Integer den = 1;
        for (const auto& x : v)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> w;
        w.reserve(n);
        Integer content = 0;
        for (const auto& x : v) {
            Integer scaled_entry = x.get_num() * (den / x.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled_entry.get_mpz_t());
            w.push_back(std::move(scaled_entry));
        }
        auto last = std::find_if(w.rbegin(), w.rend(), [](const Integer& x) { return x != 0; });
        if (last != w.rend() && *last < 0)
            content = -content;
        for (auto& x : w)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        basis.push_back(std::move(w));
    }
    return basis;
}

bool is_symmetric(const IntMatrix& g)
{
    if (!g.is_square())
        return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j)
            if (g(i, j) != g(j, i))
                return false;
    return true;
}

std::vector<Integer> leading_minors(const IntMatrix& g)
{
    if (!g.is_square())
        throw Error(ErrorCode::NotSquare, "leading minors of a rectangular matrix");
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= g.rows(); ++k)
        out.push_back(det_bareiss(g.block(0, 0, k, k)));
    return out;
}

bool is_positive_definite(const IntMatrix& g)
{
    if (!is_symmetric(g))
        throw Error(ErrorCode::NotSymmetric, "positive definiteness needs a symmetric matrix");
    for (const auto& minor : leading_minors(g))
        if (minor <= 0)
            return false;
    return true;
}

}  // namespace splitcubic
