#include "splitcubic/lattice.hpp"

#include "splitcubic/errors.hpp"
#include "splitcubic/linalg.hpp"

namespace splitcubic {

namespace {

// n = f^2 * core with core square-free; returns {f, core}.
std::pair<Integer, Integer> split_square(const Integer& n)
{
    Integer f = 1;
    Integer core = n;
    for (Integer p = 2; p * p <= abs(core); ++p)
        while (core % (p * p) == 0) {
            core /= p * p;
            f *= p;
        }
    return {f, core};
}

}  // namespace

std::string to_string(Definiteness d)
{
    switch (d) {
    case Definiteness::Positive:
        return "positive";
    case Definiteness::Negative:
        return "negative";
    case Definiteness::Indefinite:
        return "indefinite";
    case Definiteness::Degenerate:
        return "degenerate";
    }
    return "?";
}

LatticeReport lattice_invariants(const IntMatrix& g)
{
    if (!is_symmetric(g))
        throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
    LatticeReport r;
    r.rank = rank(g);
    r.determinant = g.rows() == 0 ? Integer(1) : det_bareiss(g);
    r.snf_diagonal = snf(g).diagonal();
    if (r.rank < g.rows()) {
        r.definiteness = Definiteness::Degenerate;
        return r;
    }
    const auto minors = leading_minors(g);
    bool positive = true;
    bool negative = true;
    for (std::size_t k = 0; k < minors.size(); ++k) {
        positive = positive && minors[k] > 0;
        negative = negative && (k % 2 == 0 ? minors[k] < 0 : minors[k] > 0);
    }
    r.definiteness = positive ? Definiteness::Positive
                     : negative ? Definiteness::Negative
                                : Definiteness::Indefinite;
    return r;
}

IntMatrix u_lattice(const Integer& n, std::size_t copies)
{
    IntMatrix g(2 * copies, 2 * copies, Integer(0));
    for (std::size_t i = 0; i < copies; ++i) {
        g(2 * i, 2 * i + 1) = n;
        g(2 * i + 1, 2 * i) = n;
    }
    return g;
}

IntMatrix im_phi_gram(unsigned d)
{
    if (d < 3)
        throw Error(ErrorCode::InvalidArgument, "im_phi_gram needs d >= 3");
    const std::size_t g = (d - 1) * (d - 2) / 2;
    return u_lattice(-Integer(d), 2 * g * g);
}

IntMatrix im_phi_flip(unsigned d)
{
    const std::size_t n = im_phi_gram(d).rows();
    IntMatrix b = int_identity(n);
    for (std::size_t i = 1; i < n; i += 2)
        b(i, i) = -1;
    return b;
}

bool congruence_check(const IntMatrix& b, const IntMatrix& g1, const IntMatrix& g2)
{
    const std::size_t n = b.rows();
    if (!b.is_square() || g1.rows() != n || g1.cols() != n || g2.rows() != n || g2.cols() != n)
        throw Error(ErrorCode::SizeMismatch, "base change and Gram matrices must share one square size");
    if (n == 0)
        return true;
    if (abs(det_bareiss(b)) != 1)
        return false;
    return b.transpose() * g1 * b == g2;
}

bool complement_disc_check(const Integer& d_l, const Integer& d_t, std::size_t r_l, std::size_t r_t,
                           std::size_t ambient_rank)
{
    return abs(d_l) == abs(d_t) && r_l + r_t == ambient_rank;
}

std::string QuadraticSurd::to_string() const
{
    const std::string root = d == -1 ? "i" : "sqrt(" + splitcubic::to_string(d) + ")";
    if (q == 0)
        return splitcubic::to_string(p);
    const Integer den = lcm(p.get_den(), q.get_den());
    const Integer pn = p.get_num() * (den / p.get_den());
    const Integer qn = q.get_num() * (den / q.get_den());
    std::string out;
    if (pn != 0)
        out = splitcubic::to_string(pn);
    if (qn == 1)
        out += pn != 0 ? "+" + root : root;
    else if (qn == -1)
        out += "-" + root;
    else
        out += (qn > 0 && pn != 0 ? "+" : "") + splitcubic::to_string(qn) + "*" + root;
    return den == 1 ? out : "(" + out + ")/" + splitcubic::to_string(den);
}

ShiodaMitaniResult shioda_mitani(const Integer& a, const Integer& b, const Integer& c)
{
    const Integer delta = b * b - 4 * a * c;
    if (a <= 0 || delta >= 0)
        throw Error(ErrorCode::NotPositiveDefinite, "need a > 0 and b^2 - 4ac < 0, got a = " + to_string(a) +
                                                         ", delta = " + to_string(delta));
    const auto [f, core] = split_square(delta);
    ShiodaMitaniResult r;
    r.delta = delta;
    r.tau1 = {Rational(-b, 2 * a), Rational(f, 2 * a), core};
    r.tau2 = {Rational(b, 2), Rational(f, 2), core};
    r.tau1.p.canonicalize();
    r.tau1.q.canonicalize();
    r.tau2.p.canonicalize();
    r.tau2.q.canonicalize();
    r.trans_lattice = IntMatrix(2, 2, std::vector<Integer>{-6 * a, -3 * b, -3 * b, -6 * c});
    return r;
}

}  // namespace splitcubic
