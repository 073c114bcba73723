#include "oracles.hpp"

#include "splitcubic/errors.hpp"
#include "splitcubic/hesse.hpp"
#include "splitcubic/linalg.hpp"
#include "splitcubic/polynomial.hpp"

#include <doctest.h>

using namespace splitcubic;

namespace {

FieldElement q(const FieldPtr& f, long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return FieldElement(f, r);
}

MultiPoly fermat6(const FieldPtr& f)
{
    MultiPoly p(f, 6);
    for (unsigned i = 0; i < 6; ++i) {
        Exponents e(6, 0);
        e[i] = 3;
        p.add_term(e, q(f, 1));
    }
    return p;
}

MultiPoly random_cubic(std::mt19937& rng, const FieldPtr& f)
{
    MultiPoly p(f, 3);
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; a + b <= 3; ++b)
            p.add_term({a, b, 3 - a - b}, oracle::random_element(rng, f, 3));
    return p;
}

FieldMatrix random_matrix(std::mt19937& rng, const FieldPtr& f)
{
    FieldMatrix m = field_zero(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = oracle::random_element(rng, f, 2);
    return m;
}

}  // namespace

TEST_CASE("graded lex order and storage invariants")
{
    const auto f = NumberField::eisenstein();
    MultiPoly p(f, 3);
    p.add_term({0, 0, 1}, q(f, 1));
    p.add_term({1, 0, 0}, q(f, 2));
    p.add_term({0, 2, 0}, q(f, 3));
    p.add_term({0, 0, 1}, q(f, -1));
    std::vector<Exponents> order;
    for (const auto& [e, c] : p.terms())
        order.push_back(e);
    CHECK(order == std::vector<Exponents>{{0, 2, 0}, {1, 0, 0}});
    CHECK(p.total_degree() == 2);
    CHECK_FALSE(p.is_homogeneous());
    CHECK_THROWS_AS(p.add_term({1, 1}, q(f, 1)), Error);
}

TEST_CASE("substitute_linear")
{
    const auto f = NumberField::eisenstein();
    const FieldElement w = omega(f);
    const MultiPoly fermat = hesse_form(FieldElement(f));
    FieldMatrix g = field_identity(f, 3);
    g(2, 2) = w;
    CHECK(substitute_linear(fermat, g) == fermat);
    CHECK(substitute_linear(fermat, field_identity(f, 3)) == fermat);

    const MultiPoly h2 = hesse_form(q(f, 2));
    FieldMatrix cyc = field_zero(f, 3, 3);
    cyc(0, 1) = cyc(1, 2) = cyc(2, 0) = q(f, 1);
    CHECK(substitute_linear(h2, cyc) == h2);

    CHECK_THROWS_AS(substitute_linear(h2, field_identity(f, 2)), Error);
}

TEST_CASE("substitute_linear composes")
{
    const auto f = NumberField::eisenstein();
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly p = random_cubic(rng, f);
        const FieldMatrix g = random_matrix(rng, f);
        const FieldMatrix h = random_matrix(rng, f);
        CHECK(substitute_linear(p, g * h) == substitute_linear(substitute_linear(p, g), h));
        // pointwise: (F o g)(x) = F(g x)
        std::vector<FieldElement> x{oracle::random_element(rng, f), oracle::random_element(rng, f),
                                    oracle::random_element(rng, f)};
        std::vector<FieldElement> gx;
        for (std::size_t i = 0; i < 3; ++i)
            gx.push_back(g(i, 0) * x[0] + g(i, 1) * x[1] + g(i, 2) * x[2]);
        CHECK(substitute_linear(p, g).evaluate(x) == p.evaluate(gx));
    }
}

TEST_CASE("restrict_to_subspace")
{
    const auto f = NumberField::eisenstein();
    const MultiPoly x0 = fermat6(f);

    FieldMatrix antidiag = field_zero(f, 3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        antidiag(i, i) = q(f, 1);
        antidiag(i, i + 3) = q(f, 1);
    }
    CHECK(restrict_to_subspace(x0, antidiag).is_zero());

    CHECK(restrict_to_subspace(x0, field_zero(f, 0, 6)) == x0);

    // y = 2x, i.e. z_{i+3} - 2 z_i = 0, solved for z_0..z_2
    FieldMatrix diag2 = field_zero(f, 3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        diag2(i, i) = q(f, 1);
        diag2(i, i + 3) = q(f, -1, 2);
    }
    const MultiPoly r = restrict_to_subspace(x0, diag2);
    CHECK(r.variable_count() == 3);
    // in terms of y: y^3/8 + y^3 for each pair
    CHECK(r.coefficient({3, 0, 0}) == q(f, 9, 8));
    MultiPoly minus(f, 6);
    for (unsigned i = 0; i < 3; ++i) {
        Exponents e(6, 0);
        e[i] = 3;
        minus.add_term(e, q(f, 1));
        e[i] = 0;
        e[i + 3] = 3;
        minus.add_term(e, q(f, -1));
    }
    const MultiPoly r2 = restrict_to_subspace(minus, diag2);
    CHECK(r2.coefficient({3, 0, 0}) == q(f, 1, 8) - q(f, 1));
    CHECK(r2.is_homogeneous());

    FieldMatrix bad = antidiag;
    bad(0, 0) = q(f, 2);
    CHECK_THROWS_AS(restrict_to_subspace(x0, bad), Error);
    try {
        restrict_to_subspace(x0, rref(field_identity(f, 6)).reduced);
        FAIL("expected InconsistentSystem");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentSystem);
    }
}

TEST_CASE("restriction of a homogeneous form stays homogeneous")
{
    const auto f = NumberField::eisenstein();
    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly p = random_cubic(rng, f);
        FieldMatrix line = field_zero(f, 1, 3);
        for (std::size_t j = 0; j < 3; ++j)
            line(0, j) = oracle::random_element(rng, f, 2);
        if (line(0, 0).is_zero() && line(0, 1).is_zero() && line(0, 2).is_zero())
            continue;
        const MultiPoly r = restrict_to_subspace(p, rref(line).reduced);
        CHECK(r.is_homogeneous());
        CHECK((r.is_zero() || r.total_degree() == 3));
    }
}

TEST_CASE("dth_power_root")
{
    const auto f = NumberField::eisenstein();
    const FieldElement zero(f);

    auto five_x3 = dth_power_root(BinaryForm({zero, zero, zero, q(f, 5)}));
    REQUIRE(five_x3);
    CHECK(five_x3->scale == q(f, 5));
    CHECK(five_x3->root == BinaryForm({zero, q(f, 1)}));

    CHECK_FALSE(dth_power_root(BinaryForm({zero, zero, q(f, 1), zero})));  // x^2 y

    // (2x + 3y)^3 = 8x^3 + 36x^2y + 54xy^2 + 27y^3
    auto cube = dth_power_root(BinaryForm({q(f, 27), q(f, 54), q(f, 36), q(f, 8)}));
    REQUIRE(cube);
    CHECK(cube->scale == q(f, 8));
    CHECK(cube->root == BinaryForm({q(f, 3, 2), q(f, 1)}));
    MultiPoly expanded = cube->root.to_poly().pow(3) * cube->scale;
    CHECK(expanded == BinaryForm({q(f, 27), q(f, 54), q(f, 36), q(f, 8)}).to_poly());

    auto pure_y = dth_power_root(BinaryForm({q(f, -4), zero, zero, zero}));
    REQUIRE(pure_y);
    CHECK(pure_y->scale == q(f, -4));
    CHECK(pure_y->root == BinaryForm({q(f, 1), zero}));

    CHECK_FALSE(dth_power_root(BinaryForm({zero, zero, zero, zero})));
}

TEST_CASE("dth_power_root returns exact identities on random inputs")
{
    const auto f = NumberField::eisenstein();
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const FieldElement c = oracle::random_element(rng, f, 4);
        const FieldElement b = oracle::random_element(rng, f, 4);
        const unsigned d = 1 + trial % 5;
        if (c.is_zero())
            continue;
        const MultiPoly lin = BinaryForm({b, q(f, 1)}).to_poly();
        const BinaryForm phi = BinaryForm::from_poly(lin.pow(d) * c, d);
        const auto root = dth_power_root(phi);
        REQUIRE(root);
        CHECK(root->root.to_poly().pow(d) * root->scale == phi.to_poly());
        // perturbing one coefficient breaks it whenever d >= 2
        if (d >= 2) {
            std::vector<FieldElement> coeffs = phi.coefficients();
            coeffs[1] += q(f, 1);
            CHECK_FALSE(dth_power_root(BinaryForm(coeffs)));
        }
    }
}
