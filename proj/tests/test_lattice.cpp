#include "oracles.hpp"

#include "splitcubic/errors.hpp"
#include "splitcubic/fermat.hpp"
#include "splitcubic/lattice.hpp"
#include "splitcubic/linalg.hpp"

#include <doctest.h>

using namespace splitcubic;

TEST_CASE("lattice_invariants")
{
    const LatticeReport m = lattice_invariants(gram_matrix(build_S_basis()));
    CHECK(m.rank == 19);
    CHECK(m.determinant == 81);
    CHECK(m.definiteness == Definiteness::Positive);
    Integer product = 1;
    for (const auto& d : m.snf_diagonal)
        product *= d;
    CHECK(product == 81);

    const LatticeReport u = lattice_invariants(int_matrix({{0, 3}, {3, 0}}));
    CHECK(u.determinant == -9);
    CHECK(u.definiteness == Definiteness::Indefinite);

    const LatticeReport uu = lattice_invariants(u_lattice(Integer(3), 2));
    CHECK(uu.rank == 4);
    CHECK(uu.determinant == 81);

    CHECK(lattice_invariants(int_matrix({{-2, 1}, {1, -2}})).definiteness == Definiteness::Negative);
    CHECK(lattice_invariants(int_matrix({{1, 1}, {1, 1}})).definiteness == Definiteness::Degenerate);
    CHECK_THROWS_AS(lattice_invariants(int_matrix({{1, 2}, {0, 1}})), Error);
}

TEST_CASE("im_phi_gram")
{
    const IntMatrix g3 = im_phi_gram(3);
    CHECK(g3 == int_matrix({{0, -3, 0, 0}, {-3, 0, 0, 0}, {0, 0, 0, -3}, {0, 0, -3, 0}}));
    const IntMatrix g4 = im_phi_gram(4);
    CHECK(g4.rows() == 36);
    Integer four_pow = 1;
    mpz_pow_ui(four_pow.get_mpz_t(), Integer(4).get_mpz_t(), 36);
    CHECK(abs(det_bareiss(g4)) == four_pow);
    const LatticeReport r = lattice_invariants(g3);
    CHECK(r.determinant == 81);
    CHECK(r.rank == 4);
    CHECK(r.definiteness == Definiteness::Indefinite);
    CHECK_THROWS_AS(im_phi_gram(2), Error);
}

TEST_CASE("congruence_check")
{
    const IntMatrix g = im_phi_gram(3);
    CHECK(congruence_check(int_identity(4), g, g));
    CHECK(congruence_check(im_phi_flip(3), g, u_lattice(Integer(3), 2)));
    CHECK_FALSE(congruence_check(int_identity(4), g, u_lattice(Integer(3), 2)));
    IntMatrix two = int_identity(4);
    for (std::size_t i = 0; i < 4; ++i)
        two(i, i) = 2;
    CHECK_FALSE(congruence_check(two, g, g));
    CHECK_THROWS_AS(congruence_check(int_identity(3), g, g), Error);

    // symmetric under the inverse: B^-1 carries G2 back to G1
    const IntMatrix b = int_matrix({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}});
    const IntMatrix b_inv = int_matrix({{1, -1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -2}, {0, 0, 0, 1}});
    REQUIRE(b * b_inv == int_identity(4));
    const IntMatrix g2 = b.transpose() * g * b;
    CHECK(congruence_check(b, g, g2));
    CHECK(congruence_check(b_inv, g2, g));
}

TEST_CASE("complement_disc_check")
{
    CHECK(complement_disc_check(81, 81, 19, 4, 23));
    CHECK_FALSE(complement_disc_check(81, 80, 19, 4, 23));
    CHECK(complement_disc_check(1, 1, 0, 23, 23));
    CHECK(complement_disc_check(81, -81, 19, 4, 23));
    CHECK_FALSE(complement_disc_check(81, 81, 19, 5, 23));
}

TEST_CASE("shioda_mitani")
{
    const auto r = shioda_mitani(1, 0, 1);
    CHECK(r.tau1.to_string() == "i");
    CHECK(r.tau2.to_string() == "i");
    CHECK(r.delta == -4);
    CHECK(r.trans_lattice == int_matrix({{-6, 0}, {0, -6}}));

    const auto s = shioda_mitani(1, 1, 1);
    CHECK(s.delta == -3);
    CHECK(s.tau1.p == Rational(-1, 2));
    CHECK(s.tau1.q == Rational(1, 2));
    CHECK(s.tau1.d == -3);
    CHECK(s.tau1.to_string() == "(-1+sqrt(-3))/2");
    CHECK(s.trans_lattice == int_matrix({{-6, -3}, {-3, -6}}));

    try {
        shioda_mitani(1, 0, -1);
        FAIL("expected NotPositiveDefinite");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPositiveDefinite);
    }
    CHECK_THROWS_AS(shioda_mitani(-1, 0, -1), Error);

    for (long a = 1; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = 1; c <= 4; ++c) {
                if (b * b - 4 * a * c >= 0)
                    continue;
                const auto t = shioda_mitani(a, b, c);
                CHECK(t.trans_lattice == int_matrix({{-6 * a, -3 * b}, {-3 * b, -6 * c}}));
                // tau1 = p + q sqrt(D) with (2a tau1 + b)^2 = delta
                CHECK(4 * a * a * t.tau1.q * t.tau1.q * t.tau1.d == t.delta);
                CHECK(t.tau1.p * 2 * a == -b);
            }
}
