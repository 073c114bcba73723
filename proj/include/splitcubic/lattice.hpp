#pragma once

#include "splitcubic/matrix.hpp"

#include <string>
#include <vector>

namespace splitcubic {

enum class Definiteness { Positive, Negative, Indefinite, Degenerate };

std::string to_string(Definiteness d);

struct LatticeReport {
    std::size_t rank = 0;
    Integer determinant;
    std::vector<Integer> snf_diagonal;
    Definiteness definiteness = Definiteness::Degenerate;
};

/// NotSymmetric on non-symmetric input.
LatticeReport lattice_invariants(const IntMatrix& g);

/// `copies` orthogonal copies of U(n) = [[0, n], [n, 0]].
IntMatrix u_lattice(const Integer& n, std::size_t copies);

/// 2g^2 blocks [[0, -d], [-d, 0]], g = (d-1)(d-2)/2. InvalidArgument for d < 3.
IntMatrix im_phi_gram(unsigned d);

/// diag(1, -1, 1, -1, ...): carries im_phi_gram(d) to U(d)^{2g^2}.
IntMatrix im_phi_flip(unsigned d);

/// det B = +-1 and B^T G1 B = G2. SizeMismatch on inconsistent shapes.
bool congruence_check(const IntMatrix& b, const IntMatrix& g1, const IntMatrix& g2);

/// |dL| = |dT| and rL + rT = ambient rank.
bool complement_disc_check(const Integer& d_l, const Integer& d_t, std::size_t r_l, std::size_t r_t,
                           std::size_t ambient_rank);

/// p + q sqrt(D) with D square-free.
struct QuadraticSurd {
    Rational p;
    Rational q;
    Integer d;

    /// "i", "(-1+sqrt(-3))/2", ...
    [[nodiscard]] std::string to_string() const;
};

struct ShiodaMitaniResult {
    QuadraticSurd tau1;
    QuadraticSurd tau2;
    Integer delta;
    IntMatrix trans_lattice;
};

/// tau1 = (-b + sqrt(delta)) / 2a, tau2 = (b + sqrt(delta)) / 2 and the
/// transcendental Gram [[-6a, -3b], [-3b, -6c]]. NotPositiveDefinite unless
/// a > 0 and b^2 - 4ac < 0.
ShiodaMitaniResult shioda_mitani(const Integer& a, const Integer& b, const Integer& c);

}  // namespace splitcubic
