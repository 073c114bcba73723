#pragma once

#include "splitcubic/matrix.hpp"
#include "splitcubic/number_field.hpp"
#include "splitcubic/polynomial.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace splitcubic {

using ProjectivePoint = std::array<FieldElement, 3>;

/// x0^3 + x1^3 + x2^3 - 3 lambda x0 x1 x2
MultiPoly hesse_form(const FieldElement& lambda);

/// lambda^3 != 1
bool is_smooth(const FieldElement& lambda);

/// 1728 lambda^3 (lambda^3 + 8)^3 / (64 (lambda^3 - 1)^3). SingularCurve when lambda^3 = 1.
FieldElement j_invariant(const FieldElement& lambda);

/// Scales so the first nonzero coordinate is 1. InvalidArgument on the zero vector.
ProjectivePoint normalize_projective(const ProjectivePoint& p);

struct FlexDatum {
    ProjectivePoint point;
    std::array<FieldElement, 3> tangent;  ///< a0 x0 + a1 x1 + a2 x2

    [[nodiscard]] MultiPoly tangent_form() const;
};

/// The nine flexes of the Hesse cubic with their tangents. SingularCurve,
/// FieldTooSmall when the field has no primitive cube root of unity.
std::vector<FlexDatum> flex_table(const FieldElement& lambda);

/// True iff P lies on F = 0 and on L = 0, and F restricted to L is a
/// d-th power of a linear form vanishing at P. DegenerateLine when L = 0.
bool verify_flex(const MultiPoly& f, const ProjectivePoint& p, const std::array<FieldElement, 3>& line, unsigned d);

struct AutGroup {
    std::vector<FieldMatrix> elements;  ///< sorted

    [[nodiscard]] std::size_t order() const { return elements.size(); }
    [[nodiscard]] bool contains(const FieldMatrix& g) const;
};

inline constexpr std::size_t kClosureBudget = 10000;

/// Closure of the generators under multiplication. Each generator is checked
/// against F first (NotAnAutomorphism names its position); ClosureBudgetExceeded
/// past `budget` elements.
AutGroup group_closure(const std::vector<FieldMatrix>& generators, const MultiPoly& f,
                       std::size_t budget = kClosureBudget);

/// Coordinate swap, cyclic shift, diag(1, w, w^2) and w*I, plus diag(1, 1, w)
/// at lambda = 0 and the order-4 Fourier-type matrix at lambda = 1 +- sqrt3.
/// Other lambda with j in {0, 1728} are Unsupported.
std::vector<FieldMatrix> hesse_automorphism_generators(const FieldElement& lambda);

/// 162 when j = 0, 108 when j = 1728, 54 otherwise.
std::size_t aut_order(const FieldElement& lambda);

}  // namespace splitcubic
