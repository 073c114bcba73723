#pragma once

#include "splitcubic/matrix.hpp"
#include "splitcubic/plane.hpp"
#include "splitcubic/plane_index.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace splitcubic {

/// (beta0, beta1, beta2) with beta_i = omega^exponents[i].
struct BetaTriple {
    std::array<unsigned, 3> exponents{};

    [[nodiscard]] std::array<FieldElement, 3> values(const FieldPtr& field) const;
    /// "(1,w,w2)"
    [[nodiscard]] std::string to_string() const;
    /// Entries 1, w, w2, w^2, omega, omega^2 in parentheses. ParseError otherwise.
    static BetaTriple parse(std::string_view text);

    friend auto operator<=>(const BetaTriple&, const BetaTriple&) = default;
};

/// Q(omega).
FieldPtr fermat_field();

/// F1 = z0^3 + z1^3 + z2^3, F2 = -(z3^3 + z4^3 + z5^3).
SplitHypersurface fermat_fourfold(const FieldPtr& field = fermat_field());

/// z_{k_i} = -beta_i z_{j_i}, i = 0, 1, 2.
Plane l_plane(const PlaneIndex& j, const BetaTriple& beta, const FieldPtr& field = fermat_field());

struct LabeledPlane {
    PlaneIndex j;
    BetaTriple beta;
    Plane plane;

    /// "J1,(1,w,1)"
    [[nodiscard]] std::string label() const;
};

/// All 108 planes L_{J,beta}, ordered by J then beta exponents.
std::vector<LabeledPlane> build_L_planes(const FieldPtr& field = fermat_field());

/// "J3,(1,w,w2)" or "[02|13|45],(1,w,w2)". ParseError, IndexNotInK.
std::pair<PlaneIndex, BetaTriple> parse_plane_label(std::string_view text);

struct BasisEntry {
    std::size_t index;  ///< 1-based
    PlaneIndex j;
    BetaTriple beta;
};

const std::vector<BasisEntry>& basis_table();
std::vector<Plane> build_S_basis(const FieldPtr& field = fermat_field());

/// Pairwise intersection numbers.
IntMatrix gram_matrix(const std::vector<Plane>& planes);

/// Intersection numbers of `plane` against each basis plane.
std::vector<Integer> intersection_vector(const Plane& plane, const std::vector<Plane>& basis);

struct Decomposition {
    std::vector<Integer> m;  ///< coefficients on the basis
    std::vector<Integer> v;  ///< intersection vector against the basis
    Integer bordered_det;
};

/// Integral relation m_1 [S_1] + ... + [L] = 0 from the kernel of the
/// bordered Gram. KernelRankUnexpected, NonIntegralKernel.
Decomposition decompose(const Plane& l, const std::vector<Plane>& basis, const IntMatrix& gram);

struct FermatPlaneSet {
    std::vector<Plane> rank2;
    std::vector<Plane> rank3;

    /// Sorted union.
    [[nodiscard]] std::vector<Plane> all() const;
};

/// Rank-2 planes from flex pairs and rank-3 planes y = -g x for g in Aut(F1).
FermatPlaneSet all_fermat_planes();

}  // namespace splitcubic
