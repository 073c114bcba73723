#pragma once

#include "splitcubic/hesse.hpp"
#include "splitcubic/matrix.hpp"
#include "splitcubic/polynomial.hpp"

#include <optional>
#include <vector>

namespace splitcubic {

/// A 2-plane in P^5 given by A x = B y, identified by the RREF of [A | -B].
class Plane {
public:
    /// DimensionMismatch unless A and B are 3x3; InvalidArgument unless [A | -B] has rank 3.
    Plane(const FieldMatrix& a, const FieldMatrix& b);
    /// From the 3x6 system [A | -B].
    static Plane from_system(const FieldMatrix& system);

    [[nodiscard]] const FieldMatrix& canonical() const { return canonical_; }
    [[nodiscard]] FieldMatrix a() const { return canonical_.block(0, 0, 3, 3); }
    [[nodiscard]] FieldMatrix b() const;
    [[nodiscard]] const FieldPtr& field() const { return field_; }

    friend bool operator==(const Plane& s, const Plane& t) { return s.canonical_ == t.canonical_; }
    friend bool operator!=(const Plane& s, const Plane& t) { return !(s == t); }
    friend bool operator<(const Plane& s, const Plane& t) { return s.canonical_ < t.canonical_; }

private:
    explicit Plane(FieldMatrix canonical, FieldPtr field);

    FieldMatrix canonical_;
    FieldPtr field_;
};

/// F1(x) = F2(y) in P^5 with coordinates (x0, x1, x2, y0, y1, y2).
class SplitHypersurface {
public:
    /// Both forms ternary, homogeneous of one degree d >= 2 over one field.
    SplitHypersurface(MultiPoly f1, MultiPoly f2);

    [[nodiscard]] const MultiPoly& f1() const { return f1_; }
    [[nodiscard]] const MultiPoly& f2() const { return f2_; }
    [[nodiscard]] unsigned degree() const { return degree_; }
    /// F1(x) - F2(y) in six variables.
    [[nodiscard]] const MultiPoly& equation() const { return equation_; }

private:
    MultiPoly f1_;
    MultiPoly f2_;
    unsigned degree_;
    MultiPoly equation_;
};

enum class PlaneRank { Rank2, Rank3 };

/// IllegalRank when rank A or rank B is at most 1.
PlaneRank classify_rank(const Plane& s);

bool contains(const SplitHypersurface& x, const Plane& s);

/// d planes per flex pair, deduplicated and sorted. FlexExtractionFailed when
/// a tangent residue is not a d-th power; FieldTooSmall when the field lacks
/// the d roots needed.
std::vector<Plane> rank2_planes(const std::vector<FlexDatum>& flexes1, const std::vector<FlexDatum>& flexes2,
                                const SplitHypersurface& x);

/// The planes y = g x, one per group element, sorted. FormsNotEqual unless F1 == F2.
std::vector<Plane> rank3_planes(const AutGroup& aut, const SplitHypersurface& x);

/// 0, 1, -1 or 3 for joint rank 6, 5, 4 or 3 of the stacked systems.
int intersection_number(const Plane& s, const Plane& t);

/// d nu1 nu2 + |Aut| when the forms are equivalent. MissingAutOrder when
/// equivalent without an order, InvalidArgument when equivalent with nu1 != nu2.
std::size_t count_planes(unsigned d, std::size_t nu1, std::size_t nu2, std::optional<std::size_t> aut_order,
                         bool equivalent);

/// 243 + |Aut(F1)| when j(lambda1) = j(lambda2), else 243.
std::size_t cubic_plane_count(const FieldElement& lambda1, const FieldElement& lambda2);

struct PlaneEnumeration {
    std::vector<Plane> rank2;
    std::vector<Plane> rank3;
    std::size_t aut_order = 0;  ///< 0 when the forms are inequivalent

    [[nodiscard]] std::size_t total() const { return rank2.size() + rank3.size(); }
};

/// Hesse cubic with lambda^3 != 1, rescaled by 1 / (1 - lambda^3) so that its
/// tangent residues are cubes in any field containing omega.
MultiPoly normalized_hesse_form(const FieldElement& lambda);

/// Every plane on H(lambda1)(x) = H(lambda2)(y), H the normalized Hesse form.
/// Equal j with lambda1 != lambda2 is Unsupported.
PlaneEnumeration enumerate_hesse_planes(const FieldElement& lambda1, const FieldElement& lambda2);

}  // namespace splitcubic
