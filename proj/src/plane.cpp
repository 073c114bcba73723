#include "splitcubic/plane.hpp"

#include "splitcubic/errors.hpp"
#include "splitcubic/linalg.hpp"

#include <algorithm>
#include <set>

namespace splitcubic {

namespace {

FieldMatrix hstack(const FieldMatrix& left, const FieldMatrix& right)
{
    std::vector<FieldElement> entries;
    entries.reserve(left.rows() * (left.cols() + right.cols()));
    for (std::size_t i = 0; i < left.rows(); ++i) {
        entries.insert(entries.end(), left.row(i).begin(), left.row(i).end());
        entries.insert(entries.end(), right.row(i).begin(), right.row(i).end());
    }
    return FieldMatrix(left.rows(), left.cols() + right.cols(), std::move(entries));
}

FieldMatrix vstack(const FieldMatrix& top, const FieldMatrix& bottom)
{
    std::vector<FieldElement> entries = top.entries();
    entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
    return FieldMatrix(top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

// F restricted to the line l = 0, written as scale * root^d with root a
// linear form in x0, x1, x2 (zero on the eliminated coordinate).
struct TangentResidue {
    FieldElement scale;
    std::array<FieldElement, 3> root;
};

TangentResidue tangent_residue(const MultiPoly& f, const std::array<FieldElement, 3>& line, unsigned d)
{
    const FieldMatrix system = rref(FieldMatrix(1, 3, std::vector<FieldElement>(line.begin(), line.end()))).reduced;
    const auto free = free_columns(system);
    if (free.size() != 2)
        throw Error(ErrorCode::DegenerateLine, "tangent line has all coefficients zero");
    const MultiPoly restricted = restrict_to_subspace(f, system);
    const auto power = restricted.is_zero() ? std::nullopt : dth_power_root(BinaryForm::from_poly(restricted, d));
    if (!power)
        throw Error(ErrorCode::FlexExtractionFailed, "residue of F along the tangent is not a d-th power");
    std::array<FieldElement, 3> root{FieldElement(f.field()), FieldElement(f.field()), FieldElement(f.field())};
    root[free[0]] = power->root[1];
    root[free[1]] = power->root[0];
    return {power->scale, root};
}

std::vector<Plane> sorted_unique(std::vector<Plane> planes)
{
    std::sort(planes.begin(), planes.end());
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
    return planes;
}

}  // namespace

// ------------------------------------------------------------------ Plane

Plane::Plane(FieldMatrix canonical, FieldPtr field) : canonical_(std::move(canonical)), field_(std::move(field)) {}

Plane::Plane(const FieldMatrix& a, const FieldMatrix& b)
{
    if (a.rows() != 3 || a.cols() != 3 || b.rows() != 3 || b.cols() != 3)
        throw Error(ErrorCode::DimensionMismatch, "plane blocks must be 3x3");
    FieldPtr field = common_field(a);
    require_same_field(field, common_field(b));
    *this = from_system(hstack(a, scaled(b, FieldElement(field, Rational(-1)))));
}

Plane Plane::from_system(const FieldMatrix& system)
{
    if (system.rows() != 3 || system.cols() != 6)
        throw Error(ErrorCode::DimensionMismatch, "plane system must be 3x6");
    FieldPtr field = common_field(system);
    auto reduced = rref(system);
    if (reduced.rank != 3)
        throw Error(ErrorCode::InvalidArgument, "system of rank " + std::to_string(reduced.rank) +
                                                    " does not cut out a plane");
    return Plane(std::move(reduced.reduced), std::move(field));
}

FieldMatrix Plane::b() const { return scaled(canonical_.block(0, 3, 3, 3), FieldElement(field_, Rational(-1))); }

// ------------------------------------------------------- SplitHypersurface

SplitHypersurface::SplitHypersurface(MultiPoly f1, MultiPoly f2)
    : f1_(std::move(f1)), f2_(std::move(f2)), degree_(0), equation_(f1_.field(), 6)
{
    require_same_field(f1_.field(), f2_.field());
    if (f1_.variable_count() != 3 || f2_.variable_count() != 3)
        throw Error(ErrorCode::DimensionMismatch, "split forms must be ternary");
    const int d1 = f1_.total_degree();
    if (d1 < 2 || d1 != f2_.total_degree() || !f1_.is_homogeneous() || !f2_.is_homogeneous())
        throw Error(ErrorCode::InvalidArgument, "split forms must be homogeneous of one degree >= 2");
    degree_ = static_cast<unsigned>(d1);
    equation_ = f1_.lift(6, 0) - f2_.lift(6, 3);
}

// -------------------------------------------------------------- operations

PlaneRank classify_rank(const Plane& s)
{
    const std::size_t ra = rank(s.a());
    const std::size_t rb = rank(s.b());
    if (ra <= 1 || rb <= 1)
        throw Error(ErrorCode::IllegalRank, "rank A = " + std::to_string(ra) + ", rank B = " + std::to_string(rb));
    return ra == 3 ? PlaneRank::Rank3 : PlaneRank::Rank2;
}

bool contains(const SplitHypersurface& x, const Plane& s)
{
    require_same_field(x.equation().field(), s.field());
    return restrict_to_subspace(x.equation(), s.canonical()).is_zero();
}

std::vector<Plane> rank2_planes(const std::vector<FlexDatum>& flexes1, const std::vector<FlexDatum>& flexes2,
                                const SplitHypersurface& x)
{
    const unsigned d = x.degree();
    const FieldPtr& field = x.equation().field();
    const FieldElement zero(field);

    std::vector<TangentResidue> res1, res2;
    for (const auto& flex : flexes1)
        res1.push_back(tangent_residue(x.f1(), flex.tangent, d));
    for (const auto& flex : flexes2)
        res2.push_back(tangent_residue(x.f2(), flex.tangent, d));

    std::vector<Plane> planes;
    for (std::size_t i = 0; i < flexes1.size(); ++i)
        for (std::size_t k = 0; k < flexes2.size(); ++k) {
            const auto roots = pure_roots(res2[k].scale / res1[i].scale, d);
            if (roots.size() != d)
                throw Error(ErrorCode::FieldTooSmall, field->label() + " lacks the d-th roots for a flex pair");
            const auto& l0 = flexes1[i].tangent;
            const auto& m2 = flexes2[k].tangent;
            for (const auto& rho : roots) {
                std::vector<FieldElement> rows;
                rows.reserve(18);
                rows.insert(rows.end(), l0.begin(), l0.end());
                rows.insert(rows.end(), 3, zero);
                rows.insert(rows.end(), res1[i].root.begin(), res1[i].root.end());
                for (const auto& c : res2[k].root)
                    rows.push_back(-(rho * c));
                rows.insert(rows.end(), 3, zero);
                rows.insert(rows.end(), m2.begin(), m2.end());
                Plane s = Plane::from_system(FieldMatrix(3, 6, std::move(rows)));
                if (!contains(x, s))
                    throw Error(ErrorCode::VerificationFailed, "constructed rank-2 plane is not contained in X");
                planes.push_back(std::move(s));
            }
        }
    return sorted_unique(std::move(planes));
}

std::vector<Plane> rank3_planes(const AutGroup& aut, const SplitHypersurface& x)
{
    if (x.f1() != x.f2())
        throw Error(ErrorCode::FormsNotEqual, "rank-3 planes need the equal-form presentation F1 = F2");
    const FieldPtr& field = x.equation().field();
    const FieldMatrix id = field_identity(field, 3);
    std::vector<Plane> planes;
    planes.reserve(aut.order());
    for (const auto& g : aut.elements) {
        Plane s(g, id);
        if (!contains(x, s))
            throw Error(ErrorCode::VerificationFailed, "plane y = g x is not contained in X");
        planes.push_back(std::move(s));
    }
    auto out = sorted_unique(std::move(planes));
    if (out.size() != aut.order())
        throw Error(ErrorCode::VerificationFailed, "distinct automorphisms gave equal planes");
    return out;
}

int intersection_number(const Plane& s, const Plane& t)
{
    switch (rank(vstack(s.canonical(), t.canonical()))) {
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

std::size_t count_planes(unsigned d, std::size_t nu1, std::size_t nu2, std::optional<std::size_t> aut_order,
                         bool equivalent)
{
    const std::size_t rank2 = d * nu1 * nu2;
    if (!equivalent)
        return rank2;
    if (!aut_order)
        throw Error(ErrorCode::MissingAutOrder, "equivalent forms need |Aut(F1)|");
    if (nu1 != nu2)
        throw Error(ErrorCode::InvalidArgument, "equivalent forms have equal flex counts");
    return rank2 + *aut_order;
}

std::size_t cubic_plane_count(const FieldElement& lambda1, const FieldElement& lambda2)
{
    require_same_field(lambda1.field(), lambda2.field());
    const bool equivalent = j_invariant(lambda1) == j_invariant(lambda2);
    return count_planes(3, 9, 9, equivalent ? std::optional<std::size_t>(aut_order(lambda1)) : std::nullopt,
                        equivalent);
}

MultiPoly normalized_hesse_form(const FieldElement& lambda)
{
    const FieldElement one(lambda.field(), Rational(1));
    return hesse_form(lambda) * (one - lambda.pow(3)).inverse();
}

PlaneEnumeration enumerate_hesse_planes(const FieldElement& lambda1, const FieldElement& lambda2)
{
    require_same_field(lambda1.field(), lambda2.field());
    const bool equivalent = j_invariant(lambda1) == j_invariant(lambda2);
    if (equivalent && lambda1 != lambda2)
        throw Error(ErrorCode::Unsupported, "equal j with different lambda needs an explicit equivalence");

    const SplitHypersurface x(normalized_hesse_form(lambda1), normalized_hesse_form(lambda2));
    PlaneEnumeration out;
    out.rank2 = rank2_planes(flex_table(lambda1), flex_table(lambda2), x);
    if (equivalent) {
        const AutGroup aut = group_closure(hesse_automorphism_generators(lambda1), x.f1());
        out.aut_order = aut.order();
        out.rank3 = rank3_planes(aut, x);
    }
    return out;
}

}  // namespace splitcubic
