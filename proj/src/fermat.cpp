#include "splitcubic/fermat.hpp"

#include "splitcubic/errors.hpp"
#include "splitcubic/hesse.hpp"
#include "splitcubic/linalg.hpp"

#include <algorithm>

namespace splitcubic {

namespace {

unsigned parse_cube_root(std::string_view s)
{
    if (s == "1")
        return 0;
    if (s == "w" || s == "omega")
        return 1;
    if (s == "w2" || s == "w^2" || s == "omega^2" || s == "omega2")
        return 2;
    throw Error(ErrorCode::ParseError, "expected 1, w or w2, got '" + std::string(s) + "'");
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::array<FieldElement, 3> BetaTriple::values(const FieldPtr& field) const
{
    const FieldElement w = omega(field);
    return {w.pow(exponents[0]), w.pow(exponents[1]), w.pow(exponents[2])};
}

std::string BetaTriple::to_string() const
{
    static const char* names[] = {"1", "w", "w2"};
    return std::string("(") + names[exponents[0]] + "," + names[exponents[1]] + "," + names[exponents[2]] + ")";
}

BetaTriple BetaTriple::parse(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw Error(ErrorCode::ParseError, "beta must be parenthesized, got '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    BetaTriple out;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto comma = text.find(',');
        if ((i < 2) != (comma != std::string_view::npos))
            throw Error(ErrorCode::ParseError, "beta needs exactly three entries");
        out.exponents[i] = parse_cube_root(trim(text.substr(0, comma)));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return out;
}

FieldPtr fermat_field() { return NumberField::eisenstein(); }

SplitHypersurface fermat_fourfold(const FieldPtr& field)
{
    const MultiPoly f = hesse_form(FieldElement(field));
    return SplitHypersurface(f, -f);
}

Plane l_plane(const PlaneIndex& j, const BetaTriple& beta, const FieldPtr& field)
{
    const auto b = beta.values(field);
    FieldMatrix system = field_zero(field, 3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        system(i, j.k(i)) = FieldElement(field, Rational(1));
        system(i, j.j(i)) = b[i];
    }
    return Plane::from_system(system);
}

std::string LabeledPlane::label() const { return "J" + std::to_string(k_position(j) + 1) + "," + beta.to_string(); }

std::vector<LabeledPlane> build_L_planes(const FieldPtr& field)
{
    std::vector<LabeledPlane> out;
    for (const auto& j : index_set_k())
        for (unsigned e0 = 0; e0 < 3; ++e0)
            for (unsigned e1 = 0; e1 < 3; ++e1)
                for (unsigned e2 = 0; e2 < 3; ++e2) {
                    const BetaTriple beta{{e0, e1, e2}};
                    out.push_back({j, beta, l_plane(j, beta, field)});
                }
    return out;
}

std::pair<PlaneIndex, BetaTriple> parse_plane_label(std::string_view text)
{
    text = trim(text);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "expected J,(b0,b1,b2), got '" + std::string(text) + "'");
    const std::string_view head = trim(text.substr(0, comma));
    const BetaTriple beta = BetaTriple::parse(text.substr(comma + 1));
    if (head.size() == 2 && (head[0] == 'J' || head[0] == 'j') && head[1] >= '1' && head[1] <= '4')
        return {index_set_k()[static_cast<std::size_t>(head[1] - '1')], beta};
    const PlaneIndex j = PlaneIndex::parse(head);
    k_position(j);
    return {j, beta};
}

const std::vector<BasisEntry>& basis_table()
{
    static const std::vector<BasisEntry> table = [] {
        const auto& k = index_set_k();
        const std::array<std::pair<std::size_t, std::array<unsigned, 3>>, 19> rows{{
            {0, {0, 0, 0}}, {0, {0, 0, 1}}, {0, {0, 0, 2}}, {0, {0, 1, 0}}, {0, {0, 1, 1}},
            {0, {1, 0, 0}}, {0, {1, 0, 1}}, {0, {1, 1, 0}}, {0, {1, 1, 1}}, {1, {0, 0, 0}},
            {1, {0, 0, 1}}, {1, {1, 0, 0}}, {1, {1, 0, 1}}, {2, {0, 0, 0}}, {2, {0, 0, 1}},
            {2, {0, 1, 0}}, {2, {0, 1, 1}}, {3, {0, 0, 0}}, {3, {0, 0, 1}},
        }};
        std::vector<BasisEntry> out;
        for (std::size_t i = 0; i < rows.size(); ++i)
            out.push_back({i + 1, k[rows[i].first], BetaTriple{rows[i].second}});
        return out;
    }();
    return table;
}

std::vector<Plane> build_S_basis(const FieldPtr& field)
{
    std::vector<Plane> out;
    for (const auto& entry : basis_table())
        out.push_back(l_plane(entry.j, entry.beta, field));
    return out;
}

IntMatrix gram_matrix(const std::vector<Plane>& planes)
{
    const std::size_t n = planes.size();
    IntMatrix g(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Integer v = i == j ? Integer(3) : Integer(intersection_number(planes[i], planes[j]));
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

std::vector<Integer> intersection_vector(const Plane& plane, const std::vector<Plane>& basis)
{
    std::vector<Integer> v;
    v.reserve(basis.size());
    for (const auto& s : basis)
        v.emplace_back(intersection_number(plane, s));
    return v;
}

Decomposition decompose(const Plane& l, const std::vector<Plane>& basis, const IntMatrix& gram)
{
    const std::size_t n = basis.size();
    if (gram.rows() != n || gram.cols() != n)
        throw Error(ErrorCode::DimensionMismatch, "Gram matrix does not match the basis");
    Decomposition out;
    out.v = intersection_vector(l, basis);

    IntMatrix bordered(n + 1, n + 1, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            bordered(i, j) = gram(i, j);
        bordered(i, n) = out.v[i];
        bordered(n, i) = out.v[i];
    }
    bordered(n, n) = 3;
    out.bordered_det = det_bareiss(bordered);

    const auto kernel = rational_kernel_primitive(bordered);
    if (kernel.size() != 1)
        throw Error(ErrorCode::KernelRankUnexpected, "bordered Gram has kernel of dimension " +
                                                         std::to_string(kernel.size()));
    const auto& vec = kernel.front();
    if (abs(vec[n]) != 1)
        throw Error(ErrorCode::NonIntegralKernel, "kernel generator has last coordinate " + to_string(vec[n]));
    const Integer sign = vec[n];
    for (std::size_t i = 0; i < n; ++i)
        out.m.push_back(vec[i] * sign);
    return out;
}

std::vector<Plane> FermatPlaneSet::all() const
{
    std::vector<Plane> out = rank2;
    out.insert(out.end(), rank3.begin(), rank3.end());
    std::sort(out.begin(), out.end());
    return out;
}

FermatPlaneSet all_fermat_planes()
{
    const FieldPtr field = fermat_field();
    const SplitHypersurface x0 = fermat_fourfold(field);
    const FieldElement zero(field);
    const auto flexes = flex_table(zero);

    FermatPlaneSet out;
    out.rank2 = rank2_planes(flexes, flexes, x0);

    // Equal-form presentation F(x) = F(y') with y' = -y, then back to y.
    const MultiPoly& f = x0.f1();
    const SplitHypersurface equal(f, f);
    const AutGroup aut = group_closure(hesse_automorphism_generators(zero), f);
    const FieldElement minus_one(field, Rational(-1));
    for (const auto& s : rank3_planes(aut, equal)) {
        FieldMatrix system = s.canonical();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 3; j < 6; ++j)
                system(i, j) *= minus_one;
        Plane back = Plane::from_system(system);
        if (!contains(x0, back))
            throw Error(ErrorCode::VerificationFailed, "rank-3 plane does not lie on the Fermat fourfold");
        out.rank3.push_back(std::move(back));
    }
    std::sort(out.rank3.begin(), out.rank3.end());
    return out;
}

}  // namespace splitcubic
