#include "splitcubic/hesse.hpp"

#include "splitcubic/errors.hpp"
#include "splitcubic/linalg.hpp"

#include <deque>
#include <set>

namespace splitcubic {

namespace {

void require_smooth(const FieldElement& lambda)
{
    if (!is_smooth(lambda))
        throw Error(ErrorCode::SingularCurve, "lambda = " + lambda.to_string() + " has lambda^3 = 1");
}

FieldElement rational_in(const FieldPtr& field, long v) { return FieldElement(field, Rational(v)); }

FieldMatrix permutation_matrix(const FieldPtr& field, std::array<std::size_t, 3> image)
{
    FieldMatrix m = field_zero(field, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        m(i, image[i]) = rational_in(field, 1);
    return m;
}

FieldMatrix diagonal(const FieldElement& a, const FieldElement& b, const FieldElement& c)
{
    FieldMatrix m = field_zero(a.field(), 3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

}  // namespace

MultiPoly hesse_form(const FieldElement& lambda)
{
    const FieldPtr& field = lambda.field();
    const FieldElement one = rational_in(field, 1);
    MultiPoly f(field, 3);
    f.add_term({3, 0, 0}, one);
    f.add_term({0, 3, 0}, one);
    f.add_term({0, 0, 3}, one);
    f.add_term({1, 1, 1}, lambda * Rational(-3));
    return f;
}

bool is_smooth(const FieldElement& lambda) { return !lambda.pow(3).is_one(); }

FieldElement j_invariant(const FieldElement& lambda)
{
    require_smooth(lambda);
    const FieldElement l3 = lambda.pow(3);
    const FieldElement eight = rational_in(lambda.field(), 8);
    const FieldElement one = rational_in(lambda.field(), 1);
    return l3 * (l3 + eight).pow(3) * Rational(1728) / ((l3 - one).pow(3) * Rational(64));
}

ProjectivePoint normalize_projective(const ProjectivePoint& p)
{
    for (const auto& c : p)
        if (!c.is_zero()) {
            const FieldElement inv = c.inverse();
            return {p[0] * inv, p[1] * inv, p[2] * inv};
        }
    throw Error(ErrorCode::InvalidArgument, "the zero vector is not a projective point");
}

MultiPoly FlexDatum::tangent_form() const { return MultiPoly::linear(tangent); }

std::vector<FlexDatum> flex_table(const FieldElement& lambda)
{
    require_smooth(lambda);
    const FieldPtr& field = lambda.field();
    const FieldElement w = omega(field);
    const FieldElement w2 = w * w;
    const FieldElement one = rational_in(field, 1);
    const FieldElement zero(field);
    const FieldElement& l = lambda;

    return {
        {{zero, -one, one}, {l, one, one}},
        {{zero, -w, one}, {w * l, w2, one}},
        {{zero, -w2, one}, {w2 * l, w, one}},
        {{one, zero, -one}, {one, l, one}},
        {{one, zero, -w}, {one, l * w, w2}},
        {{one, zero, -w2}, {one, l * w2, w}},
        {{-one, one, zero}, {one, one, l}},
        {{-w, one, zero}, {w2, one, l * w}},
        {{-w2, one, zero}, {w, one, l * w2}},
    };
}

bool verify_flex(const MultiPoly& f, const ProjectivePoint& p, const std::array<FieldElement, 3>& line, unsigned d)
{
    if (std::all_of(line.begin(), line.end(), [](const FieldElement& c) { return c.is_zero(); }))
        throw Error(ErrorCode::DegenerateLine, "tangent line has all coefficients zero");
    if (!f.evaluate(p).is_zero())
        return false;
    if (!(line[0] * p[0] + line[1] * p[1] + line[2] * p[2]).is_zero())
        return false;

    const FieldMatrix system = rref(FieldMatrix(1, 3, std::vector<FieldElement>(line.begin(), line.end()))).reduced;
    const auto free = free_columns(system);
    const MultiPoly restricted = restrict_to_subspace(f, system);
    if (restricted.is_zero())
        return false;
    const auto root = dth_power_root(BinaryForm::from_poly(restricted, d));
    if (!root)
        return false;
    return (root->root[1] * p[free[0]] + root->root[0] * p[free[1]]).is_zero();
}

bool AutGroup::contains(const FieldMatrix& g) const { return std::binary_search(elements.begin(), elements.end(), g); }

AutGroup group_closure(const std::vector<FieldMatrix>& generators, const MultiPoly& f, std::size_t budget)
{
    if (f.variable_count() != 3)
        throw Error(ErrorCode::DimensionMismatch, "automorphisms act on ternary forms");
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (substitute_linear(f, generators[i]) != f)
            throw Error(ErrorCode::NotAnAutomorphism, "generator " + std::to_string(i) + " does not preserve F");

    std::set<FieldMatrix> seen;
    std::deque<FieldMatrix> frontier;
    const FieldMatrix id = field_identity(f.field(), 3);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        const FieldMatrix current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            FieldMatrix next = current * g;
            if (seen.insert(next).second) {
                if (seen.size() > budget)
                    throw Error(ErrorCode::ClosureBudgetExceeded,
                                "closure exceeded " + std::to_string(budget) + " elements");
                frontier.push_back(std::move(next));
            }
        }
    }
    return AutGroup{std::vector<FieldMatrix>(seen.begin(), seen.end())};
}

std::vector<FieldMatrix> hesse_automorphism_generators(const FieldElement& lambda)
{
    require_smooth(lambda);
    const FieldPtr& field = lambda.field();
    const FieldElement w = omega(field);
    const FieldElement one = rational_in(field, 1);

    std::vector<FieldMatrix> gens{
        permutation_matrix(field, {1, 0, 2}),
        permutation_matrix(field, {1, 2, 0}),
        diagonal(one, w, w * w),
        diagonal(w, w, w),
    };

    const FieldElement j = j_invariant(lambda);
    if (j.is_zero()) {
        if (!lambda.is_zero())
            throw Error(ErrorCode::Unsupported, "extra automorphisms are only built for lambda = 0 when j = 0");
        gens.push_back(diagonal(one, one, w));
    } else if (j == rational_in(field, 1728)) {
        const FieldElement r = lambda - one;  // +-sqrt3
        if (r * r != rational_in(field, 3))
            throw Error(ErrorCode::Unsupported, "extra automorphisms are only built for lambda = 1 +- sqrt3 when j = 1728");
        const FieldElement w2 = w * w;
        const FieldMatrix fourier = field_matrix(field, {{one, one, one}, {one, w, w2}, {one, w2, w}});
        const MultiPoly f = hesse_form(lambda);
        const FieldElement s = -r.inverse();
        for (const FieldElement& scale : {s, -s}) {
            FieldMatrix m = scaled(fourier, scale);
            if (substitute_linear(f, m) == f) {
                gens.push_back(std::move(m));
                break;
            }
        }
        if (gens.size() == 4)
            throw Error(ErrorCode::VerificationFailed, "no order-4 automorphism found at j = 1728");
    }
    return gens;
}

std::size_t aut_order(const FieldElement& lambda)
{
    const FieldElement j = j_invariant(lambda);
    if (j.is_zero())
        return 162;
    if (j == rational_in(lambda.field(), 1728))
        return 108;
    return 54;
}

}  // namespace splitcubic
