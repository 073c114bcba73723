#include "splitcubic/polynomial.hpp"

#include "splitcubic/errors.hpp"

#include <numeric>
#include <sstream>

namespace splitcubic {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexOrder::operator()(const Exponents& a, const Exponents& b) const
{
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db)
        return da > db;
    return a > b;
}

MultiPoly::MultiPoly(FieldPtr field, std::size_t variables) : field_(std::move(field)), variables_(variables) {}

MultiPoly MultiPoly::constant(const FieldElement& c, std::size_t variables)
{
    MultiPoly p(c.field(), variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& field, std::size_t variables, std::size_t index)
{
    if (index >= variables)
        throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
    MultiPoly p(field, variables);
    Exponents e(variables, 0);
    e[index] = 1;
    p.add_term(e, FieldElement(field, Rational(1)));
    return p;
}

MultiPoly MultiPoly::linear(std::span<const FieldElement> coeffs)
{
    if (coeffs.empty())
        throw Error(ErrorCode::DimensionMismatch, "linear form needs at least one variable");
    MultiPoly p(coeffs.front().field(), coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int MultiPoly::total_degree() const
{
    int out = -1;
    for (const auto& [e, c] : terms_)
        out = std::max(out, static_cast<int>(splitcubic::total_degree(e)));
    return out;
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const unsigned d = splitcubic::total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (splitcubic::total_degree(e) != d)
            return false;
    return true;
}

FieldElement MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement(field_) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c)
{
    if (e.size() != variables_)
        throw Error(ErrorCode::DimensionMismatch, "exponent length does not match variable count");
    require_same_field(field_, c.field());
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void MultiPoly::require_compatible(const MultiPoly& other) const
{
    require_same_field(field_, other.field_);
    if (variables_ != other.variables_)
        throw Error(ErrorCode::DimensionMismatch, "polynomials in different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    require_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    require_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& s)
{
    require_same_field(field_, s.field());
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.require_compatible(b);
    MultiPoly out(a.field_, a.variables_);
    Exponents e(a.variables_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(FieldElement(field_, Rational(1)), variables_);
    for (unsigned k = 0; k < e; ++k)
        result = result * *this;
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    a.require_compatible(b);
    return a.terms_ == b.terms_;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const
{
    if (point.size() != variables_)
        throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
    FieldElement acc(field_);
    for (const auto& [e, c] : terms_) {
        FieldElement term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term *= point[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::lift(std::size_t total, std::size_t offset) const
{
    if (offset + variables_ > total)
        throw Error(ErrorCode::DimensionMismatch, "lift target too small");
    MultiPoly out(field_, total);
    for (const auto& [e, c] : terms_) {
        Exponents wide(total, 0);
        std::copy(e.begin(), e.end(), wide.begin() + static_cast<std::ptrdiff_t>(offset));
        out.add_term(wide, c);
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                out << "*x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return out.str();
}

// ------------------------------------------------------------- substitution

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images)
{
    if (images.size() != f.variable_count())
        throw Error(ErrorCode::DimensionMismatch, "need one image per variable");
    if (images.empty())
        return f;
    const std::size_t target_vars = images.front().variable_count();
    const FieldPtr& field = f.field();
    // powers[i][k] = images[i]^k, built on demand
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(MultiPoly::constant(FieldElement(field, Rational(1)), target_vars));
        while (cache.size() <= k)
            cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    MultiPoly out(field, target_vars);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(c, target_vars);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * power_of(i, e[i]);
        out += term;
    }
    return out;
}

MultiPoly substitute_linear(const MultiPoly& f, const FieldMatrix& g)
{
    const std::size_t n = f.variable_count();
    if (g.rows() != n || g.cols() != n)
        throw Error(ErrorCode::DimensionMismatch, "substitution matrix must be " + std::to_string(n) + "x" +
                                                      std::to_string(n));
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<FieldElement> row(g.row(i).begin(), g.row(i).end());
        images.push_back(MultiPoly::linear(row));
    }
    return substitute(f, images);
}

namespace {

// Pivot column of each nonzero row; throws InconsistentSystem if not RREF.
std::vector<std::size_t> rref_pivots(const FieldMatrix& m)
{
    std::vector<std::size_t> pivots;
    bool seen_zero_row = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = 0;
        while (c < m.cols() && m(r, c).is_zero())
            ++c;
        if (c == m.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row || (!pivots.empty() && c <= pivots.back()) || !m(r, c).is_one())
            throw Error(ErrorCode::InconsistentSystem, "system is not in reduced row echelon form");
        for (std::size_t other = 0; other < m.rows(); ++other)
            if (other != r && !m(other, c).is_zero())
                throw Error(ErrorCode::InconsistentSystem, "pivot column is not cleared");
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace

std::vector<std::size_t> free_columns(const FieldMatrix& solved)
{
    const auto pivots = rref_pivots(solved);
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < solved.cols(); ++c) {
        if (k < pivots.size() && pivots[k] == c)
            ++k;
        else
            out.push_back(c);
    }
    return out;
}

MultiPoly restrict_to_subspace(const MultiPoly& f, const FieldMatrix& solved)
{
    const std::size_t n = f.variable_count();
    if (solved.cols() != n)
        throw Error(ErrorCode::DimensionMismatch, "system has " + std::to_string(solved.cols()) +
                                                      " columns for " + std::to_string(n) + " variables");
    const auto pivots = rref_pivots(solved);
    const auto free = free_columns(solved);
    if (free.empty())
        throw Error(ErrorCode::InconsistentSystem, "system admits only the zero solution");

    const FieldPtr& field = f.field();
    const std::size_t m = free.size();
    std::vector<MultiPoly> images(n, MultiPoly(field, m));
    for (std::size_t k = 0; k < m; ++k)
        images[free[k]] = MultiPoly::variable(field, m, k);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        MultiPoly expr(field, m);
        for (std::size_t k = 0; k < m; ++k) {
            const FieldElement& a = solved(r, free[k]);
            if (!a.is_zero())
                expr -= MultiPoly::variable(field, m, k) * a;
        }
        images[pivots[r]] = std::move(expr);
    }
    return substitute(f, images);
}

// ------------------------------------------------------------- binary forms

BinaryForm::BinaryForm(std::vector<FieldElement> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw Error(ErrorCode::InvalidArgument, "binary form needs at least one coefficient");
    for (const auto& c : coeffs_)
        require_same_field(coeffs_.front().field(), c.field());
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p, unsigned degree)
{
    if (p.variable_count() != 2)
        throw Error(ErrorCode::DimensionMismatch, "binary form needs exactly two variables");
    std::vector<FieldElement> coeffs(degree + 1, FieldElement(p.field()));
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] != degree)
            throw Error(ErrorCode::DimensionMismatch, "polynomial is not homogeneous of degree " +
                                                          std::to_string(degree));
        coeffs[e[0]] = c;
    }
    return BinaryForm(std::move(coeffs));
}

bool BinaryForm::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

MultiPoly BinaryForm::to_poly() const
{
    MultiPoly p(coeffs_.front().field(), 2);
    for (unsigned i = 0; i <= degree(); ++i)
        p.add_term({i, degree() - i}, coeffs_[i]);
    return p;
}

std::optional<PowerRoot> dth_power_root(const BinaryForm& phi)
{
    const unsigned d = phi.degree();
    if (d == 0 || phi.is_zero())
        return std::nullopt;
    const FieldPtr& field = phi[0].field();
    const FieldElement zero(field);
    const FieldElement one(field, Rational(1));

    if (phi[d].is_zero()) {
        for (unsigned i = 1; i <= d; ++i)
            if (!phi[i].is_zero())
                return std::nullopt;
        return PowerRoot{phi[0], BinaryForm({one, zero})};
    }

    // the only monic candidate: x + c_{d-1} / (d c_d) y
    FieldElement b = phi[d - 1] / (phi[d] * Rational(d));
    BinaryForm root({b, one});
    MultiPoly expanded = root.to_poly().pow(d) * phi[d];
    if (expanded != phi.to_poly())
        return std::nullopt;
    return PowerRoot{phi[d], std::move(root)};
}

}  // namespace splitcubic
