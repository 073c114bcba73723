#pragma once

#include "splitcubic/matrix.hpp"
#include "splitcubic/number_field.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace splitcubic {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest monomial first: higher total degree
/// wins, ties broken lexicographically with x0 > x1 > ...
struct GradedLexOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

/// Sparse multivariate polynomial over a number field. No zero coefficient
/// is ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, FieldElement, GradedLexOrder>;

    MultiPoly(FieldPtr field, std::size_t variables);

    static MultiPoly constant(const FieldElement& c, std::size_t variables);
    static MultiPoly variable(const FieldPtr& field, std::size_t variables, std::size_t index);
    /// sum_i coeffs[i] * x_i
    static MultiPoly linear(std::span<const FieldElement> coeffs);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] std::size_t variable_count() const { return variables_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] bool is_homogeneous() const;
    [[nodiscard]] FieldElement coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const FieldElement& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const FieldElement& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const FieldElement& s) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    [[nodiscard]] MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    [[nodiscard]] FieldElement evaluate(std::span<const FieldElement> point) const;

    /// Same polynomial viewed in `total` variables, its own variables moved to
    /// positions offset, offset+1, ...
    [[nodiscard]] MultiPoly lift(std::size_t total, std::size_t offset) const;

    [[nodiscard]] std::string to_string() const;

private:
    void require_compatible(const MultiPoly& other) const;

    FieldPtr field_;
    std::size_t variables_;
    TermMap terms_;
};

/// f(images[0], ..., images[n-1]); every image shares one variable count.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);

/// F(g x): x_i -> sum_j g(i, j) x_j. DimensionMismatch unless g is n x n.
MultiPoly substitute_linear(const MultiPoly& f, const FieldMatrix& g);

/// Free (non-pivot) columns of a matrix in RREF.
std::vector<std::size_t> free_columns(const FieldMatrix& solved);

/// Substitutes the pivot variables of an RREF homogeneous system by their
/// expressions in the free variables. The result lives in the free variables,
/// numbered in increasing column order. InconsistentSystem when the matrix is
/// not in reduced row echelon form or leaves no free variable.
MultiPoly restrict_to_subspace(const MultiPoly& f, const FieldMatrix& solved);

/// Binary form sum_i c_i x^i y^(d-i).
class BinaryForm {
public:
    explicit BinaryForm(std::vector<FieldElement> coefficients);
    /// DimensionMismatch unless p has two variables and is homogeneous of `degree` (or zero).
    static BinaryForm from_poly(const MultiPoly& p, unsigned degree);

    [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    [[nodiscard]] const std::vector<FieldElement>& coefficients() const { return coeffs_; }
    /// coefficient of x^i y^(d-i)
    [[nodiscard]] const FieldElement& operator[](unsigned i) const { return coeffs_[i]; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] MultiPoly to_poly() const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<FieldElement> coeffs_;
};

struct PowerRoot {
    FieldElement scale;
    BinaryForm root;  ///< linear, monic in x when it involves x
};

/// If phi = c * l^d for a linear form l, returns (c, l) with l normalized to
/// x + b*y (or l = y when phi is a multiple of y^d).
std::optional<PowerRoot> dth_power_root(const BinaryForm& phi);

}  // namespace splitcubic
