#pragma once

#include "splitcubic/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splitcubic {

/// A number field Q[t]/(m(t)) with m monic. Irreducibility of m is the
/// caller's promise; a reducible modulus shows up as NotInvertible on inversion.
///
/// Besides the modulus, a field may carry named constants (for instance
/// "omega" or "sqrt3") so that callers can pick a specific root of unity or
/// square root consistently instead of relying on root-finding order.
class NumberField {
public:
    /// `modulus` lists coefficients from t^0 up to the leading t^n, which must be 1.
    NumberField(std::vector<Rational> modulus, std::string label,
                std::map<std::string, std::vector<Rational>, std::less<>> constants = {});

    /// Q = Q[t]/(t - 1).
    static std::shared_ptr<const NumberField> rationals();
    /// Q(zeta3) = Q[t]/(t^2 + t + 1), with omega = t.
    static std::shared_ptr<const NumberField> eisenstein();
    /// Q(zeta12) = Q[t]/(t^4 - t^2 + 1), with omega = t^4 and sqrt3 = t + t^-1.
    static std::shared_ptr<const NumberField> cyclotomic12();
    /// Accepts "Q", "Qzeta3", "Q(zeta3)", "Qzeta12", "Q(zeta12)". Throws ParseError.
    static std::shared_ptr<const NumberField> preset(std::string_view name);

    [[nodiscard]] std::size_t degree() const { return modulus_.size() - 1; }
    [[nodiscard]] const std::vector<Rational>& modulus() const { return modulus_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] const std::vector<Rational>* constant(std::string_view name) const;

    [[nodiscard]] bool same_as(const NumberField& other) const;

private:
    std::vector<Rational> modulus_;
    std::string label_;
    std::map<std::string, std::vector<Rational>, std::less<>> constants_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Exact element of a number field, stored as the n coefficients of its
/// reduced representative (coefficient of t^i at index i).
class FieldElement {
public:
    explicit FieldElement(FieldPtr field, const Rational& value = 0);
    FieldElement(FieldPtr field, std::vector<Rational> coefficients);

    /// The class of t.
    static FieldElement generator(FieldPtr field);
    /// A named constant of the field; FieldTooSmall when the field has none.
    static FieldElement named(const FieldPtr& field, std::string_view name);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] bool is_rational() const;
    /// Throws InvalidArgument unless is_rational().
    [[nodiscard]] Rational rational_value() const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);
    FieldElement& operator*=(const Rational& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }
    friend FieldElement operator*(FieldElement lhs, const Rational& rhs) { return lhs *= rhs; }
    friend FieldElement operator*(const Rational& lhs, FieldElement rhs) { return rhs *= lhs; }
    FieldElement operator-() const;

    [[nodiscard]] FieldElement pow(unsigned exponent) const;
    [[nodiscard]] FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    /// Lexicographic on coefficients; only meaningful within one field.
    friend bool operator<(const FieldElement& a, const FieldElement& b);

    /// Human-readable polynomial in `var`, e.g. "-1 - t" or "3/2".
    [[nodiscard]] std::string to_string(std::string_view var = "t") const;

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

/// Throws MixedField when the two fields differ.
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// Multiplicative inverse via extended Euclid in Q[t]. ZeroInverse on 0,
/// NotInvertible when gcd(x, m) is non-constant.
FieldElement nf_inv(const FieldElement& x);

/// All rho in the field with rho^d = a, sorted. Empty when a has no d-th root
/// in the field. Roots are searched p-adically at a prime splitting the
/// modulus and then verified exactly, so every returned value is certified.
std::vector<FieldElement> pure_roots(const FieldElement& a, unsigned d);

/// All d-th roots of unity in the field, sorted.
std::vector<FieldElement> roots_of_unity(const FieldPtr& field, unsigned d);

/// The designated primitive cube root of unity: the field's "omega" constant
/// if present, else the smallest primitive root found. FieldTooSmall if none.
FieldElement omega(const FieldPtr& field);

/// Moves a rational element into `target`. InvalidArgument if x is not rational.
FieldElement embed(const FieldElement& x, const FieldPtr& target);

}  // namespace splitcubic
