#pragma once

#include "splitcubic/matrix.hpp"
#include "splitcubic/plane_index.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace splitcubic {

inline constexpr unsigned kGroupRingVariables = 5;
inline constexpr unsigned kGroupRingRank = 1u << kGroupRingVariables;

/// Integer polynomial in t1..t5 keyed by exponent vectors.
using RawPolynomial = std::map<std::array<unsigned, kGroupRingVariables>, Integer>;

/// Element of Z[t1..t5]/(t_i^2 + t_i + 1) on the square-free monomial basis.
/// A monomial is a 5-bit mask, bit i-1 standing for t_i.
class GroupRingElement {
public:
    GroupRingElement() = default;

    [[nodiscard]] Integer coefficient(unsigned mask) const;
    [[nodiscard]] const std::map<unsigned, Integer>& terms() const { return terms_; }
    void add(unsigned mask, const Integer& c);

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    /// e.g. "1 + t2 + t2*t3"
    [[nodiscard]] std::string to_string() const;

private:
    std::map<unsigned, Integer> terms_;
};

/// Normal form modulo t_i^2 + t_i + 1.
GroupRingElement reduce(const RawPolynomial& p);

/// (1 + t_{j1} + t_{j1} t_{k1})(1 + t_{j2} + t_{j2} t_{k2}). IndexNotInK.
GroupRingElement rho(const PlaneIndex& j);

/// One row per J in index_set_k(), one column per mask 0..31.
IntMatrix relation_matrix();

/// Columns of the monomials 1, t3, t1 t3, t1 t3 t5.
inline constexpr std::array<unsigned, 4> kSubTableMasks{0b00000, 0b00100, 0b00101, 0b10101};

struct TorsionCertificate {
    std::vector<Integer> invariant_factors;
    bool torsion_free = false;
    IntMatrix sub_table;
    Integer sub_table_det;
};

TorsionCertificate torsion_certificate(const IntMatrix& relations);
TorsionCertificate torsion_free_certificate();

}  // namespace splitcubic
