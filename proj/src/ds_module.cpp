#include "splitcubic/ds_module.hpp"

#include "splitcubic/errors.hpp"
#include "splitcubic/linalg.hpp"

#include <algorithm>

namespace splitcubic {

Integer GroupRingElement::coefficient(unsigned mask) const
{
    auto it = terms_.find(mask);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add(unsigned mask, const Integer& c)
{
    if (mask >= kGroupRingRank)
        throw Error(ErrorCode::InvalidArgument, "monomial mask out of range");
    Integer& slot = terms_[mask];
    slot += c;
    if (slot == 0)
        terms_.erase(mask);
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b)
{
    GroupRingElement out = a;
    for (const auto& [m, c] : b.terms_)
        out.add(m, c);
    return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    RawPolynomial raw;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            std::array<unsigned, kGroupRingVariables> e{};
            for (unsigned i = 0; i < kGroupRingVariables; ++i)
                e[i] = ((ma >> i) & 1u) + ((mb >> i) & 1u);
            raw[e] += ca * cb;
        }
    return reduce(raw);
}

std::string GroupRingElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (unsigned i = 0; i < kGroupRingVariables; ++i)
            if ((m >> i) & 1u)
                mono += (mono.empty() ? "t" : "*t") + std::to_string(i + 1);
        std::string coeff = splitcubic::to_string(c);
        const bool negative = c < 0;
        if (negative)
            coeff.erase(0, 1);
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        if (mono.empty())
            out += coeff;
        else
            out += (coeff == "1" ? "" : coeff + "*") + mono;
    }
    return out;
}

GroupRingElement reduce(const RawPolynomial& p)
{
    // t^e reduces to t^(e mod 3) with t^2 = -t - 1; expand the product over variables.
    GroupRingElement out;
    for (const auto& [e, c] : p) {
        std::vector<std::pair<unsigned, Integer>> partial{{0u, c}};
        for (unsigned i = 0; i < kGroupRingVariables; ++i) {
            const unsigned bit = 1u << i;
            switch (e[i] % 3) {
            case 0:
                break;
            case 1:
                for (auto& [m, v] : partial)
                    m |= bit;
                break;
            default: {
                std::vector<std::pair<unsigned, Integer>> next;
                for (const auto& [m, v] : partial) {
                    next.emplace_back(m | bit, -v);
                    next.emplace_back(m, -v);
                }
                partial = std::move(next);
            }
            }
        }
        for (const auto& [m, v] : partial)
            out.add(m, v);
    }
    return out;
}

GroupRingElement rho(const PlaneIndex& j)
{
    k_position(j);
    auto factor = [](unsigned a, unsigned b) {
        GroupRingElement f;
        f.add(0, 1);
        f.add(1u << (a - 1), 1);
        f.add((1u << (a - 1)) | (1u << (b - 1)), 1);
        return f;
    };
    return factor(j.j(1), j.k(1)) * factor(j.j(2), j.k(2));
}

IntMatrix relation_matrix()
{
    const auto& k = index_set_k();
    IntMatrix m(k.size(), kGroupRingRank, Integer(0));
    for (std::size_t r = 0; r < k.size(); ++r) {
        const GroupRingElement element = rho(k[r]);
        for (const auto& [mask, c] : element.terms())
            m(r, mask) = c;
    }
    return m;
}

TorsionCertificate torsion_certificate(const IntMatrix& relations)
{
    if (relations.cols() <= *std::max_element(kSubTableMasks.begin(), kSubTableMasks.end()))
        throw Error(ErrorCode::DimensionMismatch, "relation matrix needs one column per monomial");
    TorsionCertificate out;
    out.invariant_factors = snf(relations).diagonal();
    out.torsion_free = std::all_of(out.invariant_factors.begin(), out.invariant_factors.end(),
                                   [](const Integer& d) { return d == 1; });
    out.sub_table = IntMatrix(relations.rows(), kSubTableMasks.size(), Integer(0));
    for (std::size_t r = 0; r < relations.rows(); ++r)
        for (std::size_t c = 0; c < kSubTableMasks.size(); ++c)
            out.sub_table(r, c) = relations(r, kSubTableMasks[c]);
    out.sub_table_det = out.sub_table.is_square() ? det_bareiss(out.sub_table) : Integer(0);
    return out;
}

TorsionCertificate torsion_free_certificate() { return torsion_certificate(relation_matrix()); }

}  // namespace splitcubic
