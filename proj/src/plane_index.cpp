#include "splitcubic/plane_index.hpp"

#include "splitcubic/errors.hpp"

#include <algorithm>

namespace splitcubic {

PlaneIndex::PlaneIndex(std::array<Pair, 3> pairs) : pairs_(pairs)
{
    std::array<bool, 6> seen{};
    for (const auto& p : pairs_)
        for (unsigned v : p) {
            if (v > 5 || seen[v])
                throw Error(ErrorCode::InvalidArgument, "plane index entries must be a permutation of 0..5");
            seen[v] = true;
        }
}

PlaneIndex PlaneIndex::parse(std::string_view text)
{
    if (text.size() == 10 && text.front() == '[' && text.back() == ']')
        text = text.substr(1, 8);
    if (text.size() != 8 || text[2] != '|' || text[5] != '|')
        throw Error(ErrorCode::ParseError, "expected an index like [01|23|45], got '" + std::string(text) + "'");
    std::array<Pair, 3> pairs{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t s = 0; s < 2; ++s) {
            const char c = text[3 * i + s];
            if (c < '0' || c > '5')
                throw Error(ErrorCode::ParseError, "index digit out of range in '" + std::string(text) + "'");
            pairs[i][s] = static_cast<unsigned>(c - '0');
        }
    try {
        return PlaneIndex(pairs);
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string PlaneIndex::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i > 0)
            out += '|';
        out += static_cast<char>('0' + pairs_[i][0]);
        out += static_cast<char>('0' + pairs_[i][1]);
    }
    return out + "]";
}

const std::vector<PlaneIndex>& index_set_k()
{
    static const std::vector<PlaneIndex> k{
        PlaneIndex({{{0, 1}, {2, 3}, {4, 5}}}),
        PlaneIndex({{{0, 1}, {2, 4}, {3, 5}}}),
        PlaneIndex({{{0, 2}, {1, 3}, {4, 5}}}),
        PlaneIndex({{{0, 2}, {1, 4}, {3, 5}}}),
    };
    return k;
}

std::size_t k_position(const PlaneIndex& j)
{
    const auto& k = index_set_k();
    auto it = std::find(k.begin(), k.end(), j);
    if (it == k.end())
        throw Error(ErrorCode::IndexNotInK, j.to_string() + " is not one of the four indices");
    return static_cast<std::size_t>(it - k.begin());
}

}  // namespace splitcubic
