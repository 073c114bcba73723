#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace splitcubic {

/// A partition of {0..5} into three ordered pairs [j0 k0 | j1 k1 | j2 k2].
class PlaneIndex {
public:
    using Pair = std::array<unsigned, 2>;

    /// InvalidArgument unless the six entries are a permutation of 0..5.
    explicit PlaneIndex(std::array<Pair, 3> pairs);
    /// "[01|23|45]" or "01|23|45". ParseError on bad input.
    static PlaneIndex parse(std::string_view text);

    [[nodiscard]] const std::array<Pair, 3>& pairs() const { return pairs_; }
    [[nodiscard]] unsigned j(std::size_t i) const { return pairs_[i][0]; }
    [[nodiscard]] unsigned k(std::size_t i) const { return pairs_[i][1]; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PlaneIndex&, const PlaneIndex&) = default;

private:
    std::array<Pair, 3> pairs_;
};

/// J1 = [01|23|45], J2 = [01|24|35], J3 = [02|13|45], J4 = [02|14|35].
const std::vector<PlaneIndex>& index_set_k();

/// Position of J in index_set_k(). IndexNotInK otherwise.
std::size_t k_position(const PlaneIndex& j);

}  // namespace splitcubic
