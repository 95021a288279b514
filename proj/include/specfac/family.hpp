#ifndef SPECFAC_FAMILY_HPP
#define SPECFAC_FAMILY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace specfac {

// The pair (k, r) with r < k defining the component family
// {C_{2i+1}, T : 1 <= i < r/(k-r), T in T_{k/r}}.
struct FamilyParams {
    std::int64_t k = 2;
    std::int64_t r = 1;

    FamilyParams() = default;
    FamilyParams(std::int64_t k_, std::int64_t r_) : k(k_), r(r_) {
        if (r < 1 || k <= r)
            throw std::invalid_argument("FamilyParams: need positive integers with r < k");
    }
};

// {2i+1 : 1 <= i, i(k-r) < r}; empty whenever 2r <= k.
inline std::vector<int> allowed_cycle_lengths(const FamilyParams& p) {
    std::vector<int> out;
    for (std::int64_t i = 1; i * (p.k - p.r) < p.r; ++i)
        out.push_back(static_cast<int>(2 * i + 1));
    return out;
}

} // namespace specfac

#endif
