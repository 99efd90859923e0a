#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gpd {

// Visits every set partition of {0..n-1} as a restricted growth string:
// rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]); block ids are in order of
// first appearance. Visits exactly Bell(n) strings, lexicographically.
void for_each_set_partition(std::size_t n,
                            const std::function<void(const std::vector<std::uint32_t>& rgs, std::size_t blocks)>& visit);

// Visits every integer partition of n as multiplicities: mult[j] is the
// number of parts equal to j, for j = 1..n (mult[0] unused).
void for_each_integer_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>& mult)>& visit);

}  // namespace gpd
