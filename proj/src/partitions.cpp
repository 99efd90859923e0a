#include "gpd/partitions.hpp"

#include <algorithm>

namespace gpd {

void for_each_set_partition(std::size_t n,
                            const std::function<void(const std::vector<std::uint32_t>& rgs, std::size_t blocks)>& visit) {
    std::vector<std::uint32_t> rgs(n, 0);
    if (n == 0) {
        visit(rgs, 0);
        return;
    }
    // prefix_max[i] = max(rgs[0..i]).
    std::vector<std::uint32_t> prefix_max(n, 0);
    while (true) {
        visit(rgs, prefix_max[n - 1] + 1);
        // Increment the rightmost position that can still grow.
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1)
            --i;
        if (i == 0)
            return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

namespace {

void integer_partitions(std::size_t remaining, std::size_t largest, std::vector<std::size_t>& mult,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (remaining == 0) {
        visit(mult);
        return;
    }
    for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
        ++mult[part];
        integer_partitions(remaining - part, part, mult, visit);
        --mult[part];
    }
}

}  // namespace

void for_each_integer_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>& mult)>& visit) {
    std::vector<std::size_t> mult(n + 1, 0);
    integer_partitions(n, n, mult, visit);
}

}  // namespace gpd
