#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kpc {

/// Per-vertex color lists sampled with replacement from the palette [1, k+1].
/// `lists` keeps the raw draws (duplicates and order preserved); `distinct`
/// caches the sorted deduplicated view that intersection tests and solvers
/// work with.
struct PaletteLists {
    int k = 0;
    int s = 0;
    std::vector<std::vector<int>> lists;
    std::vector<std::vector<int>> distinct;

    int size() const { return static_cast<int>(lists.size()); }
    int palette_size() const { return k + 1; }
};

/// n lists of s independent uniform draws from [1, k+1]; deterministic in
/// the seed. Per-vertex streams are derived from the root seed, so list v
/// does not depend on n or on the other lists.
PaletteLists sample_lists(int n, int k, int s, std::uint64_t seed);

/// True iff the distinct color sets of the two lists share an element.
bool lists_intersect(const std::vector<int> &a, const std::vector<int> &b);

/// Variant for sorted deduplicated vectors (two-pointer walk).
bool sorted_lists_intersect(const std::vector<int> &a, const std::vector<int> &b);

std::vector<int> distinct_colors(const std::vector<int> &list);

/// (first s1 entries, remainder); concatenation reproduces the input.
std::pair<std::vector<int>, std::vector<int>> split_list(const std::vector<int> &list, int s1);

/// Default list length: min(k+1, ceil(2 * log2(n)^2)).
int default_list_length(int n, int k);

}  // namespace kpc
