#include "kpc/palette.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kpc/rng.hpp"

namespace kpc {

PaletteLists sample_lists(int n, int k, int s, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (s < 1) throw std::invalid_argument("list length must be positive");

    PaletteLists out;
    out.k = k;
    out.s = s;
    out.lists.resize(n);
    out.distinct.resize(n);
    for (int v = 0; v < n; ++v) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(v)));
        auto &list = out.lists[v];
        list.reserve(s);
        for (int i = 0; i < s; ++i) list.push_back(uniform_in_range(rng, 1, k + 1));
        out.distinct[v] = distinct_colors(list);
    }
    return out;
}

std::vector<int> distinct_colors(const std::vector<int> &list) {
    std::vector<int> d(list);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

bool sorted_lists_intersect(const std::vector<int> &a, const std::vector<int> &b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

bool lists_intersect(const std::vector<int> &a, const std::vector<int> &b) {
    return sorted_lists_intersect(distinct_colors(a), distinct_colors(b));
}

std::pair<std::vector<int>, std::vector<int>> split_list(const std::vector<int> &list, int s1) {
    if (s1 < 1 || s1 >= static_cast<int>(list.size()))
        throw std::invalid_argument("invalid split point");
    return {std::vector<int>(list.begin(), list.begin() + s1),
            std::vector<int>(list.begin() + s1, list.end())};
}

int default_list_length(int n, int k) {
    if (n < 2) return 1;
    const double lg = std::log2(static_cast<double>(n));
    const int by_log = static_cast<int>(std::ceil(2.0 * lg * lg));
    return std::max(1, std::min(k + 1, by_log));
}

}  // namespace kpc
