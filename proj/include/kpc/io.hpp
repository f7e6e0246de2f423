#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kpc/graph.hpp"

namespace kpc {

/// Edge stream file. First non-comment line is the header "n k"; every
/// following line is an edge "u v" with 0-indexed vertices. '#' starts a
/// comment. Strict mode rejects duplicate edges and self-loops; lenient
/// mode drops them (an edge counts once).
struct StreamFileData {
    int n = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;

    Graph to_graph() const { return Graph::from_edges(n, edges); }
};

enum class ParseMode { Strict, Lenient };

StreamFileData parse_stream(std::istream &in, ParseMode mode = ParseMode::Strict);
StreamFileData parse_stream_file(const std::string &path, ParseMode mode = ParseMode::Strict);
void write_stream(std::ostream &out, const StreamFileData &data);

/// Coloring file: lines "v c" with 1-indexed colors, then "palette c_max".
void write_coloring(std::ostream &out, const Coloring &chi);
Coloring read_coloring(std::istream &in);

enum class StreamOrder { Random, Sorted, AdversarialDenseFirst };

StreamOrder parse_order(const std::string &name);
std::string order_name(StreamOrder order);

/// Erdos-Renyi style stream with expected average degree avg_deg, emitted
/// in the requested order. Deterministic per seed; the adversarial order
/// puts edges incident to the densest vertices first.
StreamFileData gen_random_stream(int n, double avg_deg, int k, StreamOrder order,
                                 std::uint64_t seed);

}  // namespace kpc
