#include "kpc/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kpc/rng.hpp"

namespace kpc {

namespace {

std::string strip_comment(const std::string &line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string &line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void fail_at(int line_no, const std::string &what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

StreamFileData parse_stream(std::istream &in, ParseMode mode) {
    StreamFileData data;
    std::set<std::pair<int, int>> seen;
    bool have_header = false;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> data.n >> data.k) || data.n < 0)
                fail_at(line_no, "expected header 'n k'");
            have_header = true;
            continue;
        }
        int u = 0, v = 0;
        if (!(fields >> u >> v)) fail_at(line_no, "expected edge 'u v'");
        std::string extra;
        if (fields >> extra) fail_at(line_no, "trailing tokens after edge");
        if (u < 0 || u >= data.n || v < 0 || v >= data.n) fail_at(line_no, "vertex out of range");
        if (u == v) {
            if (mode == ParseMode::Strict) fail_at(line_no, "self-loop");
            continue;
        }
        const auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            if (mode == ParseMode::Strict) fail_at(line_no, "duplicate edge");
            continue;  // counted once
        }
        data.edges.emplace_back(u, v);
    }
    if (!have_header) throw std::invalid_argument("missing header");
    return data;
}

StreamFileData parse_stream_file(const std::string &path, ParseMode mode) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse_stream(in, mode);
}

void write_stream(std::ostream &out, const StreamFileData &data) {
    out << data.n << ' ' << data.k << '\n';
    for (auto [u, v] : data.edges) out << u << ' ' << v << '\n';
}

void write_coloring(std::ostream &out, const Coloring &chi) {
    for (std::size_t v = 0; v < chi.color.size(); ++v) out << v << ' ' << chi.color[v] << '\n';
    out << "palette " << chi.palette_size << '\n';
}

Coloring read_coloring(std::istream &in) {
    Coloring chi;
    std::vector<std::pair<int, int>> entries;
    int max_vertex = -1;
    std::string token;
    while (in >> token) {
        if (token == "palette") {
            if (!(in >> chi.palette_size)) throw std::invalid_argument("malformed palette line");
            break;
        }
        int v = std::stoi(token), c = 0;
        if (!(in >> c)) throw std::invalid_argument("malformed coloring line");
        entries.emplace_back(v, c);
        max_vertex = std::max(max_vertex, v);
    }
    if (chi.palette_size <= 0) throw std::invalid_argument("missing palette line");
    chi.color.assign(max_vertex + 1, 0);
    for (auto [v, c] : entries) {
        if (v < 0 || v > max_vertex) throw std::invalid_argument("vertex out of range");
        chi.color[v] = c;
    }
    return chi;
}

StreamOrder parse_order(const std::string &name) {
    if (name == "random") return StreamOrder::Random;
    if (name == "sorted") return StreamOrder::Sorted;
    if (name == "adversarial" || name == "adversarial-dense-first")
        return StreamOrder::AdversarialDenseFirst;
    throw std::invalid_argument("unknown order: " + name);
}

std::string order_name(StreamOrder order) {
    switch (order) {
        case StreamOrder::Random: return "random";
        case StreamOrder::Sorted: return "sorted";
        case StreamOrder::AdversarialDenseFirst: return "adversarial-dense-first";
    }
    return "?";
}

StreamFileData gen_random_stream(int n, double avg_deg, int k, StreamOrder order,
                                 std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (avg_deg < 0 || avg_deg >= n) throw std::invalid_argument("need 0 <= avg_deg < n");

    StreamFileData data;
    data.n = n;
    data.k = k;
    const double p = n > 1 ? avg_deg / static_cast<double>(n - 1) : 0.0;
    std::mt19937_64 rng(derive_seed(seed, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p) data.edges.emplace_back(u, v);

    switch (order) {
        case StreamOrder::Sorted:
            std::sort(data.edges.begin(), data.edges.end());
            break;
        case StreamOrder::Random: {
            std::mt19937_64 shuffle_rng(derive_seed(seed, 1));
            for (std::size_t i = data.edges.size(); i > 1; --i)
                std::swap(data.edges[i - 1],
                          data.edges[uniform_in_range(shuffle_rng, 0, static_cast<int>(i) - 1)]);
            break;
        }
        case StreamOrder::AdversarialDenseFirst: {
            std::vector<int> deg(n, 0);
            for (auto [u, v] : data.edges) {
                ++deg[u];
                ++deg[v];
            }
            std::stable_sort(data.edges.begin(), data.edges.end(),
                             [&deg](const std::pair<int, int> &a, const std::pair<int, int> &b) {
                                 const int da = deg[a.first] + deg[a.second];
                                 const int db = deg[b.first] + deg[b.second];
                                 if (da != db) return da > db;
                                 return a < b;
                             });
            break;
        }
    }
    return data;
}

}  // namespace kpc
