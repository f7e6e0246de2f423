#include "kpc/stream.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace kpc {

namespace {

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t> &out, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

struct ByteReader {
    const std::vector<std::uint8_t> &bytes;
    std::size_t pos = 0;

    std::uint32_t u32() {
        if (pos + 4 > bytes.size()) throw std::invalid_argument("truncated state blob");
        std::uint32_t x = 0;
        for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(bytes[pos++]) << (8 * i);
        return x;
    }

    std::uint64_t u64() {
        if (pos + 8 > bytes.size()) throw std::invalid_argument("truncated state blob");
        std::uint64_t x = 0;
        for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(bytes[pos++]) << (8 * i);
        return x;
    }
};

constexpr std::uint32_t kStateMagic = 0x5343504B;  // "KPCS"
constexpr std::uint32_t kStateVersion = 1;

bool engage_fallback(int k, int s, double threshold) {
    return static_cast<double>(k + 1) <= threshold * static_cast<double>(s) * static_cast<double>(s);
}

}  // namespace

StreamState::StreamState(int n, int k, int s, std::uint64_t seed, double fallback_threshold)
    : StreamState(n, k, sample_lists(n, k, s, seed), fallback_threshold) {}

StreamState::StreamState(int n, int k, PaletteLists lists, double fallback_threshold) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 1 || k > n - 1) throw std::invalid_argument("k must satisfy 1 <= k <= n-1");
    if (lists.size() != n) throw std::invalid_argument("list count does not match n");
    if (lists.k != k) throw std::invalid_argument("palette parameter mismatch");
    n_ = n;
    k_ = k;
    lists_ = std::move(lists);
    fallback_ = engage_fallback(k, lists_.s, fallback_threshold);
    deg_.assign(n, 0);
    free_.assign(n, 0);
    h_deg_.assign(n, 0);
}

EdgeDisposition StreamState::process_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));

    ++seen_;
    if (deg_[u] >= k_ && deg_[v] >= k_) {
        ++rejected_;
        return EdgeDisposition::RejectedByFilter;
    }
    ++deg_[u];
    ++deg_[v];
    if (!fallback_ && !sorted_lists_intersect(lists_.distinct[u], lists_.distinct[v])) {
        ++free_[u];
        ++free_[v];
        ++freed_edges_;
        return EdgeDisposition::Freed;
    }
    ++h_deg_[u];
    ++h_deg_[v];
    h_edges_.emplace_back(std::min(u, v), std::max(u, v));
    return EdgeDisposition::StoredInH;
}

DemandInstance StreamState::finalize() const {
    DemandInstance inst;
    inst.k = k_;
    inst.h = Graph::from_edges(n_, h_edges_);
    inst.demand.resize(n_);
    inst.lists.resize(n_);
    for (int v = 0; v < n_; ++v) {
        inst.demand[v] = std::max(0, std::min(k_, deg_[v]) - free_[v]);
        if (inst.demand[v] > h_deg_[v])
            throw std::logic_error("demand exceeds stored degree; counters are inconsistent");
        if (fallback_) {
            inst.lists[v].resize(k_ + 1);
            for (int c = 1; c <= k_ + 1; ++c) inst.lists[v][c - 1] = c;
        } else {
            inst.lists[v] = lists_.distinct[v];
        }
    }
    return inst;
}

MemoryReport StreamState::memory_report() const {
    MemoryReport report;
    report.edges_seen = seen_;
    report.edges_rejected = rejected_;
    report.edges_freed = freed_edges_;
    report.edges_stored = static_cast<long>(h_edges_.size());
    const long n = n_;
    const long s = lists_.s;
    report.peak_state_words = kStateWordsPerVertex * n + report.edges_stored + n * s;
    // deg + free counters, one packed word per stored edge, the raw list
    // entries, and the scalar fields.
    report.measured_state_words = 2 * n + report.edges_stored + n * s + 6;
    return report;
}

std::vector<std::uint8_t> StreamState::serialize() const {
    std::vector<std::uint8_t> out;
    put_u32(out, kStateMagic);
    put_u32(out, kStateVersion);
    put_u32(out, static_cast<std::uint32_t>(n_));
    put_u32(out, static_cast<std::uint32_t>(k_));
    put_u32(out, static_cast<std::uint32_t>(lists_.s));
    out.push_back(fallback_ ? 1 : 0);
    put_u64(out, static_cast<std::uint64_t>(seen_));
    put_u64(out, static_cast<std::uint64_t>(rejected_));
    put_u64(out, static_cast<std::uint64_t>(freed_edges_));
    for (int v = 0; v < n_; ++v) put_u32(out, static_cast<std::uint32_t>(deg_[v]));
    for (int v = 0; v < n_; ++v) put_u32(out, static_cast<std::uint32_t>(free_[v]));
    for (int v = 0; v < n_; ++v)
        for (int c : lists_.lists[v]) put_u32(out, static_cast<std::uint32_t>(c));
    put_u64(out, h_edges_.size());
    for (auto [u, v] : h_edges_) {
        put_u32(out, static_cast<std::uint32_t>(u));
        put_u32(out, static_cast<std::uint32_t>(v));
    }
    return out;
}

StreamState StreamState::deserialize(const std::vector<std::uint8_t> &bytes) {
    ByteReader reader{bytes};
    if (reader.u32() != kStateMagic) throw std::invalid_argument("bad state magic");
    if (reader.u32() != kStateVersion) throw std::invalid_argument("unsupported state version");

    StreamState state;
    state.n_ = static_cast<int>(reader.u32());
    state.k_ = static_cast<int>(reader.u32());
    const int s = static_cast<int>(reader.u32());
    if (reader.pos >= bytes.size()) throw std::invalid_argument("truncated state blob");
    state.fallback_ = bytes[reader.pos++] != 0;
    state.seen_ = static_cast<long>(reader.u64());
    state.rejected_ = static_cast<long>(reader.u64());
    state.freed_edges_ = static_cast<long>(reader.u64());

    const int n = state.n_;
    state.deg_.resize(n);
    state.free_.resize(n);
    for (int v = 0; v < n; ++v) state.deg_[v] = static_cast<int>(reader.u32());
    for (int v = 0; v < n; ++v) state.free_[v] = static_cast<int>(reader.u32());
    state.lists_.k = state.k_;
    state.lists_.s = s;
    state.lists_.lists.assign(n, {});
    state.lists_.distinct.assign(n, {});
    for (int v = 0; v < n; ++v) {
        state.lists_.lists[v].resize(s);
        for (int i = 0; i < s; ++i) state.lists_.lists[v][i] = static_cast<int>(reader.u32());
        state.lists_.distinct[v] = distinct_colors(state.lists_.lists[v]);
    }
    const std::uint64_t h_count = reader.u64();
    state.h_deg_.assign(n, 0);
    state.h_edges_.reserve(h_count);
    for (std::uint64_t i = 0; i < h_count; ++i) {
        const int u = static_cast<int>(reader.u32());
        const int v = static_cast<int>(reader.u32());
        state.h_edges_.emplace_back(u, v);
        ++state.h_deg_[u];
        ++state.h_deg_[v];
    }
    if (reader.pos != bytes.size()) throw std::invalid_argument("trailing bytes in state blob");
    return state;
}

RunResult run_stream(const std::vector<std::pair<int, int>> &edges, const RunConfig &cfg) {
    const int s = cfg.s > 0 ? cfg.s : default_list_length(cfg.n, cfg.k);
    StreamState state(cfg.n, cfg.k, s, cfg.seed, cfg.fallback_threshold);
    for (auto [u, v] : edges) state.process_edge(u, v);

    RunResult result;
    result.fallback = state.fallback();
    result.memory = state.memory_report();

    const DemandInstance inst = state.finalize();
    const SolveOutcome outcome = solve(inst, cfg.solver);
    result.status = outcome.status;
    result.solver_nodes = outcome.nodes;
    result.fast_path_used = outcome.fast_path_used;
    if (outcome.status == SolveStatus::Sat) result.coloring = outcome.coloring;
    return result;
}

}  // namespace kpc
