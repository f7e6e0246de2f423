#include "kpc/lowerbound.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "kpc/rng.hpp"

namespace kpc {

IndexInstance IndexInstance::random(int k, int ell, int g, int h, std::uint64_t seed) {
    if (k < 2 || ell < 1) throw std::invalid_argument("need k >= 2 and ell >= 1");
    if (g < 1 || g > k - 1 || h < 1 || h > ell) throw std::invalid_argument("index out of range");
    IndexInstance inst;
    inst.k = k;
    inst.ell = ell;
    inst.g = g;
    inst.h = h;
    inst.bits.assign(k - 1, std::vector<std::uint8_t>(ell, 0));
    std::mt19937_64 rng(seed);
    for (auto &row : inst.bits)
        for (auto &bit : row) bit = static_cast<std::uint8_t>(rng() & 1);
    return inst;
}

LowerBoundLayout make_layout(int k, int ell, int g) {
    if (k < 2 || ell < 1) throw std::invalid_argument("need k >= 2 and ell >= 1");
    if (g < 1 || g > k - 1) throw std::invalid_argument("row index out of range");

    LowerBoundLayout layout;
    layout.k = k;
    layout.ell = ell;
    layout.g = g;
    layout.u_first = 0;
    layout.v_first = k - 1;
    layout.w_first = 2 * (k - 1);
    layout.aux_first = 2 * (k - 1) + ell;
    layout.next_aux = layout.aux_first;

    const long pairs_per_side = static_cast<long>(k - 1) * (k - 2) / 2;
    const long alice_aux = 2 * pairs_per_side * k;
    const long bob_aux = static_cast<long>(k - 2) * (k - 1) + k;
    layout.total_vertices = static_cast<int>(layout.aux_first + alice_aux + bob_aux);
    return layout;
}

std::vector<std::pair<int, int>> add_edge_gadget(LowerBoundLayout &layout, int x, int y) {
    if (x == y) throw std::invalid_argument("gadget endpoints must differ");
    const int k = layout.k;
    const int p = layout.next_aux;
    if (p + k > layout.total_vertices) throw std::logic_error("gadget allocation overflow");
    layout.next_aux += k;
    layout.gadgets.push_back({GadgetRecord::Kind::EdgeGadget, x, y, p, k});

    std::vector<std::pair<int, int>> edges;
    edges.reserve(k * (k - 1) / 2 + k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(p + i, p + j);
    for (int i = 0; i < k - 1; ++i) edges.emplace_back(x, p + i);
    edges.emplace_back(y, p + k - 1);
    return edges;
}

std::vector<std::pair<int, int>> add_color_repeater(LowerBoundLayout &layout, int x, int y) {
    if (x == y) throw std::invalid_argument("gadget endpoints must differ");
    const int k = layout.k;
    if (k < 2) throw std::invalid_argument("color-repeater undefined for k < 2");
    const int q = layout.next_aux;
    if (q + k - 1 > layout.total_vertices) throw std::logic_error("gadget allocation overflow");
    layout.next_aux += k - 1;
    layout.gadgets.push_back({GadgetRecord::Kind::ColorRepeater, x, y, q, k - 1});

    std::vector<std::pair<int, int>> edges;
    edges.reserve((k - 1) * (k - 2) / 2 + 2 * (k - 1));
    for (int i = 0; i < k - 1; ++i)
        for (int j = i + 1; j < k - 1; ++j) edges.emplace_back(q + i, q + j);
    for (int i = 0; i < k - 1; ++i) edges.emplace_back(x, q + i);
    for (int i = 0; i < k - 1; ++i) edges.emplace_back(y, q + i);
    return edges;
}

std::pair<std::vector<std::pair<int, int>>, LowerBoundLayout> build_alice_stream(
    const IndexInstance &inst) {
    LowerBoundLayout layout = make_layout(inst.k, inst.ell, inst.g);
    std::vector<std::pair<int, int>> edges;

    const int rows = inst.k - 1;
    for (int i = 1; i <= rows; ++i)
        for (int j = i + 1; j <= rows; ++j) {
            auto gadget = add_edge_gadget(layout, layout.u(i), layout.u(j));
            edges.insert(edges.end(), gadget.begin(), gadget.end());
        }
    for (int i = 1; i <= rows; ++i)
        for (int j = i + 1; j <= rows; ++j) {
            auto gadget = add_edge_gadget(layout, layout.v(i), layout.v(j));
            edges.insert(edges.end(), gadget.begin(), gadget.end());
        }
    for (int i = 1; i <= rows; ++i)
        for (int h = 1; h <= inst.ell; ++h)
            edges.emplace_back(inst.bit(i, h) ? layout.u(i) : layout.v(i), layout.w(h));
    return {std::move(edges), std::move(layout)};
}

std::vector<std::pair<int, int>> build_bob_stream(LowerBoundLayout &layout, int g) {
    if (g < 1 || g > layout.k - 1) throw std::invalid_argument("row index out of range");
    std::vector<std::pair<int, int>> edges;
    for (int t = 1; t <= layout.k - 1; ++t) {
        if (t == g) continue;
        auto gadget = add_color_repeater(layout, layout.u(t), layout.v(t));
        edges.insert(edges.end(), gadget.begin(), gadget.end());
    }
    auto gadget = add_edge_gadget(layout, layout.u(g), layout.v(g));
    edges.insert(edges.end(), gadget.begin(), gadget.end());
    return edges;
}

DemandInstance make_k_partial_instance(const Graph &g, int k, int c) {
    if (k < 1 || c < 1) throw std::invalid_argument("k and c must be positive");
    DemandInstance inst;
    inst.k = c - 1;
    inst.h = g;
    const int n = g.vertex_count();
    inst.lists.resize(n);
    inst.demand.resize(n);
    std::vector<int> palette(c);
    for (int i = 0; i < c; ++i) palette[i] = i + 1;
    for (int v = 0; v < n; ++v) {
        inst.lists[v] = palette;
        inst.demand[v] = std::min(k, g.degree(v));
    }
    return inst;
}

std::vector<Coloring> sample_distinct_colorings(const DemandInstance &inst, int want,
                                                int max_attempts, std::uint64_t seed,
                                                const SolverConfig &base) {
    std::vector<Coloring> found;
    std::set<std::vector<int>> seen;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        SolverConfig cfg = base;
        cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
        const SolveOutcome outcome = solve(inst, cfg);
        if (outcome.status != SolveStatus::Sat) continue;
        if (seen.insert(outcome.coloring.color).second) {
            found.push_back(outcome.coloring);
            if (static_cast<int>(found.size()) >= want) break;
        }
    }
    return found;
}

namespace {

Graph standalone_gadget_graph(int k, GadgetRecord::Kind kind) {
    LowerBoundLayout layout;
    layout.k = k;
    layout.aux_first = 2;
    layout.next_aux = 2;
    layout.total_vertices = 2 + (kind == GadgetRecord::Kind::EdgeGadget ? k : k - 1);
    const auto edges = kind == GadgetRecord::Kind::EdgeGadget ? add_edge_gadget(layout, 0, 1)
                                                              : add_color_repeater(layout, 0, 1);
    return Graph::from_edges(layout.total_vertices, edges);
}

}  // namespace

GadgetVerdict verify_gadget_lemmas(int k, long sample_budget, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("gadgets need k >= 2");
    GadgetVerdict verdict;
    verdict.exhaustive = k <= 4;

    const Graph edge_graph = standalone_gadget_graph(k, GadgetRecord::Kind::EdgeGadget);
    const Graph repeater_graph = standalone_gadget_graph(k, GadgetRecord::Kind::ColorRepeater);

    auto colorings_of = [&](const Graph &g, std::uint64_t salt) {
        if (k <= 4) return enumerate_k_partial(g, k, k, 0);
        return sample_distinct_colorings(make_k_partial_instance(g, k, k),
                                         static_cast<int>(sample_budget),
                                         static_cast<int>(4 * sample_budget),
                                         derive_seed(seed, salt));
    };

    for (const Coloring &chi : colorings_of(edge_graph, 0)) {
        ++verdict.edge_gadget_colorings;
        if (chi.color[0] == chi.color[1]) verdict.edge_gadget_counterexamples.push_back(chi);
    }
    for (const Coloring &chi : colorings_of(repeater_graph, 1)) {
        ++verdict.repeater_colorings;
        if (chi.color[0] != chi.color[1]) verdict.repeater_counterexamples.push_back(chi);
    }

    verdict.ok = verdict.edge_gadget_counterexamples.empty() &&
                 verdict.repeater_counterexamples.empty() && verdict.edge_gadget_colorings > 0 &&
                 verdict.repeater_colorings > 0;
    return verdict;
}

int decode_bit(const Coloring &chi, const LowerBoundLayout &layout, int g, int h) {
    if (g < 1 || g > layout.k - 1 || h < 1 || h > layout.ell)
        throw std::invalid_argument("index out of range");
    const int cw = chi.color[layout.w(h)];
    if (cw == chi.color[layout.v(g)]) return 1;
    if (cw == chi.color[layout.u(g)]) return 0;
    throw std::invalid_argument("column color matches neither row vertex; promise violated");
}

StoreEverythingAlgorithm::StoreEverythingAlgorithm(int n, int k, SolverConfig cfg)
    : n_(n), k_(k), cfg_(cfg) {}

void StoreEverythingAlgorithm::consume_edge(int u, int v) {
    if (drop_ && drop_(u, v)) return;
    edges_.emplace_back(u, v);
}

std::vector<std::uint8_t> StoreEverythingAlgorithm::serialize_state() const {
    std::vector<std::uint8_t> out;
    auto put_u32 = [&out](std::uint32_t x) {
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
    };
    put_u32(static_cast<std::uint32_t>(n_));
    put_u32(static_cast<std::uint32_t>(k_));
    put_u32(static_cast<std::uint32_t>(edges_.size()));
    for (auto [u, v] : edges_) {
        put_u32(static_cast<std::uint32_t>(u));
        put_u32(static_cast<std::uint32_t>(v));
    }
    return out;
}

void StoreEverythingAlgorithm::resume_from_state(const std::vector<std::uint8_t> &bytes) {
    std::size_t pos = 0;
    auto get_u32 = [&bytes, &pos]() {
        if (pos + 4 > bytes.size()) throw std::invalid_argument("truncated state");
        std::uint32_t x = 0;
        for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(bytes[pos++]) << (8 * i);
        return x;
    };
    n_ = static_cast<int>(get_u32());
    k_ = static_cast<int>(get_u32());
    const std::uint32_t m = get_u32();
    edges_.clear();
    edges_.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        const int u = static_cast<int>(get_u32());
        const int v = static_cast<int>(get_u32());
        edges_.emplace_back(u, v);
    }
}

std::optional<Coloring> StoreEverythingAlgorithm::output_coloring() {
    const Graph g = Graph::from_edges(n_, edges_);
    const SolveOutcome outcome = solve(make_k_partial_instance(g, k_, k_), cfg_);
    if (outcome.status != SolveStatus::Sat) return std::nullopt;
    return outcome.coloring;
}

ProtocolTranscript simulate_protocol(const IndexInstance &inst, const AlgorithmFactory &factory) {
    auto [alice_edges, layout] = build_alice_stream(inst);
    const std::vector<std::pair<int, int>> bob_edges = build_bob_stream(layout, inst.g);

    ProtocolTranscript transcript;
    transcript.alice_edge_count = static_cast<long>(alice_edges.size());
    transcript.bob_edge_count = static_cast<long>(bob_edges.size());
    transcript.truth_bit = inst.bit(inst.g, inst.h);

    auto alice = factory();
    for (auto [u, v] : alice_edges) alice->consume_edge(u, v);
    const std::vector<std::uint8_t> state = alice->serialize_state();
    transcript.state_bytes = state.size();

    auto bob = factory();
    bob->resume_from_state(state);
    for (auto [u, v] : bob_edges) bob->consume_edge(u, v);
    const std::optional<Coloring> chi = bob->output_coloring();
    if (!chi) return transcript;
    transcript.produced_coloring = true;

    Graph full(layout.total_vertices);
    for (auto [u, v] : alice_edges) full.add_edge(u, v);
    for (auto [u, v] : bob_edges) full.add_edge(u, v);
    transcript.coloring_valid = static_cast<int>(chi->color.size()) == full.vertex_count() &&
                                chi->palette_size == layout.k &&
                                verify_k_partial(full, layout.k, *chi).ok();
    try {
        transcript.decoded_bit = decode_bit(*chi, layout, inst.g, inst.h);
        transcript.decoded = true;
    } catch (const std::invalid_argument &) {
        transcript.decoded = false;
    }
    return transcript;
}

void write_index_instance(std::ostream &out, const IndexInstance &inst) {
    out << inst.k << ' ' << inst.ell << '\n';
    out << inst.g << ' ' << inst.h << '\n';
    for (int i = 0; i < inst.k - 1; ++i) {
        for (int j = 0; j < inst.ell; ++j) {
            if (j) out << ' ';
            out << static_cast<int>(inst.bits[i][j]);
        }
        out << '\n';
    }
}

IndexInstance read_index_instance(std::istream &in) {
    IndexInstance inst;
    if (!(in >> inst.k >> inst.ell >> inst.g >> inst.h))
        throw std::invalid_argument("malformed instance header");
    if (inst.k < 2 || inst.ell < 1) throw std::invalid_argument("bad dimensions");
    if (inst.g < 1 || inst.g > inst.k - 1 || inst.h < 1 || inst.h > inst.ell)
        throw std::invalid_argument("index out of range");
    inst.bits.assign(inst.k - 1, std::vector<std::uint8_t>(inst.ell, 0));
    for (int i = 0; i < inst.k - 1; ++i)
        for (int j = 0; j < inst.ell; ++j) {
            int b = 0;
            if (!(in >> b) || (b != 0 && b != 1)) throw std::invalid_argument("malformed bit row");
            inst.bits[i][j] = static_cast<std::uint8_t>(b);
        }
    return inst;
}

void write_layout(std::ostream &out, const LowerBoundLayout &layout) {
    const int rows = layout.k - 1;
    out << "U " << layout.u_first << ' ' << layout.u_first + rows - 1 << '\n';
    out << "V " << layout.v_first << ' ' << layout.v_first + rows - 1 << '\n';
    out << "W " << layout.w_first << ' ' << layout.w_first + layout.ell - 1 << '\n';
    out << "AUX " << layout.aux_first << ' ' << layout.total_vertices - 1 << '\n';
}

}  // namespace kpc
