#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "kpc/demand.hpp"
#include "kpc/graph.hpp"
#include "kpc/solver.hpp"

namespace kpc {

struct GadgetRecord {
    enum class Kind { EdgeGadget, ColorRepeater };
    Kind kind;
    int x = 0;
    int y = 0;
    int first_aux = 0;
    int aux_count = 0;
};

/// Vertex roles of a reduction graph. Row vertices u_i and v_i (i in
/// [1, k-1]) and column vertices w_h (h in [1, ell]) come first; gadget
/// auxiliaries are allocated behind them. Total size is fixed up front so
/// streams can be built against a known vertex count.
struct LowerBoundLayout {
    int k = 0;
    int ell = 0;
    int g = 0;  // Bob's row index, 1-based

    int u_first = 0;
    int v_first = 0;
    int w_first = 0;
    int aux_first = 0;
    int total_vertices = 0;
    int next_aux = 0;

    std::vector<GadgetRecord> gadgets;

    int u(int i) const { return u_first + i - 1; }
    int v(int i) const { return v_first + i - 1; }
    int w(int h) const { return w_first + h - 1; }
};

/// Bit matrix of shape (k-1) x ell plus the queried entry (g, h), 1-based.
struct IndexInstance {
    int k = 0;
    int ell = 0;
    int g = 0;
    int h = 0;
    std::vector<std::vector<std::uint8_t>> bits;

    int bit(int row, int col) const { return bits[row - 1][col - 1]; }
    static IndexInstance random(int k, int ell, int g, int h, std::uint64_t seed);
};

LowerBoundLayout make_layout(int k, int ell, int g);

/// k fresh clique vertices; x joined to the first k-1 of them, y to the
/// last. Forces chi(x) != chi(y) in any k-partial k-coloring.
/// Emits C(k,2) + k edges.
std::vector<std::pair<int, int>> add_edge_gadget(LowerBoundLayout &layout, int x, int y);

/// k-1 fresh clique vertices, x and y joined to all of them. Forces
/// chi(x) = chi(y). Emits C(k-1,2) + 2(k-1) edges. Undefined for k < 2.
std::vector<std::pair<int, int>> add_color_repeater(LowerBoundLayout &layout, int x, int y);

/// Edge-gadgets over all pairs inside U, then inside V (pair-lexicographic),
/// then the matrix edges row-major: {u_i, w_h} when A[i,h] = 1, else
/// {v_i, w_h}.
std::pair<std::vector<std::pair<int, int>>, LowerBoundLayout> build_alice_stream(
    const IndexInstance &inst);

/// Color-repeaters c_{u_t, v_t} for all t != g ascending, then the
/// edge-gadget e_{u_g, v_g}.
std::vector<std::pair<int, int>> build_bob_stream(LowerBoundLayout &layout, int g);

struct GadgetVerdict {
    bool ok = false;
    bool exhaustive = false;
    long edge_gadget_colorings = 0;
    long repeater_colorings = 0;
    std::vector<Coloring> edge_gadget_counterexamples;
    std::vector<Coloring> repeater_counterexamples;
};

/// Checks both gadget lemmas on the standalone graphs {x, y} + gadget:
/// exhaustively over all k^n assignments for k <= 4, otherwise over
/// solver-sampled distinct colorings (up to sample_budget of them).
GadgetVerdict verify_gadget_lemmas(int k, long sample_budget = 500, std::uint64_t seed = 1);

/// 1 when chi(w_h) = chi(v_g), 0 when chi(w_h) = chi(u_g); throws when the
/// color matches neither (the colorability promise was violated).
int decode_bit(const Coloring &chi, const LowerBoundLayout &layout, int g, int h);

/// Encodes "find a k-partial c-coloring of g" as a demand instance: full
/// palette lists and demand(v) = min(k, deg(v)) on the whole graph.
DemandInstance make_k_partial_instance(const Graph &g, int k, int c);

/// Distinct solutions of the instance gathered by re-solving under
/// perturbed value orders; stops after max_attempts seeds.
std::vector<Coloring> sample_distinct_colorings(const DemandInstance &inst, int want,
                                                int max_attempts, std::uint64_t seed,
                                                const SolverConfig &base = {});

/// One-way protocol party: a streaming algorithm whose memory state can be
/// handed across. Fresh instances come from a factory; Alice's instance is
/// serialized and Bob's resumes from the bytes.
class StreamAlgorithm {
public:
    virtual ~StreamAlgorithm() = default;
    virtual void consume_edge(int u, int v) = 0;
    virtual std::vector<std::uint8_t> serialize_state() const = 0;
    virtual void resume_from_state(const std::vector<std::uint8_t> &bytes) = 0;
    virtual std::optional<Coloring> output_coloring() = 0;
};

using AlgorithmFactory = std::function<std::unique_ptr<StreamAlgorithm>()>;

/// Reference party that stores every edge and solves offline at the end.
class StoreEverythingAlgorithm : public StreamAlgorithm {
public:
    StoreEverythingAlgorithm(int n, int k, SolverConfig cfg = {});

    void consume_edge(int u, int v) override;
    std::vector<std::uint8_t> serialize_state() const override;
    void resume_from_state(const std::vector<std::uint8_t> &bytes) override;
    std::optional<Coloring> output_coloring() override;

    /// Optional filter dropping selected edges before storage; used to
    /// build deliberately broken parties in adversarial tests.
    void set_drop_predicate(std::function<bool(int, int)> pred) { drop_ = std::move(pred); }

private:
    int n_ = 0;
    int k_ = 0;
    SolverConfig cfg_;
    std::vector<std::pair<int, int>> edges_;
    std::function<bool(int, int)> drop_;
};

struct ProtocolTranscript {
    long alice_edge_count = 0;
    long bob_edge_count = 0;
    std::size_t state_bytes = 0;
    bool produced_coloring = false;
    bool coloring_valid = false;  // verified k-partial k-coloring of the full graph
    bool decoded = false;
    int decoded_bit = -1;
    int truth_bit = -1;
};

ProtocolTranscript simulate_protocol(const IndexInstance &inst, const AlgorithmFactory &factory);

/// Instance file: line 1 "k ell", line 2 "g h", then k-1 rows of ell bits.
void write_index_instance(std::ostream &out, const IndexInstance &inst);
IndexInstance read_index_instance(std::istream &in);

/// Sidecar mapping roles to inclusive id ranges, one "role start end" line
/// per role (U, V, W, AUX).
void write_layout(std::ostream &out, const LowerBoundLayout &layout);

}  // namespace kpc
