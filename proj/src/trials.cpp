#include "kpc/trials.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "kpc/rng.hpp"

namespace kpc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

TrialRow run_one(const TrialConfig &cfg, int index) {
    TrialRow row;
    row.seed = derive_seed(cfg.root_seed, static_cast<std::uint64_t>(index));
    const auto start = Clock::now();

    StreamFileData stream;
    if (cfg.fixed) {
        stream = *cfg.fixed;
    } else {
        stream = gen_random_stream(cfg.n, cfg.avg_deg, cfg.k, cfg.order, row.seed);
    }

    RunConfig run_cfg;
    run_cfg.n = stream.n;
    run_cfg.k = stream.k;
    run_cfg.s = cfg.s;
    run_cfg.seed = derive_seed(row.seed, 0xA11CE);
    run_cfg.fallback_threshold = cfg.fallback_threshold;
    run_cfg.solver = cfg.solver;
    run_cfg.solver.seed = derive_seed(row.seed, 0xB0B);

    const RunResult result = run_stream(stream.edges, run_cfg);
    row.fallback = result.fallback;
    row.memory = result.memory;
    row.solver_nodes = result.solver_nodes;
    row.fast_path = result.fast_path_used;
    row.success = result.coloring.has_value();
    if (result.coloring) {
        row.colors_used = result.coloring->colors_used();
        const Graph full = stream.to_graph();
        row.verified = verify_k_partial(full, stream.k, *result.coloring).ok();
    }
    row.wall_ms = ms_between(start, Clock::now());
    return row;
}

}  // namespace

TrialReport run_trials(const TrialConfig &cfg) {
    TrialReport report;
    report.config = cfg;
    report.rows.resize(cfg.trials);
    const auto start = Clock::now();

    int workers = cfg.parallelism > 0 ? cfg.parallelism
                                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, cfg.trials));
    if (workers == 1) {
        for (int i = 0; i < cfg.trials; ++i) report.rows[i] = run_one(cfg, i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < cfg.trials; i = next.fetch_add(1))
                    report.rows[i] = run_one(cfg, i);
            });
        for (auto &t : pool) t.join();
    }

    int verified = 0;
    for (const TrialRow &row : report.rows) {
        if (row.verified) ++verified;
        report.max_h_edges = std::max(report.max_h_edges, row.memory.edges_stored);
    }
    report.success_rate = cfg.trials > 0 ? static_cast<double>(verified) / cfg.trials : 0.0;
    report.wall_ms = ms_between(start, Clock::now());
    return report;
}

std::string report_to_json(const TrialReport &report) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "trials";

    nlohmann::json config;
    config["trials"] = report.config.trials;
    config["root_seed"] = report.config.root_seed;
    config["s"] = report.config.s;
    config["fallback_threshold"] = report.config.fallback_threshold;
    config["parallelism"] = report.config.parallelism;
    if (report.config.fixed) {
        config["source"] = "fixed";
        config["n"] = report.config.fixed->n;
        config["k"] = report.config.fixed->k;
    } else {
        config["source"] = "generated";
        config["n"] = report.config.n;
        config["k"] = report.config.k;
        config["avg_deg"] = report.config.avg_deg;
        config["order"] = order_name(report.config.order);
    }
    doc["config"] = config;

    nlohmann::json rows = nlohmann::json::array();
    for (const TrialRow &row : report.rows) {
        nlohmann::json r;
        r["seed"] = row.seed;
        r["success"] = row.success;
        r["verified"] = row.verified;
        r["colors_used"] = row.colors_used;
        r["fallback"] = row.fallback;
        r["edges_seen"] = row.memory.edges_seen;
        r["edges_rejected"] = row.memory.edges_rejected;
        r["edges_freed"] = row.memory.edges_freed;
        r["edges_stored"] = row.memory.edges_stored;
        r["peak_state_words"] = row.memory.peak_state_words;
        r["measured_state_words"] = row.memory.measured_state_words;
        r["solver_nodes"] = row.solver_nodes;
        r["fast_path"] = row.fast_path;
        r["wall_ms"] = row.wall_ms;
        rows.push_back(std::move(r));
    }
    doc["trials"] = rows;

    nlohmann::json aggregate;
    aggregate["success_rate"] = report.success_rate;
    aggregate["max_h_edges"] = report.max_h_edges;
    aggregate["wall_ms"] = report.wall_ms;
    aggregate["count"] = report.rows.size();
    doc["aggregate"] = aggregate;
    return doc.dump(2);
}

}  // namespace kpc
