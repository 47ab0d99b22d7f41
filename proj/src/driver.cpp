#include "gbp/driver.hpp"

#include <algorithm>
#include <chrono>

#include "gbp/decision.hpp"
#include "gbp/errors.hpp"
#include "gbp/heuristics.hpp"

namespace gbp {

namespace {

using Clock = std::chrono::steady_clock;

int64_t elapsed_ms(Clock::time_point from, Clock::time_point to) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(to - from).count();
    return (us + 500) / 1000;  // round half up
}

}  // namespace

SolveReport solve_burning(const Graph& g, const SolveConfig& cfg) {
    if (g.vertex_count() == 0) throw EmptyInstanceError();

    const auto start = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (cfg.time_limit_sec) {
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*cfg.time_limit_sec));
    }

    SolveReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.component_upper_bound = component_upper_bound(g);
    r.conjectured_upper_bound = conjectured_upper_bound(g);

    DistanceCache cache;
    const BurningSequence warm = farthest_first_sequence(g, cache, cfg.seed);
    r.timing.heuristic_ms = elapsed_ms(start, Clock::now());

    const Bounds bounds = bounds_from_sequence(warm);
    r.heuristic_length = static_cast<int32_t>(warm.size());
    r.lower_bound = bounds.lower;
    r.upper_bound = bounds.upper;

    int32_t lo = bounds.lower;
    int32_t hi = bounds.upper;
    BurningSequence best = warm;
    std::vector<char> probed(static_cast<size_t>(g.vertex_count()), 0);
    bool limit_hit = false;

    while (lo < hi) {
        const int32_t B = (lo + hi) / 2;
        DecisionConfig dc;
        dc.limits.node_budget = cfg.node_budget;
        dc.limits.deadline = deadline;

        const auto query_start = Clock::now();
        const DecisionOutcome outcome = solve_decision(g, B, warm, cache, dc);
        r.timing.decisions.push_back({B, elapsed_ms(query_start, Clock::now())});

        PerBRecord rec;
        rec.B = B;
        rec.constraints_loaded = outcome.stats.constraints_loaded;
        rec.separation_calls = outcome.stats.separation_calls;
        rec.nodes = outcome.stats.nodes;
        for (Vertex v : outcome.stats.probed_vertices) probed[v] = 1;
        r.stats.total_constraints_loaded += outcome.stats.constraints_loaded;

        switch (outcome.verdict) {
            case DecisionVerdict::kFeasible:
                rec.outcome = "FEASIBLE";
                best = outcome.sequence;
                hi = B;
                break;
            case DecisionVerdict::kInfeasible:
                rec.outcome = "INFEASIBLE";
                lo = B + 1;
                break;
            case DecisionVerdict::kLimit:
                rec.outcome = "LIMIT";
                limit_hit = true;
                break;
        }
        r.per_b.push_back(std::move(rec));
        if (limit_hit) break;
    }

    if (limit_hit) {
        r.status = "UNSOLVED";
        // Best bounds established so far; the witness proves the upper one.
        r.lower_bound = lo;
        r.upper_bound = hi;
    } else {
        r.status = "OPTIMAL";
        r.optimum = hi;
        for (const PerBRecord& rec : r.per_b) {
            if (rec.B == hi - 1) r.constraints_at_optimum_minus_1 = rec.constraints_loaded;
            if (rec.B == hi) r.constraints_at_optimum = rec.constraints_loaded;
        }
    }
    r.sequence.assign(best.begin(), best.end());

    r.stats.bfs_runs = cache.bfs_runs();
    r.stats.decision_queries = static_cast<int32_t>(r.per_b.size());
    r.stats.separation_probe_vertices =
        std::count(probed.begin(), probed.end(), static_cast<char>(1));
    if (!cfg.emit_per_b_stats) r.per_b.clear();

    r.timing.total_ms = elapsed_ms(start, Clock::now());
    return r;
}

}  // namespace gbp
