#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "gbp/graph.hpp"
#include "gbp/heuristics.hpp"

namespace gbp {

// One covering row: for witness w and horizon B, position i may be filled by
// any vertex u with d(u, w) <= B - i. Membership is evaluated on the fly from
// w's distance row, so the row itself is just (witness, horizon).
struct CoveringConstraint {
    Vertex witness = 0;
    int32_t horizon = 0;
};

// The lazily grown set of covering rows for one horizon. Witnesses stay in
// insertion order and are never duplicated; every witness has a cached
// distance row by construction.
class ConstraintSet {
public:
    explicit ConstraintSet(int32_t horizon) : horizon_(horizon) {}

    int32_t horizon() const { return horizon_; }
    std::span<const Vertex> witnesses() const { return witnesses_; }
    int32_t size() const { return static_cast<int32_t>(witnesses_.size()); }
    bool contains(Vertex w) const { return present_.contains(w); }

    // Ensures w's distance row exists and appends w if new; returns whether
    // the witness was added.
    bool add(const Graph& g, Vertex w, DistanceCache& cache);

private:
    int32_t horizon_;
    std::vector<Vertex> witnesses_;
    std::unordered_set<Vertex> present_;
};

// d_S(u) = max(0, min_i (d(u, v_i) - (B - i))) with 1-based positions;
// zero means u is burned by round B. Terms from unreachable sources count as
// +infinity, and a vertex unreachable from every source gets kUnreachable.
std::vector<Dist> compute_deficits(const Graph& g, const BurningSequence& s,
                                   DistanceCache& cache);

// Returns the covering constraint of the farthest uncovered vertex (ties to
// the smallest id), or nullopt when s is a burning sequence. The witness's
// distance row is computed here if missing.
std::optional<CoveringConstraint> separate(const Graph& g, const BurningSequence& s,
                                           DistanceCache& cache);

// Up to k violated constraints, by decreasing deficit (ties: smaller id).
std::vector<CoveringConstraint> separate_top_k(const Graph& g, const BurningSequence& s,
                                               DistanceCache& cache, int32_t k);

// Seeds the constraint set with the heuristic sequence's witnesses. Their
// rows were already computed by farthest_first_sequence, so this performs no BFS.
ConstraintSet initial_constraints(const Graph& g, int32_t horizon, const BurningSequence& warm,
                                  DistanceCache& cache);

struct SearchLimits {
    std::optional<int64_t> node_budget;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class SearchStatus { kComplete, kExhausted, kLimit };

struct SearchResult {
    SearchStatus status = SearchStatus::kExhausted;
    std::vector<Vertex> assignment;  // length horizon iff kComplete
    int64_t nodes = 0;
};

// Decides whether B distinct vertices can be placed so that every loaded
// witness w has some position i holding a vertex within distance B - i.
// Positions are assigned depth-first in increasing order, which realizes the
// branching rule that early positions are decided first. Exhaustion is an
// exact infeasibility proof for the loaded rows.
SearchResult feasibility_search(const Graph& g, const ConstraintSet& cs, DistanceCache& cache,
                                const SearchLimits& limits = {});

// Backend seam: anything able to answer "does an assignment satisfying the
// loaded rows exist" can drive the row-generation loop (e.g. a MIP solver).
class FeasibilityBackend {
public:
    virtual ~FeasibilityBackend() = default;
    virtual SearchResult solve(const Graph& g, const ConstraintSet& cs, DistanceCache& cache,
                               const SearchLimits& limits) = 0;
};

struct BackendBallCache;

// Built-in combinatorial branch-and-bound backend (the default). Reuses
// per-witness coverage structures across the row-generation rounds of one
// horizon; not safe to share across threads.
class BranchAndBoundBackend final : public FeasibilityBackend {
public:
    SearchResult solve(const Graph& g, const ConstraintSet& cs, DistanceCache& cache,
                       const SearchLimits& limits) override;

private:
    std::shared_ptr<BackendBallCache> ball_cache_;
};

enum class DecisionVerdict { kFeasible, kInfeasible, kLimit };

struct DecisionStats {
    int32_t constraints_loaded = 0;
    int32_t separation_calls = 0;
    int64_t nodes = 0;
    std::vector<Vertex> probed_vertices;  // distinct sequence vertices seen by separation
};

struct DecisionOutcome {
    DecisionVerdict verdict = DecisionVerdict::kInfeasible;
    BurningSequence sequence;  // length B iff kFeasible
    DecisionStats stats;
};

struct DecisionConfig {
    SearchLimits limits;
    int32_t constraints_per_round = 1;  // how many violated rows to add per separation
    FeasibilityBackend* backend = nullptr;  // defaults to the built-in branch and bound
    // Test hook: observes every separation call (the found witness or nullopt).
    std::function<void(std::optional<Vertex>)> on_separation;
};

// Row-generation loop: seed rows from the warm sequence, solve, separate,
// repeat. Feasible answers are validated against the burning condition before
// being returned; infeasibility of the loaded subset proves infeasibility of
// the full model.
DecisionOutcome solve_decision(const Graph& g, int32_t B, const BurningSequence& warm,
                               DistanceCache& cache, const DecisionConfig& config = {});

}  // namespace gbp
