#pragma once

#include <cstdint>
#include <optional>

#include "gbp/graph.hpp"
#include "gbp/ingest.hpp"

namespace gbp {

struct SolveConfig {
    uint32_t seed = 0;
    std::optional<int64_t> node_budget;      // per decision query
    std::optional<double> time_limit_sec;    // whole solve
    bool emit_per_b_stats = true;
};

// Full pipeline: BFF-d bounds, then binary search over the horizon with one
// row-generated feasibility decision per probe. Distance rows persist in one
// cache across every query. The returned report's sequence holds dense vertex
// ids; callers that parsed a file remap them to original labels.
// Exceeding a limit yields status UNSOLVED with the best bounds found so far.
SolveReport solve_burning(const Graph& g, const SolveConfig& cfg = {});

}  // namespace gbp
