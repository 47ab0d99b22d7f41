#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gbp/graph.hpp"

namespace gbp {

// Ordered fire sources (v_1, ..., v_k); always distinct vertices here.
using BurningSequence = std::vector<Vertex>;

struct Bounds {
    int32_t lower = 0;
    int32_t upper = 0;
};

// Burning-farthest-first approximation with on-demand distance rows. Each
// iteration runs one BFS (from the previously selected source) and picks the
// vertex farthest from all selected sources; unreachable counts as infinitely
// far, so disconnected graphs are handled by jumping components. The first
// source is the max-degree vertex; `seed` only permutes among tied candidates.
// All rows of the returned sequence are left in the cache, so the total BFS
// work is at most |S| searches.
BurningSequence farthest_first_sequence(const Graph& g, DistanceCache& cache, uint32_t seed = 0);

// L = ceil((|S|+2)/3), U = |S|. Valid because BFF is a (3 - 2/b(G))-approximation.
Bounds bounds_from_sequence(const BurningSequence& s);

struct Uncovered {
    Vertex vertex = 0;
    Dist deficit = 0;  // kUnreachable when no source can ever reach it
};

// Checks whether s burns all of g within |s| rounds. Returns std::nullopt when
// valid, otherwise the farthest uncovered vertex (ties to the smallest id).
// Throws MalformedSequenceError on repeated or out-of-range vertices.
std::optional<Uncovered> validate_sequence(const Graph& g, const BurningSequence& s,
                                           DistanceCache& cache);

// Component-based upper bound: p + sum_i ceil(sqrt(4 n_i / 3)).
int64_t component_upper_bound(const Graph& g);

// sum_i ceil(sqrt(n_i)); conjectured bound, reported but never relied upon.
int64_t conjectured_upper_bound(const Graph& g);

}  // namespace gbp
