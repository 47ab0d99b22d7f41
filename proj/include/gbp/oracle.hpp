#pragma once

#include <vector>

#include "gbp/graph.hpp"

namespace gbp::oracle {

// All-pairs shortest paths by Floyd-Warshall. Deliberately independent of the
// BFS code so tests can cross-check the two.
std::vector<std::vector<Dist>> floyd_warshall(const Graph& g);

struct DecisionResult {
    bool feasible = false;
    std::vector<Vertex> sequence;  // length B iff feasible
    int64_t nodes_explored = 0;
};

struct OracleResult {
    int32_t burning_number = 0;
    std::vector<Vertex> witness;
    int64_t nodes_explored = 0;
};

// Exhaustively decides whether a length-B sequence of distinct vertices burns
// the whole graph. Exponential; refuses graphs larger than `guard`.
DecisionResult brute_force_decision(const Graph& g, int32_t B, int32_t guard = 16);

// Smallest feasible B. The scan always terminates at B = |V|.
OracleResult brute_force_burning_number(const Graph& g, int32_t guard = 16);

}  // namespace gbp::oracle
