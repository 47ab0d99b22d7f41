#pragma once

// Test-side graph generators. Everything is seeded and deterministic so
// failures reproduce; expected values are always computed, never frozen from
// a generator run.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gbp/graph.hpp"

namespace testgen {

using EdgeList = std::vector<std::pair<gbp::Vertex, gbp::Vertex>>;

inline gbp::Graph from_edges(int32_t n, const EdgeList& edges) {
    return gbp::build_graph(n, edges);
}

inline gbp::Graph path(int32_t n) {
    EdgeList e;
    for (int32_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return from_edges(n, e);
}

inline gbp::Graph cycle(int32_t n) {
    EdgeList e;
    for (int32_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    if (n >= 3) e.push_back({n - 1, 0});
    return from_edges(n, e);
}

// Center 0 with n-1 leaves.
inline gbp::Graph star(int32_t n) {
    EdgeList e;
    for (int32_t i = 1; i < n; ++i) e.push_back({0, i});
    return from_edges(n, e);
}

inline gbp::Graph complete(int32_t n) {
    EdgeList e;
    for (int32_t i = 0; i < n; ++i) {
        for (int32_t j = i + 1; j < n; ++j) e.push_back({i, j});
    }
    return from_edges(n, e);
}

// Heap-shaped: vertex i has children 2i+1 and 2i+2.
inline gbp::Graph balanced_binary_tree(int32_t n) {
    EdgeList e;
    for (int32_t i = 1; i < n; ++i) e.push_back({(i - 1) / 2, i});
    return from_edges(n, e);
}

inline gbp::Graph erdos_renyi(int32_t n, double p, std::mt19937& rng) {
    EdgeList e;
    const auto threshold = static_cast<uint64_t>(p * 4294967296.0);
    for (int32_t i = 0; i < n; ++i) {
        for (int32_t j = i + 1; j < n; ++j) {
            if (rng() < threshold) e.push_back({i, j});
        }
    }
    return from_edges(n, e);
}

// Random spanning tree plus extra chords; connected by construction.
inline gbp::Graph random_connected(int32_t n, int64_t target_edges, std::mt19937& rng) {
    EdgeList e;
    for (int32_t v = 1; v < n; ++v) {
        e.push_back({static_cast<gbp::Vertex>(rng() % static_cast<uint32_t>(v)), v});
    }
    while (static_cast<int64_t>(e.size()) < target_edges) {
        auto u = static_cast<gbp::Vertex>(rng() % static_cast<uint32_t>(n));
        auto v = static_cast<gbp::Vertex>(rng() % static_cast<uint32_t>(n));
        if (u != v) e.push_back({u, v});
    }
    return from_edges(n, e);  // duplicates collapse, so |E| may be slightly below target
}

inline gbp::Graph relabel(const gbp::Graph& g, const std::vector<gbp::Vertex>& perm) {
    EdgeList e;
    for (gbp::Vertex u = 0; u < g.vertex_count(); ++u) {
        for (gbp::Vertex v : g.neighbors(u)) {
            if (u < v) e.push_back({perm[u], perm[v]});
        }
    }
    return from_edges(g.vertex_count(), e);
}

inline std::vector<gbp::Vertex> random_permutation(int32_t n, std::mt19937& rng) {
    std::vector<gbp::Vertex> perm(n);
    for (int32_t i = 0; i < n; ++i) perm[i] = i;
    for (int32_t i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng() % static_cast<uint32_t>(i + 1)]);
    }
    return perm;
}

// The small-graph zoo used by the oracle-equivalence suites: structured
// families plus Erdos-Renyi samples (disconnected ones included) for
// n in [1, 12].
inline std::vector<gbp::Graph> oracle_suite(int32_t er_samples_per_config = 8) {
    std::vector<gbp::Graph> suite;
    for (int32_t n = 1; n <= 12; ++n) suite.push_back(path(n));
    for (int32_t n = 3; n <= 12; ++n) suite.push_back(cycle(n));
    for (int32_t n = 2; n <= 12; ++n) suite.push_back(star(n));
    for (int32_t n = 1; n <= 12; ++n) suite.push_back(complete(n));
    for (int32_t n = 1; n <= 12; ++n) suite.push_back(balanced_binary_tree(n));
    std::mt19937 rng(20240809);
    for (double p : {0.15, 0.3, 0.6}) {
        for (int32_t n = 1; n <= 12; ++n) {
            for (int32_t s = 0; s < er_samples_per_config; ++s) {
                suite.push_back(erdos_renyi(n, p, rng));
            }
        }
    }
    return suite;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(GBP_DATA_DIR) + "/" + name;
}

}  // namespace testgen
