#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gbp {

using Vertex = std::int32_t;
using Dist = std::int32_t;

// Sentinel for "no path". Never enters distance arithmetic: test first.
constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

// Immutable undirected graph in compressed adjacency form. Vertex ids are
// dense 0..vertex_count()-1; neighbor lists are sorted, self-loop free and
// duplicate free. Safe for concurrent reads once built.
class Graph {
public:
    Graph() = default;

    int32_t vertex_count() const { return vertex_count_; }
    int64_t edge_count() const { return static_cast<int64_t>(adjacency_.size()) / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    int32_t degree(Vertex v) const {
        return static_cast<int32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool in_range(Vertex v) const { return v >= 0 && v < vertex_count_; }

private:
    friend Graph build_graph(int32_t, std::span<const std::pair<Vertex, Vertex>>);

    int32_t vertex_count_ = 0;
    std::vector<int64_t> offsets_;   // vertex_count_+1 entries
    std::vector<Vertex> adjacency_;  // 2*|E| entries
};

// Builds a Graph from an (unordered) edge list. Duplicate edges are collapsed
// and self-loops dropped. Throws MalformedInputError on out-of-range endpoints.
Graph build_graph(int32_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

// Hop distances from one source; kUnreachable marks other components.
struct DistanceRow {
    Vertex source = 0;
    std::vector<Dist> dist;
};

// Single-source BFS, O(|V| + |E|).
DistanceRow bfs_distances(const Graph& g, Vertex source);

// Append-only per-source BFS store. Rows never change once inserted, so
// references returned by get() stay valid for the cache's lifetime.
// Concurrent reads of stored rows are safe; insertion is single-writer.
class DistanceCache {
public:
    // Returns the stored row for `source`, computing it via BFS at most once.
    const DistanceRow& get(const Graph& g, Vertex source);

    bool contains(Vertex source) const { return rows_.contains(source); }
    int64_t bfs_runs() const { return bfs_runs_; }
    size_t size() const { return rows_.size(); }

private:
    std::unordered_map<Vertex, DistanceRow> rows_;
    int64_t bfs_runs_ = 0;
};

struct ComponentLabeling {
    std::vector<int32_t> label;  // one entry per vertex, ids 0..p-1
    std::vector<int32_t> sizes;  // p entries, sum = vertex_count

    int32_t count() const { return static_cast<int32_t>(sizes.size()); }
};

// Component ids are assigned in order of each component's smallest vertex id.
ComponentLabeling connected_components(const Graph& g);

}  // namespace gbp
