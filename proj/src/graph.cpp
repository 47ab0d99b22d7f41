#include "gbp/graph.hpp"

#include <algorithm>
#include <string>

#include "gbp/errors.hpp"

namespace gbp {

Graph build_graph(int32_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (vertex_count < 0) throw MalformedInputError("negative vertex count");

    std::vector<std::pair<Vertex, Vertex>> arcs;
    arcs.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            throw MalformedInputError("edge endpoint out of range: {" + std::to_string(u) +
                                      "," + std::to_string(v) + "} with |V|=" +
                                      std::to_string(vertex_count));
        }
        if (u == v) continue;
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.vertex_count_ = vertex_count;
    g.offsets_.assign(static_cast<size_t>(vertex_count) + 1, 0);
    g.adjacency_.reserve(arcs.size());
    for (const auto& [u, v] : arcs) {
        g.offsets_[static_cast<size_t>(u) + 1]++;
        g.adjacency_.push_back(v);
    }
    for (size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
    return g;
}

DistanceRow bfs_distances(const Graph& g, Vertex source) {
    if (!g.in_range(source)) throw MalformedInputError("BFS source out of range");

    DistanceRow row;
    row.source = source;
    row.dist.assign(static_cast<size_t>(g.vertex_count()), kUnreachable);
    row.dist[source] = 0;

    std::vector<Vertex> frontier{source};
    std::vector<Vertex> next;
    Dist level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex u : frontier) {
            for (Vertex w : g.neighbors(u)) {
                if (row.dist[w] == kUnreachable) {
                    row.dist[w] = level;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return row;
}

const DistanceRow& DistanceCache::get(const Graph& g, Vertex source) {
    auto it = rows_.find(source);
    if (it != rows_.end()) return it->second;
    ++bfs_runs_;
    return rows_.emplace(source, bfs_distances(g, source)).first->second;
}

ComponentLabeling connected_components(const Graph& g) {
    const int32_t n = g.vertex_count();
    ComponentLabeling out;
    out.label.assign(static_cast<size_t>(n), -1);

    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (out.label[start] != -1) continue;
        const int32_t id = out.count();
        int32_t size = 0;
        stack.push_back(start);
        out.label[start] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : g.neighbors(u)) {
                if (out.label[w] == -1) {
                    out.label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        out.sizes.push_back(size);
    }
    return out;
}

}  // namespace gbp
