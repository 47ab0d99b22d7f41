#include "gbp/oracle.hpp"

#include <string>

#include "gbp/errors.hpp"

namespace gbp::oracle {

std::vector<std::vector<Dist>> floyd_warshall(const Graph& g) {
    const int32_t n = g.vertex_count();
    std::vector<std::vector<Dist>> d(n, std::vector<Dist>(n, kUnreachable));
    for (Vertex v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(v)) d[v][w] = 1;
    }
    for (Vertex k = 0; k < n; ++k) {
        for (Vertex i = 0; i < n; ++i) {
            if (d[i][k] == kUnreachable) continue;
            for (Vertex j = 0; j < n; ++j) {
                if (d[k][j] == kUnreachable) continue;
                Dist via = d[i][k] + d[k][j];
                if (via < d[i][j]) d[i][j] = via;
            }
        }
    }
    return d;
}

namespace {

struct Enumerator {
    const std::vector<std::vector<Dist>>& d;
    int32_t n;
    int32_t B;
    std::vector<char> used;
    std::vector<char> covered;
    int32_t uncovered_count;
    std::vector<Vertex> prefix;
    int64_t nodes = 0;

    Enumerator(const std::vector<std::vector<Dist>>& dist, int32_t n_, int32_t B_)
        : d(dist), n(n_), B(B_), used(n_, 0), covered(n_, 0), uncovered_count(n_) {}

    // No single future source can burn two uncovered vertices farther apart
    // than twice the largest remaining radius, so a greedy far-apart packing
    // lower-bounds the number of positions still needed.
    bool packing_exceeds_remaining() const {
        const int32_t placed = static_cast<int32_t>(prefix.size());
        const int32_t remaining = B - placed;
        const Dist radius = static_cast<Dist>(B - placed - 1);
        std::vector<Vertex> reps;
        for (Vertex u = 0; u < n; ++u) {
            if (covered[u]) continue;
            bool separate = true;
            for (Vertex r : reps) {
                if (d[u][r] != kUnreachable && d[u][r] <= 2 * radius) {
                    separate = false;
                    break;
                }
            }
            if (separate) {
                reps.push_back(u);
                if (static_cast<int32_t>(reps.size()) > remaining) return true;
            }
        }
        return false;
    }

    bool extend() {
        if (uncovered_count == 0) {
            // Any unused vertices complete the sequence once all are burned.
            for (Vertex v = 0; v < n && static_cast<int32_t>(prefix.size()) < B; ++v) {
                if (!used[v]) {
                    used[v] = 1;
                    prefix.push_back(v);
                }
            }
            return true;
        }
        if (static_cast<int32_t>(prefix.size()) == B) return false;
        if (packing_exceeds_remaining()) return false;

        const int32_t pos = static_cast<int32_t>(prefix.size()) + 1;  // 1-based
        const Dist radius = static_cast<Dist>(B - pos);
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            ++nodes;
            used[v] = 1;
            prefix.push_back(v);
            std::vector<Vertex> newly;
            for (Vertex u = 0; u < n; ++u) {
                if (!covered[u] && d[u][v] != kUnreachable && d[u][v] <= radius) {
                    covered[u] = 1;
                    newly.push_back(u);
                }
            }
            uncovered_count -= static_cast<int32_t>(newly.size());
            if (extend()) return true;
            uncovered_count += static_cast<int32_t>(newly.size());
            for (Vertex u : newly) covered[u] = 0;
            prefix.pop_back();
            used[v] = 0;
        }
        return false;
    }
};

void check_preconditions(const Graph& g, int32_t guard) {
    if (g.vertex_count() == 0) throw EmptyInstanceError();
    if (g.vertex_count() > guard) {
        throw GuardExceededError("oracle refuses " + std::to_string(g.vertex_count()) +
                                 " vertices (guard " + std::to_string(guard) + ")");
    }
}

}  // namespace

DecisionResult brute_force_decision(const Graph& g, int32_t B, int32_t guard) {
    check_preconditions(g, guard);
    if (B < 1 || B > g.vertex_count()) return {false, {}, 0};

    const auto distances = floyd_warshall(g);
    Enumerator e(distances, g.vertex_count(), B);
    DecisionResult r;
    r.feasible = e.extend();
    r.nodes_explored = e.nodes;
    if (r.feasible) r.sequence = e.prefix;
    return r;
}

OracleResult brute_force_burning_number(const Graph& g, int32_t guard) {
    check_preconditions(g, guard);
    OracleResult out;
    for (int32_t B = 1; B <= g.vertex_count(); ++B) {
        DecisionResult r = brute_force_decision(g, B, guard);
        out.nodes_explored += r.nodes_explored;
        if (r.feasible) {
            out.burning_number = B;
            out.witness = r.sequence;
            return out;
        }
    }
    throw InternalError("burning-number scan passed B = |V| without a solution");
}

}  // namespace gbp::oracle
