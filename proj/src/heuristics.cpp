#include "gbp/heuristics.hpp"

#include <algorithm>
#include <cmath>

#include "gbp/decision.hpp"
#include "gbp/errors.hpp"

namespace gbp {

BurningSequence farthest_first_sequence(const Graph& g, DistanceCache& cache, uint32_t seed) {
    const int32_t n = g.vertex_count();
    if (n == 0) throw EmptyInstanceError();

    // First source: max degree; seed picks among ties.
    int32_t best_degree = -1;
    std::vector<Vertex> tied;
    for (Vertex v = 0; v < n; ++v) {
        int32_t d = g.degree(v);
        if (d > best_degree) {
            best_degree = d;
            tied.clear();
        }
        if (d == best_degree) tied.push_back(v);
    }
    BurningSequence s{tied[seed % tied.size()]};

    // min_dist[u]: distance to the nearest selected source.
    // cover_round[u]: min over sources v_t of d(u, v_t) + t; the sequence of
    // length k is a burning sequence iff cover_round[u] <= k for all u except
    // the last source, which only covers itself. Both arrays are refreshed in
    // O(|V|) per iteration from the single new BFS row.
    std::vector<Dist> min_dist(static_cast<size_t>(n), kUnreachable);
    std::vector<Dist> cover_round(static_cast<size_t>(n), kUnreachable);

    while (true) {
        const int32_t k = static_cast<int32_t>(s.size());
        const Vertex last = s.back();
        bool feasible = true;
        for (Vertex u = 0; u < n; ++u) {
            if (u != last && (cover_round[u] == kUnreachable || cover_round[u] > k)) {
                feasible = false;
                break;
            }
        }
        if (feasible) break;

        const DistanceRow& row = cache.get(g, last);
        for (Vertex u = 0; u < n; ++u) {
            const Dist d = row.dist[u];
            if (d == kUnreachable) continue;
            min_dist[u] = std::min(min_dist[u], d);
            cover_round[u] = std::min(cover_round[u], d + k);
        }

        Vertex next = 0;
        Dist farthest = -1;
        for (Vertex u = 0; u < n; ++u) {
            // kUnreachable is the numeric maximum, so other components win.
            if (min_dist[u] > farthest) {
                farthest = min_dist[u];
                next = u;
            }
        }
        s.push_back(next);
    }

    cache.get(g, s.back());  // row needed anyway when seeding the constraint set
    return s;
}

Bounds bounds_from_sequence(const BurningSequence& s) {
    const auto len = static_cast<int32_t>(s.size());
    return {(len + 2 + 2) / 3, len};
}

std::optional<Uncovered> validate_sequence(const Graph& g, const BurningSequence& s,
                                           DistanceCache& cache) {
    if (s.empty()) throw MalformedSequenceError("empty burning sequence");
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : s) {
        if (!g.in_range(v)) throw MalformedSequenceError("sequence vertex out of range");
        if (seen[v]) throw MalformedSequenceError("repeated vertex in sequence");
        seen[v] = 1;
    }

    std::vector<Dist> deficits = compute_deficits(g, s, cache);
    Vertex worst = -1;
    Dist worst_deficit = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (deficits[u] > worst_deficit) {
            worst_deficit = deficits[u];
            worst = u;
        }
    }
    if (worst == -1) return std::nullopt;
    return Uncovered{worst, worst_deficit};
}

namespace {

// Smallest t >= 0 with factor * t^2 >= value; exact integer arithmetic.
int64_t ceil_sqrt_ratio(int64_t value, int64_t factor) {
    auto t = static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(value) /
                                                      static_cast<double>(factor))));
    while (t > 0 && factor * (t - 1) * (t - 1) >= value) --t;
    while (factor * t * t < value) ++t;
    return t;
}

}  // namespace

int64_t component_upper_bound(const Graph& g) {
    ComponentLabeling comps = connected_components(g);
    int64_t bound = comps.count();
    for (int32_t size : comps.sizes) bound += ceil_sqrt_ratio(4 * static_cast<int64_t>(size), 3);
    return bound;
}

int64_t conjectured_upper_bound(const Graph& g) {
    ComponentLabeling comps = connected_components(g);
    int64_t total = 0;
    for (int32_t size : comps.sizes) total += ceil_sqrt_ratio(size, 1);
    return total;
}

}  // namespace gbp
