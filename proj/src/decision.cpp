#include "gbp/decision.hpp"

#include <algorithm>

#include "gbp/errors.hpp"

namespace gbp {

bool ConstraintSet::add(const Graph& g, Vertex w, DistanceCache& cache) {
    if (present_.contains(w)) return false;
    cache.get(g, w);
    witnesses_.push_back(w);
    present_.insert(w);
    return true;
}

std::vector<Dist> compute_deficits(const Graph& g, const BurningSequence& s,
                                   DistanceCache& cache) {
    const int32_t n = g.vertex_count();
    const auto B = static_cast<int32_t>(s.size());
    std::vector<Dist> deficits(static_cast<size_t>(n), kUnreachable);
    for (int32_t i = 1; i <= B; ++i) {
        const DistanceRow& row = cache.get(g, s[i - 1]);
        const Dist slack = B - i;
        for (Vertex u = 0; u < n; ++u) {
            if (row.dist[u] == kUnreachable) continue;
            deficits[u] = std::min(deficits[u], static_cast<Dist>(row.dist[u] - slack));
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        if (deficits[u] != kUnreachable) deficits[u] = std::max(deficits[u], 0);
    }
    return deficits;
}

std::vector<CoveringConstraint> separate_top_k(const Graph& g, const BurningSequence& s,
                                               DistanceCache& cache, int32_t k) {
    const std::vector<Dist> deficits = compute_deficits(g, s, cache);
    std::vector<Vertex> uncovered;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (deficits[u] > 0) uncovered.push_back(u);
    }
    // Farthest first; kUnreachable is the numeric maximum so stranded
    // components take precedence. Ties resolve to the smaller id.
    std::stable_sort(uncovered.begin(), uncovered.end(),
                     [&](Vertex a, Vertex b) { return deficits[a] > deficits[b]; });
    if (static_cast<int32_t>(uncovered.size()) > k) uncovered.resize(k);

    std::vector<CoveringConstraint> cuts;
    const auto B = static_cast<int32_t>(s.size());
    for (Vertex w : uncovered) {
        cache.get(g, w);
        cuts.push_back({w, B});
    }
    return cuts;
}

std::optional<CoveringConstraint> separate(const Graph& g, const BurningSequence& s,
                                           DistanceCache& cache) {
    std::vector<CoveringConstraint> cuts = separate_top_k(g, s, cache, 1);
    if (cuts.empty()) return std::nullopt;
    return cuts.front();
}

ConstraintSet initial_constraints(const Graph& g, int32_t horizon, const BurningSequence& warm,
                                  DistanceCache& cache) {
    ConstraintSet cs(horizon);
    for (Vertex v : warm) cs.add(g, v, cache);
    return cs;
}

// -------------------- branch and bound backend --------------------

namespace {

// Per-witness coverage ball: every vertex that can ever cover the witness
// (distance < horizon), ordered by distance, with one prefix end per radius.
struct WitnessBall {
    std::vector<Vertex> by_dist;
    std::vector<int32_t> prefix_end;  // index horizon entries: radius r -> prefix length

    int32_t end_at(Dist radius) const {
        if (radius < 0) return 0;
        const auto last = static_cast<Dist>(prefix_end.size()) - 1;
        return prefix_end[static_cast<size_t>(std::min(radius, last))];
    }
};

WitnessBall build_ball(const std::vector<Dist>& dist, int32_t n, int32_t horizon) {
    WitnessBall ball;
    for (Vertex u = 0; u < n; ++u) {
        if (dist[u] != kUnreachable && dist[u] < horizon) ball.by_dist.push_back(u);
    }
    std::stable_sort(ball.by_dist.begin(), ball.by_dist.end(),
                     [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    ball.prefix_end.assign(static_cast<size_t>(horizon), 0);
    for (Dist r = 0; r < horizon; ++r) {
        auto it = std::partition_point(ball.by_dist.begin(), ball.by_dist.end(),
                                       [&](Vertex u) { return dist[u] <= r; });
        ball.prefix_end[static_cast<size_t>(r)] = static_cast<int32_t>(it - ball.by_dist.begin());
    }
    return ball;
}

class Searcher {
public:
    Searcher(const Graph& g, const ConstraintSet& cs, DistanceCache& cache,
             const std::vector<const WitnessBall*>& balls, const SearchLimits& limits)
        : n_(g.vertex_count()),
          horizon_(cs.horizon()),
          limits_(limits),
          balls_(balls),
          used_(static_cast<size_t>(n_), 0),
          cover_count_(static_cast<size_t>(n_), 0),
          candidate_slot_(static_cast<size_t>(n_), 0),
          cursor_(static_cast<size_t>(n_), 0),
          stamp_(static_cast<size_t>(n_), 0) {
        const auto witnesses = cs.witnesses();
        rows_.reserve(witnesses.size());
        for (Vertex w : witnesses) rows_.push_back(&cache.get(g, w).dist);
        satisfied_.assign(witnesses.size(), 0);
        build_radius_caps();
    }

    SearchResult run() {
        SearchResult out;
        if (horizon_ > n_) {
            out.status = SearchStatus::kExhausted;
            return out;
        }
        slots_.assign(static_cast<size_t>(horizon_), -1);
        out.status = dfs(1);
        out.nodes = nodes_;
        if (out.status == SearchStatus::kComplete) out.assignment = slots_;
        return out;
    }

private:
    // max_cover_[r]: the most witnesses any single vertex reaches at radius r.
    // Computed once over all witnesses and vertices, so it upper-bounds every
    // node of the search. Radius 0 always caps at one witness per position.
    void build_radius_caps() {
        max_cover_.assign(static_cast<size_t>(horizon_), 0);
        std::vector<int32_t> reach(static_cast<size_t>(n_), 0);
        for (Dist r = 0; r < horizon_; ++r) {
            std::fill(reach.begin(), reach.end(), 0);
            int32_t best = 0;
            for (size_t j = 0; j < balls_.size(); ++j) {
                const int32_t end = balls_[j]->end_at(r);
                for (int32_t idx = 0; idx < end; ++idx) {
                    best = std::max(best, ++reach[balls_[j]->by_dist[idx]]);
                }
            }
            max_cover_[static_cast<size_t>(r)] = best;
        }
    }

    SearchStatus dfs(int32_t pos) {
        int32_t unsat = 0;
        for (char f : satisfied_) unsat += f == 0;
        if (unsat == 0) {
            // Constraints are all met; any unused vertices close the assignment.
            for (Vertex v = 0; v < n_ && pos <= horizon_; ++v) {
                if (!used_[v]) {
                    slots_[static_cast<size_t>(pos) - 1] = v;
                    used_[v] = 1;
                    ++pos;
                }
            }
            return SearchStatus::kComplete;
        }
        if (pos > horizon_) return SearchStatus::kExhausted;

        const Dist radius = horizon_ - pos;

        // Harvest candidates from the unsatisfied witnesses' balls; a witness
        // with no unused vertex in its ball can never be covered again. The
        // incidence arena records, per candidate, which witnesses it covers
        // (witness indices ascend because the outer loop does).
        ++epoch_;
        std::vector<Vertex> candidates;
        int64_t incidences = 0;
        for (size_t j = 0; j < rows_.size(); ++j) {
            if (satisfied_[j]) continue;
            bool alive = false;
            const int32_t end = balls_[j]->end_at(radius);
            for (int32_t idx = 0; idx < end; ++idx) {
                const Vertex u = balls_[j]->by_dist[idx];
                if (used_[u]) continue;
                alive = true;
                if (stamp_[u] != epoch_) {
                    stamp_[u] = epoch_;
                    cover_count_[u] = 0;
                    candidates.push_back(u);
                }
                ++cover_count_[u];
                ++incidences;
            }
            if (!alive) return SearchStatus::kExhausted;
        }

        // Radius-aware coverage budget: the t-th future position pairs the
        // t-th best current count with the global cap at its (smaller) radius.
        const int32_t positions_left = horizon_ - pos + 1;
        {
            std::vector<int32_t> counts;
            counts.reserve(candidates.size());
            for (Vertex u : candidates) counts.push_back(cover_count_[u]);
            const auto take = static_cast<size_t>(
                std::min<int64_t>(positions_left, static_cast<int64_t>(counts.size())));
            std::partial_sort(counts.begin(), counts.begin() + take, counts.end(),
                              std::greater<>());
            int64_t best_possible = 0;
            for (size_t t = 0; t < take; ++t) {
                best_possible += std::min(counts[t], max_cover_[static_cast<size_t>(radius) - t]);
            }
            if (best_possible < unsat) return SearchStatus::kExhausted;
        }

        // Fill the incidence arena: arena[slot(u) ..] lists the unsatisfied
        // witness indices u covers, in ascending order.
        std::vector<int32_t> arena(static_cast<size_t>(incidences));
        {
            int32_t offset = 0;
            for (Vertex u : candidates) {
                candidate_slot_[u] = offset;
                cursor_[u] = offset;
                offset += cover_count_[u];
            }
            for (size_t j = 0; j < rows_.size(); ++j) {
                if (satisfied_[j]) continue;
                const int32_t end = balls_[j]->end_at(radius);
                for (int32_t idx = 0; idx < end; ++idx) {
                    const Vertex u = balls_[j]->by_dist[idx];
                    if (used_[u]) continue;
                    arena[static_cast<size_t>(cursor_[u]++)] = static_cast<int32_t>(j);
                }
            }
        }

        // Candidates covering the same witness set are interchangeable as the
        // vertex placed here: after either placement the leftover twin can
        // only reach witnesses the placement already satisfied. Keep the
        // smallest id per coverage class. Branches capture their arena slice
        // now, before recursion reuses the per-vertex scratch arrays.
        struct Branch {
            Vertex v;
            int32_t slot;
            int32_t len;
        };
        std::vector<Branch> branches;
        {
            std::unordered_map<uint64_t, std::vector<size_t>> buckets;  // -> branch indices
            buckets.reserve(candidates.size() * 2);
            for (Vertex u : candidates) {
                const int32_t* cov = arena.data() + candidate_slot_[u];
                const int32_t len = cover_count_[u];
                uint64_t h = 1469598103934665603ull;
                for (int32_t t = 0; t < len; ++t) {
                    h ^= static_cast<uint64_t>(cov[t]) + 1;
                    h *= 1099511628211ull;
                }
                auto& bucket = buckets[h];
                bool merged = false;
                for (size_t idx : bucket) {
                    Branch& rep = branches[idx];
                    if (rep.len != len) continue;
                    if (std::equal(cov, cov + len, arena.data() + rep.slot)) {
                        if (u < rep.v) rep = {u, candidate_slot_[u], len};
                        merged = true;
                        break;
                    }
                }
                if (!merged) {
                    bucket.push_back(branches.size());
                    branches.push_back({u, candidate_slot_[u], len});
                }
            }
        }
        std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
            if (a.len != b.len) return a.len > b.len;
            return a.v < b.v;
        });

        for (const Branch& branch : branches) {
            ++nodes_;
            if (limits_.node_budget && nodes_ > *limits_.node_budget) return SearchStatus::kLimit;
            if (limits_.deadline && (nodes_ & 0xFF) == 0 &&
                std::chrono::steady_clock::now() > *limits_.deadline) {
                return SearchStatus::kLimit;
            }

            slots_[static_cast<size_t>(pos) - 1] = branch.v;
            used_[branch.v] = 1;
            const int32_t* cov = arena.data() + branch.slot;
            for (int32_t t = 0; t < branch.len; ++t) satisfied_[static_cast<size_t>(cov[t])] = 1;

            const SearchStatus sub = dfs(pos + 1);
            if (sub != SearchStatus::kExhausted) return sub;

            for (int32_t t = 0; t < branch.len; ++t) satisfied_[static_cast<size_t>(cov[t])] = 0;
            used_[branch.v] = 0;
            slots_[static_cast<size_t>(pos) - 1] = -1;
        }
        return SearchStatus::kExhausted;
    }

    int32_t n_;
    int32_t horizon_;
    const SearchLimits& limits_;
    std::vector<const WitnessBall*> balls_;
    std::vector<const std::vector<Dist>*> rows_;
    std::vector<char> satisfied_;
    std::vector<char> used_;
    std::vector<int32_t> cover_count_;
    std::vector<int32_t> candidate_slot_;
    std::vector<int32_t> cursor_;
    std::vector<int64_t> stamp_;
    std::vector<int32_t> max_cover_;
    int64_t epoch_ = 0;
    std::vector<Vertex> slots_;
    int64_t nodes_ = 0;
};

}  // namespace

struct BackendBallCache {
    const Graph* graph = nullptr;
    int32_t horizon = -1;
    std::unordered_map<Vertex, WitnessBall> balls;
};

SearchResult BranchAndBoundBackend::solve(const Graph& g, const ConstraintSet& cs,
                                          DistanceCache& cache, const SearchLimits& limits) {
    if (!ball_cache_) ball_cache_ = std::make_shared<BackendBallCache>();
    auto& bc = *ball_cache_;
    if (bc.horizon != cs.horizon() || bc.graph != &g) {
        bc.balls.clear();
        bc.horizon = cs.horizon();
        bc.graph = &g;
    }
    std::vector<const WitnessBall*> balls;
    balls.reserve(cs.witnesses().size());
    for (Vertex w : cs.witnesses()) {
        auto it = bc.balls.find(w);
        if (it == bc.balls.end()) {
            it = bc.balls
                     .emplace(w, build_ball(cache.get(g, w).dist, g.vertex_count(), cs.horizon()))
                     .first;
        }
        balls.push_back(&it->second);
    }
    return Searcher(g, cs, cache, balls, limits).run();
}

SearchResult feasibility_search(const Graph& g, const ConstraintSet& cs, DistanceCache& cache,
                                const SearchLimits& limits) {
    return BranchAndBoundBackend().solve(g, cs, cache, limits);
}

DecisionOutcome solve_decision(const Graph& g, int32_t B, const BurningSequence& warm,
                               DistanceCache& cache, const DecisionConfig& config) {
    if (B < 1 || B > g.vertex_count()) throw InternalError("decision horizon out of range");

    DecisionOutcome out;
    if (connected_components(g).count() > B) {
        // Fire never crosses components, so each needs its own source.
        out.verdict = DecisionVerdict::kInfeasible;
        return out;
    }

    BranchAndBoundBackend builtin;
    FeasibilityBackend* backend = config.backend ? config.backend : &builtin;
    ConstraintSet cs = initial_constraints(g, B, warm, cache);

    std::vector<char> probed(static_cast<size_t>(g.vertex_count()), 0);
    while (true) {
        SearchResult res = backend->solve(g, cs, cache, config.limits);
        out.stats.nodes += res.nodes;
        if (res.status == SearchStatus::kExhausted) {
            out.verdict = DecisionVerdict::kInfeasible;
            break;
        }
        if (res.status == SearchStatus::kLimit) {
            out.verdict = DecisionVerdict::kLimit;
            break;
        }

        BurningSequence s = std::move(res.assignment);
        for (Vertex v : s) probed[v] = 1;
        ++out.stats.separation_calls;
        const std::vector<CoveringConstraint> cuts =
            separate_top_k(g, s, cache, std::max(1, config.constraints_per_round));
        if (config.on_separation) {
            config.on_separation(cuts.empty() ? std::nullopt
                                              : std::optional<Vertex>(cuts.front().witness));
        }
        if (cuts.empty()) {
            if (validate_sequence(g, s, cache)) {
                throw InternalError("separation accepted a sequence that fails validation");
            }
            out.verdict = DecisionVerdict::kFeasible;
            out.sequence = std::move(s);
            break;
        }
        for (const CoveringConstraint& c : cuts) {
            if (cs.contains(c.witness)) {
                throw InternalError("separation returned an already loaded witness");
            }
            cs.add(g, c.witness, cache);
        }
    }

    out.stats.constraints_loaded = cs.size();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (probed[v]) out.stats.probed_vertices.push_back(v);
    }
    return out;
}

}  // namespace gbp
