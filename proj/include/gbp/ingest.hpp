#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gbp/graph.hpp"

namespace gbp {

enum class InstanceFormat { kAuto, kEdgeList, kMatrixMarket };

// Dense id <-> original file label translation. Internal computation only
// ever sees dense ids; labels resurface in reports and CLI output.
struct LabelMap {
    std::vector<int64_t> to_original;                 // indexed by dense id
    std::unordered_map<int64_t, Vertex> to_dense;

    int64_t original(Vertex v) const { return to_original[v]; }
    std::optional<Vertex> dense(int64_t label) const {
        auto it = to_dense.find(label);
        if (it == to_dense.end()) return std::nullopt;
        return it->second;
    }
};

struct Instance {
    Graph graph;
    LabelMap labels;
    std::string name;
};

// Parses a plain edge list or MatrixMarket coordinate file. Lines starting
// with '%' or '#' are comments; the first two integer tokens of a data line
// are an edge's endpoints and any extra tokens (weights) are ignored. Labels
// are remapped densely in first-appearance order. For MatrixMarket the size
// header is consumed and its declared dimension is honored: declared vertices
// that appear in no entry become isolated vertices (appended after all seen
// labels, in ascending label order).
Instance parse_instance(std::istream& in, InstanceFormat format = InstanceFormat::kAuto,
                        std::string name = "");

// Convenience: open `path`, derive the instance name from the file stem.
Instance parse_instance_file(const std::string& path,
                             InstanceFormat format = InstanceFormat::kAuto);

// Canonical edge-list text: one "u v" line per edge, u < v, sorted. Isolated
// vertices are not representable, so parse(write_edge_list(g)) == g only for
// graphs whose vertices all appear in some edge.
std::string write_edge_list(const Graph& g);

// -------------------- solve report --------------------

struct PerBRecord {
    int32_t B = 0;
    std::string outcome;  // FEASIBLE | INFEASIBLE | LIMIT
    int32_t constraints_loaded = 0;
    int32_t separation_calls = 0;
    int64_t nodes = 0;
};

struct ReportStats {
    int64_t bfs_runs = 0;
    int64_t separation_probe_vertices = 0;
    int64_t total_constraints_loaded = 0;
    int32_t decision_queries = 0;
};

struct DecisionTiming {
    int32_t B = 0;
    int64_t ms = 0;
};

struct ReportTiming {
    int64_t heuristic_ms = 0;
    std::vector<DecisionTiming> decisions;
    int64_t total_ms = 0;
};

// One solve run, mirroring the artifact's JSON schema (docs/report-schema.md).
struct SolveReport {
    std::string instance;
    int32_t vertex_count = 0;
    int64_t edge_count = 0;
    std::string status;  // OPTIMAL | UNSOLVED
    int32_t heuristic_length = 0;
    int32_t lower_bound = 0;
    int32_t upper_bound = 0;
    std::optional<int32_t> optimum;
    std::vector<int64_t> sequence;  // original labels; best witness if UNSOLVED
    int64_t component_upper_bound = 0;
    int64_t conjectured_upper_bound = 0;
    std::vector<PerBRecord> per_b;
    std::optional<int32_t> constraints_at_optimum_minus_1;
    std::optional<int32_t> constraints_at_optimum;
    ReportStats stats;
    ReportTiming timing;
};

struct ReportWriteOptions {
    bool include_timing = true;
    bool pretty = false;
};

// Serializes with a fixed key order; refuses reports violating the schema
// invariants (throws InternalError). Inverse of read_report.
std::string write_report(const SolveReport& r, const ReportWriteOptions& opts = {});
SolveReport read_report(const std::string& text);

}  // namespace gbp
