#include "gbp/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "gbp/errors.hpp"
#include "json.hpp"

namespace gbp {

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

bool is_comment(const std::string& line) {
    size_t i = line.find_first_not_of(" \t");
    return i != std::string::npos && (line[i] == '%' || line[i] == '#');
}

int64_t parse_label(const std::string& token, long line_number) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("endpoint token '" + token + "' is not an integer", line_number);
    }
    if (value < 0) throw ParseError("negative vertex label " + token, line_number);
    return value;
}

struct RawEdges {
    std::vector<std::pair<int64_t, int64_t>> edges;
    int64_t declared_dimension = 0;  // MatrixMarket only
    bool matrix_market = false;
};

RawEdges scan_lines(const std::vector<std::string>& lines, InstanceFormat format) {
    RawEdges out;
    if (format == InstanceFormat::kAuto) {
        for (const auto& line : lines) {
            if (is_blank(line)) continue;
            out.matrix_market = line.rfind("%%MatrixMarket", 0) == 0;
            break;
        }
    } else {
        out.matrix_market = format == InstanceFormat::kMatrixMarket;
    }

    bool size_header_pending = out.matrix_market;
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (is_blank(line) || is_comment(line)) continue;
        const long line_number = static_cast<long>(i) + 1;

        std::istringstream toks(line);
        std::string a, b;
        toks >> a >> b;
        if (a.empty() || b.empty()) {
            throw ParseError("expected at least two tokens", line_number);
        }
        int64_t u = parse_label(a, line_number);
        int64_t v = parse_label(b, line_number);

        if (size_header_pending) {
            // "rows cols nnz" — metadata, not an edge.
            out.declared_dimension = std::max(u, v);
            size_header_pending = false;
            continue;
        }
        if (out.matrix_market && (u < 1 || u > out.declared_dimension || v < 1 ||
                                  v > out.declared_dimension)) {
            throw ParseError("entry outside declared dimension " +
                                 std::to_string(out.declared_dimension),
                             line_number);
        }
        out.edges.emplace_back(u, v);
    }
    return out;
}

}  // namespace

Instance parse_instance(std::istream& in, InstanceFormat format, std::string name) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

    RawEdges raw = scan_lines(lines, format);

    Instance inst;
    inst.name = std::move(name);
    auto dense_id = [&inst](int64_t label) {
        auto [it, inserted] =
            inst.labels.to_dense.try_emplace(label, static_cast<Vertex>(inst.labels.to_original.size()));
        if (inserted) inst.labels.to_original.push_back(label);
        return it->second;
    };

    std::vector<std::pair<Vertex, Vertex>> dense_edges;
    dense_edges.reserve(raw.edges.size());
    for (const auto& [u, v] : raw.edges) {
        const Vertex du = dense_id(u);  // sequenced: u must be remapped before v
        const Vertex dv = dense_id(v);
        dense_edges.emplace_back(du, dv);
    }
    if (raw.matrix_market) {
        for (int64_t label = 1; label <= raw.declared_dimension; ++label) {
            dense_id(label);  // declared but isolated vertices
        }
    }

    if (inst.labels.to_original.empty()) throw EmptyInstanceError();
    inst.graph = build_graph(static_cast<int32_t>(inst.labels.to_original.size()), dense_edges);
    return inst;
}

Instance parse_instance_file(const std::string& path, InstanceFormat format) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open instance file: " + path);

    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos) {
        stem = stem.substr(slash + 1);
    }
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) {
        stem = stem.substr(0, dot);
    }
    return parse_instance(in, format, stem);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
    return out.str();
}

// -------------------- solve report --------------------

namespace {

using Json = nlohmann::ordered_json;

void check_report_invariants(const SolveReport& r) {
    auto fail = [](const std::string& what) {
        throw InternalError("inconsistent solve report: " + what);
    };
    if (r.vertex_count < 1) fail("vertex_count < 1");
    if (r.status != "OPTIMAL" && r.status != "UNSOLVED") fail("unknown status " + r.status);
    if (r.lower_bound < 1 || r.lower_bound > r.upper_bound) fail("bounds out of order");
    if (r.upper_bound > r.vertex_count) fail("upper bound exceeds |V|");
    if (r.status == "OPTIMAL") {
        if (!r.optimum) fail("OPTIMAL without optimum");
        if (*r.optimum < r.lower_bound || *r.optimum > r.upper_bound) {
            fail("optimum outside [L, U]");
        }
        if (static_cast<int64_t>(r.sequence.size()) != *r.optimum) {
            fail("sequence length != optimum");
        }
    } else {
        if (r.optimum) fail("UNSOLVED with optimum");
        if (static_cast<int64_t>(r.sequence.size()) != r.upper_bound) {
            fail("sequence length != upper bound");
        }
    }
    for (const auto& rec : r.per_b) {
        if (rec.B < 1 || rec.B > r.vertex_count) fail("per-B record out of range");
        if (rec.constraints_loaded > r.vertex_count) {
            fail("constraints_loaded exceeds |V| at B=" + std::to_string(rec.B));
        }
        if (rec.outcome != "FEASIBLE" && rec.outcome != "INFEASIBLE" && rec.outcome != "LIMIT") {
            fail("unknown per-B outcome " + rec.outcome);
        }
    }
}

Json optional_int(const std::optional<int32_t>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string write_report(const SolveReport& r, const ReportWriteOptions& opts) {
    check_report_invariants(r);

    Json j;
    j["schema_version"] = 1;
    j["instance"] = r.instance;
    j["vertex_count"] = r.vertex_count;
    j["edge_count"] = r.edge_count;
    j["status"] = r.status;
    j["heuristic_length"] = r.heuristic_length;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["optimum"] = optional_int(r.optimum);
    j["sequence"] = r.sequence;
    j["component_upper_bound"] = r.component_upper_bound;
    j["conjectured_upper_bound"] = r.conjectured_upper_bound;
    j["per_b"] = Json::array();
    for (const auto& rec : r.per_b) {
        Json e;
        e["B"] = rec.B;
        e["outcome"] = rec.outcome;
        e["constraints_loaded"] = rec.constraints_loaded;
        e["separation_calls"] = rec.separation_calls;
        e["nodes"] = rec.nodes;
        j["per_b"].push_back(std::move(e));
    }
    j["constraints_at_optimum_minus_1"] = optional_int(r.constraints_at_optimum_minus_1);
    j["constraints_at_optimum"] = optional_int(r.constraints_at_optimum);
    j["stats"] = {{"bfs_runs", r.stats.bfs_runs},
                  {"separation_probe_vertices", r.stats.separation_probe_vertices},
                  {"total_constraints_loaded", r.stats.total_constraints_loaded},
                  {"decision_queries", r.stats.decision_queries}};
    if (opts.include_timing) {
        Json t;
        t["heuristic_ms"] = r.timing.heuristic_ms;
        t["decision_ms"] = Json::array();
        for (const auto& d : r.timing.decisions) {
            t["decision_ms"].push_back(Json{{"B", d.B}, {"ms", d.ms}});
        }
        t["total_ms"] = r.timing.total_ms;
        j["timing"] = std::move(t);
    }
    return opts.pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

SolveReport read_report(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("bad report JSON: ") + e.what());
    }
    try {
        SolveReport r;
        if (j.at("schema_version").get<int>() != 1) {
            throw MalformedInputError("unsupported report schema version");
        }
        r.instance = j.at("instance").get<std::string>();
        r.vertex_count = j.at("vertex_count").get<int32_t>();
        r.edge_count = j.at("edge_count").get<int64_t>();
        r.status = j.at("status").get<std::string>();
        r.heuristic_length = j.at("heuristic_length").get<int32_t>();
        r.lower_bound = j.at("lower_bound").get<int32_t>();
        r.upper_bound = j.at("upper_bound").get<int32_t>();
        if (!j.at("optimum").is_null()) r.optimum = j.at("optimum").get<int32_t>();
        r.sequence = j.at("sequence").get<std::vector<int64_t>>();
        r.component_upper_bound = j.at("component_upper_bound").get<int64_t>();
        r.conjectured_upper_bound = j.at("conjectured_upper_bound").get<int64_t>();
        for (const auto& e : j.at("per_b")) {
            PerBRecord rec;
            rec.B = e.at("B").get<int32_t>();
            rec.outcome = e.at("outcome").get<std::string>();
            rec.constraints_loaded = e.at("constraints_loaded").get<int32_t>();
            rec.separation_calls = e.at("separation_calls").get<int32_t>();
            rec.nodes = e.at("nodes").get<int64_t>();
            r.per_b.push_back(std::move(rec));
        }
        if (!j.at("constraints_at_optimum_minus_1").is_null()) {
            r.constraints_at_optimum_minus_1 = j.at("constraints_at_optimum_minus_1").get<int32_t>();
        }
        if (!j.at("constraints_at_optimum").is_null()) {
            r.constraints_at_optimum = j.at("constraints_at_optimum").get<int32_t>();
        }
        const auto& s = j.at("stats");
        r.stats.bfs_runs = s.at("bfs_runs").get<int64_t>();
        r.stats.separation_probe_vertices = s.at("separation_probe_vertices").get<int64_t>();
        r.stats.total_constraints_loaded = s.at("total_constraints_loaded").get<int64_t>();
        r.stats.decision_queries = s.at("decision_queries").get<int32_t>();
        if (j.contains("timing")) {
            const auto& t = j.at("timing");
            r.timing.heuristic_ms = t.at("heuristic_ms").get<int64_t>();
            for (const auto& d : t.at("decision_ms")) {
                r.timing.decisions.push_back({d.at("B").get<int32_t>(), d.at("ms").get<int64_t>()});
            }
            r.timing.total_ms = t.at("total_ms").get<int64_t>();
        }
        check_report_invariants(r);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("report field error: ") + e.what());
    }
}

}  // namespace gbp
