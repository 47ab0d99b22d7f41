#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gbp/decision.hpp"
#include "gbp/driver.hpp"
#include "gbp/errors.hpp"
#include "gbp/heuristics.hpp"
#include "gbp/ingest.hpp"
#include "gbp/oracle.hpp"
#include "json.hpp"

namespace {

using gbp::InstanceFormat;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitLimit = 2;
constexpr int kExitInternal = 3;

InstanceFormat to_format(const std::string& name) {
    if (name == "edgelist") return InstanceFormat::kEdgeList;
    if (name == "mtx") return InstanceFormat::kMatrixMarket;
    return InstanceFormat::kAuto;
}

std::vector<int64_t> parse_label_list(const std::string& text) {
    std::vector<int64_t> labels;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream ts(token);
        int64_t value;
        if (!(ts >> value)) throw gbp::MalformedInputError("bad sequence token: '" + token + "'");
        labels.push_back(value);
    }
    if (labels.empty()) throw gbp::MalformedInputError("empty sequence");
    return labels;
}

gbp::BurningSequence to_dense_sequence(const gbp::Instance& inst,
                                       const std::vector<int64_t>& labels) {
    gbp::BurningSequence s;
    for (int64_t label : labels) {
        auto v = inst.labels.dense(label);
        if (!v) {
            throw gbp::MalformedInputError("label " + std::to_string(label) +
                                           " does not occur in the instance");
        }
        s.push_back(*v);
    }
    return s;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw gbp::MalformedInputError("cannot open output file: " + out_path);
    out << text;
}

std::string pretty_table(const gbp::SolveReport& r, bool with_timing) {
    std::ostringstream o;
    o << "instance        " << r.instance << "\n"
      << "vertices        " << r.vertex_count << "\n"
      << "edges           " << r.edge_count << "\n"
      << "status          " << r.status << "\n"
      << "bounds          L=" << r.lower_bound << " U=" << r.upper_bound
      << " (heuristic |S|=" << r.heuristic_length << ")\n"
      << "component bound  " << r.component_upper_bound << "\n";
    if (r.optimum) o << "optimum         " << *r.optimum << "\n";
    o << "sequence       ";
    for (int64_t v : r.sequence) o << ' ' << v;
    o << "\n";
    if (!r.per_b.empty()) {
        o << "decisions       B outcome constraints separations nodes\n";
        for (const auto& rec : r.per_b) {
            o << "               " << rec.B << ' ' << rec.outcome << ' ' << rec.constraints_loaded
              << ' ' << rec.separation_calls << ' ' << rec.nodes << "\n";
        }
    }
    o << "bfs runs        " << r.stats.bfs_runs << "\n";
    if (with_timing) {
        o << "time            heuristic " << r.timing.heuristic_ms << " ms, total "
          << r.timing.total_ms << " ms\n";
    }
    return o.str();
}

int run_solve(const std::string& path, InstanceFormat format, const gbp::SolveConfig& cfg,
              const std::string& out_path, bool pretty, bool with_timing) {
    gbp::Instance inst = gbp::parse_instance_file(path, format);
    gbp::SolveReport report = gbp::solve_burning(inst.graph, cfg);
    report.instance = inst.name;
    for (int64_t& v : report.sequence) v = inst.labels.original(static_cast<gbp::Vertex>(v));

    if (pretty) {
        emit(pretty_table(report, with_timing), out_path);
    } else {
        emit(gbp::write_report(report, {.include_timing = with_timing, .pretty = false}),
             out_path);
    }
    return report.status == "UNSOLVED" ? kExitLimit : kExitOk;
}

int run_validate(const std::string& path, InstanceFormat format, const std::string& seq_text,
                 const std::string& seq_file) {
    gbp::Instance inst = gbp::parse_instance_file(path, format);
    std::string text = seq_text;
    if (text.empty() && !seq_file.empty()) {
        std::ifstream in(seq_file);
        if (!in) throw gbp::MalformedInputError("cannot open sequence file: " + seq_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        for (char& c : text) {
            if (c == '\n' || c == '\r' || c == ' ' || c == '\t') c = ',';
        }
        std::string squashed;
        for (char c : text) {
            if (c == ',' && (squashed.empty() || squashed.back() == ',')) continue;
            squashed.push_back(c);
        }
        if (!squashed.empty() && squashed.back() == ',') squashed.pop_back();
        text = squashed;
    }
    if (text.empty()) throw gbp::MalformedInputError("provide --sequence or --sequence-file");

    gbp::BurningSequence s = to_dense_sequence(inst, parse_label_list(text));
    gbp::DistanceCache cache;
    auto uncovered = gbp::validate_sequence(inst.graph, s, cache);
    if (!uncovered) {
        std::cout << "VALID\n";
    } else {
        std::cout << "UNCOVERED vertex=" << inst.labels.original(uncovered->vertex)
                  << " deficit=";
        if (uncovered->deficit == gbp::kUnreachable) {
            std::cout << "unreachable";
        } else {
            std::cout << uncovered->deficit;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_bounds(const std::string& path, InstanceFormat format, uint32_t seed,
               const std::string& out_path, bool with_timing) {
    const auto start = std::chrono::steady_clock::now();
    gbp::Instance inst = gbp::parse_instance_file(path, format);
    gbp::DistanceCache cache;
    gbp::BurningSequence s = gbp::farthest_first_sequence(inst.graph, cache, seed);
    gbp::Bounds b = gbp::bounds_from_sequence(s);

    Json j;
    j["instance"] = inst.name;
    j["vertex_count"] = inst.graph.vertex_count();
    j["edge_count"] = inst.graph.edge_count();
    j["heuristic_length"] = s.size();
    j["lower_bound"] = b.lower;
    j["upper_bound"] = b.upper;
    j["component_upper_bound"] = gbp::component_upper_bound(inst.graph);
    j["conjectured_upper_bound"] = gbp::conjectured_upper_bound(inst.graph);
    Json seq = Json::array();
    for (gbp::Vertex v : s) seq.push_back(inst.labels.original(v));
    j["sequence"] = std::move(seq);
    if (with_timing) {
        const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        j["timing"] = Json{{"total_ms", (us + 500) / 1000}};
    }
    emit(j.dump() + "\n", out_path);
    return kExitOk;
}

int run_oracle(const std::string& path, InstanceFormat format, int32_t guard,
               const std::string& out_path) {
    gbp::Instance inst = gbp::parse_instance_file(path, format);
    gbp::oracle::OracleResult res = gbp::oracle::brute_force_burning_number(inst.graph, guard);

    Json j;
    j["instance"] = inst.name;
    j["vertex_count"] = inst.graph.vertex_count();
    j["edge_count"] = inst.graph.edge_count();
    j["burning_number"] = res.burning_number;
    Json seq = Json::array();
    for (gbp::Vertex v : res.witness) seq.push_back(inst.labels.original(v));
    j["sequence"] = std::move(seq);
    j["nodes_explored"] = res.nodes_explored;
    emit(j.dump() + "\n", out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for the graph burning number"};
    app.require_subcommand(1);

    std::string format_name = "auto";
    uint32_t seed = 0;
    std::optional<double> time_limit;
    std::optional<int64_t> node_budget;
    std::string out_path;
    bool pretty = false;
    bool no_timing = false;
    int32_t oracle_guard = 16;
    std::string sequence_text;
    std::string sequence_file;

    app.add_option("--format", format_name, "Instance format")
        ->check(CLI::IsMember({"auto", "edgelist", "mtx"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Heuristic tie-break seed")->capture_default_str();
    app.add_option("--out", out_path, "Write machine output to a file instead of stdout");
    app.add_flag("--no-timing", no_timing, "Suppress timing fields (stable output)");

    auto* solve = app.add_subcommand("solve", "Compute the burning number and a witness");
    solve->fallthrough();
    solve->add_option("instance", "Instance file")->required();
    solve->add_option("--time-limit", time_limit, "Wall-clock limit in seconds");
    solve->add_option("--node-budget", node_budget, "Search-node limit per decision query");
    solve->add_flag("--pretty", pretty, "Human-readable table instead of JSON");

    auto* validate = app.add_subcommand("validate", "Check a burning sequence");
    validate->fallthrough();
    validate->add_option("instance", "Instance file")->required();
    validate->add_option("--sequence", sequence_text, "Comma-separated original labels");
    validate->add_option("--sequence-file", sequence_file, "File with labels");

    auto* bounds = app.add_subcommand("bounds", "Heuristic sequence and bounds only");
    bounds->fallthrough();
    bounds->add_option("instance", "Instance file")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force solve (small graphs only)");
    oracle->fallthrough();
    oracle->add_option("instance", "Instance file")->required();
    oracle->add_option("--oracle-guard", oracle_guard, "Max vertices the oracle accepts")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        const InstanceFormat format = to_format(format_name);
        if (solve->parsed()) {
            gbp::SolveConfig cfg;
            cfg.seed = seed;
            cfg.node_budget = node_budget;
            cfg.time_limit_sec = time_limit;
            return run_solve(solve->get_option("instance")->as<std::string>(), format, cfg,
                             out_path, pretty, !no_timing);
        }
        if (validate->parsed()) {
            return run_validate(validate->get_option("instance")->as<std::string>(), format,
                                sequence_text, sequence_file);
        }
        if (bounds->parsed()) {
            return run_bounds(bounds->get_option("instance")->as<std::string>(), format, seed,
                              out_path, !no_timing);
        }
        return run_oracle(oracle->get_option("instance")->as<std::string>(), format,
                          oracle_guard, out_path);
    } catch (const gbp::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const gbp::MalformedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInternal;
    }
}
