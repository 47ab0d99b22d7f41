#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gbp/errors.hpp"
#include "gbp/ingest.hpp"
#include "generators.hpp"
#include "json.hpp"

using namespace gbp;

namespace {

Instance parse_text(const std::string& text, InstanceFormat fmt = InstanceFormat::kAuto) {
    std::istringstream in(text);
    return parse_instance(in, fmt, "inline");
}

SolveReport sample_report() {
    SolveReport r;
    r.instance = "sample";
    r.vertex_count = 5;
    r.edge_count = 4;
    r.status = "OPTIMAL";
    r.heuristic_length = 3;
    r.lower_bound = 2;
    r.upper_bound = 3;
    r.optimum = 2;
    r.sequence = {10, 20};
    r.component_upper_bound = 4;
    r.conjectured_upper_bound = 3;
    r.per_b = {{2, "FEASIBLE", 3, 1, 7}};
    r.constraints_at_optimum = 3;
    r.stats = {5, 2, 3, 1};
    r.timing.heuristic_ms = 1;
    r.timing.decisions = {{2, 0}};
    r.timing.total_ms = 2;
    return r;
}

}  // namespace

TEST_CASE("plain edge list parses with first-appearance remapping") {
    Instance inst = parse_text("1 2\n2 3\n");
    CHECK(inst.graph.vertex_count() == 3);
    CHECK(inst.graph.edge_count() == 2);
    CHECK(inst.labels.to_original == std::vector<int64_t>{1, 2, 3});
    CHECK(inst.labels.dense(3) == Vertex{2});
    CHECK_FALSE(inst.labels.dense(4).has_value());
}

TEST_CASE("comments, self-loops and extra tokens are handled") {
    Instance inst = parse_text("# comment\n5 5\n5 6 0.25\n");
    CHECK(inst.graph.vertex_count() == 2);
    CHECK(inst.graph.edge_count() == 1);
    CHECK(inst.labels.to_original == std::vector<int64_t>{5, 6});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_text("1 2\nx 3\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_text("1 -2\n"), ParseError);
    CHECK_THROWS_AS(parse_text("7\n"), ParseError);
    CHECK_THROWS_AS(parse_text(""), EmptyInstanceError);
    CHECK_THROWS_AS(parse_text("% only comments\n"), EmptyInstanceError);
}

TEST_CASE("matrix market header is consumed and its dimension honored") {
    const std::string mm =
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "% a comment\n"
        "4 4 2\n"
        "1 2\n"
        "2 3\n";
    Instance inst = parse_text(mm);
    CHECK(inst.graph.vertex_count() == 4);  // vertex 4 is declared but isolated
    CHECK(inst.graph.edge_count() == 2);
    CHECK(inst.labels.to_original == std::vector<int64_t>{1, 2, 3, 4});

    CHECK_THROWS_AS(parse_text("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n1 3\n"),
                    ParseError);
}

TEST_CASE("auto-detection picks the format from the banner only") {
    Instance as_edges = parse_text("3 4\n", InstanceFormat::kAuto);
    CHECK(as_edges.graph.vertex_count() == 2);  // "3 4" is an edge, not a header

    Instance forced = parse_text("3 3 1\n1 2\n", InstanceFormat::kMatrixMarket);
    CHECK(forced.graph.vertex_count() == 3);
    CHECK(forced.graph.edge_count() == 1);
}

TEST_CASE("karate fixture parses to the published size") {
    Instance inst = parse_instance_file(testgen::fixture_path("karate.mtx"));
    CHECK(inst.name == "karate");
    CHECK(inst.graph.vertex_count() == 34);
    CHECK(inst.graph.edge_count() == 78);
}

TEST_CASE("remapping preserves the degree multiset") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int32_t n = 2 + static_cast<int32_t>(rng() % 20);
        Graph g = testgen::erdos_renyi(n, 0.4, rng);
        std::ostringstream shuffled;
        std::vector<std::string> lines;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v : g.neighbors(u)) {
                if (u < v) lines.push_back(std::to_string(u * 7 + 3) + " " + std::to_string(v * 7 + 3));
            }
        }
        if (lines.empty()) continue;
        for (int32_t i = static_cast<int32_t>(lines.size()) - 1; i > 0; --i) {
            std::swap(lines[i], lines[rng() % static_cast<uint32_t>(i + 1)]);
        }
        for (const auto& l : lines) shuffled << l << "\n";

        Instance inst = parse_text(shuffled.str());
        std::multiset<int32_t> before, after;
        for (Vertex v = 0; v < n; ++v) {
            if (g.degree(v) > 0) before.insert(g.degree(v));
        }
        for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) after.insert(inst.graph.degree(v));
        CHECK(before == after);
    }
}

TEST_CASE("parse of the canonical edge-list writer is the identity") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        const int32_t n = 2 + static_cast<int32_t>(rng() % 25);
        Graph g = testgen::random_connected(n, n + 5, rng);  // no isolated vertices
        Instance round = parse_text(write_edge_list(g));
        REQUIRE(round.graph.vertex_count() == n);
        CHECK(round.graph.edge_count() == g.edge_count());
        for (Vertex v = 0; v < n; ++v) {
            Vertex mapped = *round.labels.dense(v);
            CHECK(round.graph.degree(mapped) == g.degree(v));
        }
    }
}

TEST_CASE("report serialization round-trips and key order is stable") {
    const SolveReport r = sample_report();
    const std::string text = write_report(r);
    const SolveReport back = read_report(text);
    CHECK(write_report(back) == text);

    // documented key order
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{
                      "schema_version", "instance", "vertex_count", "edge_count", "status",
                      "heuristic_length", "lower_bound", "upper_bound", "optimum", "sequence",
                      "component_upper_bound", "conjectured_upper_bound", "per_b",
                      "constraints_at_optimum_minus_1", "constraints_at_optimum", "stats",
                      "timing"});
}

TEST_CASE("report matches the shipped schema file") {
    const auto j = nlohmann::ordered_json::parse(write_report(sample_report()));
    std::ifstream schema_file(std::string(GBP_DOCS_DIR) + "/report-schema.json");
    REQUIRE(schema_file.good());
    const auto schema = nlohmann::json::parse(schema_file);
    CHECK(schema.at("schema_version").get<int>() == 1);

    auto type_matches = [](const nlohmann::ordered_json& v, const std::string& type) {
        if (type == "integer") return v.is_number_integer();
        if (type == "string") return v.is_string();
        if (type == "array") return v.is_array();
        if (type == "object") return v.is_object();
        if (type == "integer-or-null") return v.is_number_integer() || v.is_null();
        return false;
    };
    for (const auto& [key, type] : schema.at("required").items()) {
        REQUIRE_MESSAGE(j.contains(key), "missing key " << key);
        CHECK_MESSAGE(type_matches(j.at(key), type.get<std::string>()), "bad type for " << key);
    }
    for (const auto& [key, type] : schema.at("optional").items()) {
        if (j.contains(key)) {
            CHECK(type_matches(j.at(key), type.get<std::string>()));
        }
    }
    // nothing undocumented leaks into the report
    for (auto it = j.begin(); it != j.end(); ++it) {
        CHECK((schema.at("required").contains(it.key()) || schema.at("optional").contains(it.key())));
    }
}

TEST_CASE("inconsistent reports are refused") {
    SolveReport r = sample_report();
    r.sequence = {10, 20, 30};  // length != optimum
    CHECK_THROWS_AS(write_report(r), InternalError);

    r = sample_report();
    r.lower_bound = 9;  // L > U
    CHECK_THROWS_AS(write_report(r), InternalError);

    r = sample_report();
    r.per_b[0].constraints_loaded = 99;  // more witnesses than vertices
    CHECK_THROWS_AS(write_report(r), InternalError);

    r = sample_report();
    r.status = "UNSOLVED";  // UNSOLVED must not carry an optimum
    CHECK_THROWS_AS(write_report(r), InternalError);
}

TEST_CASE("timing can be suppressed for byte-stable output") {
    const std::string with = write_report(sample_report());
    const std::string without = write_report(sample_report(), {.include_timing = false});
    CHECK(with != without);
    CHECK(without.find("timing") == std::string::npos);
    CHECK(read_report(without).timing.total_ms == 0);
}
