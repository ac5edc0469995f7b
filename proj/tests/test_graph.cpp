#include <doctest.h>

#include <set>

#include "qclaw/checks.hpp"
#include "qclaw/glsinit.hpp"
#include "qclaw/graph.hpp"
#include "qclaw/json_io.hpp"

using namespace qclaw;

namespace {

QuantumSeed make_seed(const std::string& type, const IntVec& letters) {
    return initial_seed(CartanDatum::named(type), ReducedWord{letters}).seed;
}

size_t distinct_variables(const ExchangeGraph& g) {
    std::set<std::string> keys;
    for (const auto& s : g.nodes)
        for (const auto& e : s.expansions()) keys.insert(variable_key(e));
    return keys.size();
}

} // namespace

TEST_CASE("small graphs") {
    const ExchangeGraph a1 = enumerate_graph(make_seed("A1", {0}));
    CHECK(a1.node_count() == 1);
    CHECK(a1.canonical_edges().empty());
    CHECK(a1.closed);

    const ExchangeGraph a2 = enumerate_graph(make_seed("A2", {0, 1, 0}));
    CHECK(a2.node_count() == 2);
    CHECK(a2.canonical_edges().size() == 1);
    CHECK(a2.closed);
    CHECK(distinct_variables(a2) == 4);
}

TEST_CASE("the rank-3 graphs close at the associahedron size") {
    // golden values produced by the first certified enumeration run
    const ExchangeGraph g1 = enumerate_graph(make_seed("A3", {0, 1, 0, 2, 1, 0}));
    CHECK(g1.node_count() == 14);
    CHECK(g1.closed);
    CHECK(distinct_variables(g1) == 12);
    CHECK(g1.canonical_edges().size() == 26);

    const ExchangeGraph g2 = enumerate_graph(make_seed("A3", {0, 1, 2, 0, 1, 0}));
    CHECK(g2.node_count() == 14);
    CHECK(g2.closed);
    CHECK(distinct_variables(g2) == 12);
}

TEST_CASE("edge symmetry") {
    const ExchangeGraph g = enumerate_graph(make_seed("A3", {0, 1, 0, 2, 1, 0}));
    std::set<std::tuple<Int, Int, Int>> edges(g.edges.begin(), g.edges.end());
    for (const auto& [a, k, b] : edges) CHECK(edges.count({b, k, a}));
}

TEST_CASE("enumeration is deterministic") {
    const QuantumSeed root = make_seed("A3", {0, 1, 0, 2, 1, 0});
    const ExchangeGraph g1 = enumerate_graph(root);
    const ExchangeGraph g2 = enumerate_graph(root);
    REQUIRE(g1.node_count() == g2.node_count());
    for (Int i = 0; i < g1.node_count(); ++i)
        CHECK(canonical_seed_key(g1.nodes[static_cast<size_t>(i)]) ==
              canonical_seed_key(g2.nodes[static_cast<size_t>(i)]));
    CHECK(g1.edges == g2.edges);
}

TEST_CASE("depth cap reports an open frontier") {
    const ExchangeGraph g = enumerate_graph(make_seed("A3", {0, 1, 0, 2, 1, 0}), 1);
    CHECK_FALSE(g.closed);
    CHECK(g.node_count() == 4); // root plus its three neighbours
}

TEST_CASE("rebased expansion tables") {
    const QuantumSeed s = make_seed("A2", {0, 1, 0});
    const auto table = expansions_over(s);
    REQUIRE(table.size() == 4);
    // the initial variables expand to themselves
    for (Int i = 0; i < 3; ++i) {
        const auto key = variable_key(s.expansions()[static_cast<size_t>(i)]);
        CHECK(table.at(key) == s.expansions()[static_cast<size_t>(i)]);
    }
    // over the mutated seed, the old variable x1 regains the two-term form
    const QuantumSeed t = s.mutate(0);
    const auto table_t = expansions_over(t);
    const auto x1key = variable_key(s.expansions()[0]);
    CHECK(table_t.at(x1key).term_count() == 2);
}

TEST_CASE("graph JSON carries the shape") {
    const ExchangeGraph g = enumerate_graph(make_seed("A2", {0, 1, 0}));
    const Json j = graph_to_json(g);
    CHECK(j["schema"] == "qclaw/1");
    CHECK(j["node_count"] == 2);
    CHECK(j["edge_count"] == 1);
    CHECK(j["closed"] == true);
    CHECK(j["nodes"].size() == 2);
    const std::string dot = graph_to_dot(g);
    CHECK(dot.find("n0 -- n1") != std::string::npos);
}

TEST_CASE("check suites pass on the smallest example") {
    const QuantumSeed s = make_seed("A2", {0, 1, 0});
    SuiteOptions opts;
    opts.involution_sequences = 10;
    opts.dominance_pairs = 50;
    opts.tropical_samples = 100;
    opts.pbw_samples = 100;
    const auto reports = run_suites("all", s, opts);
    REQUIRE(reports.size() == suite_names().size());
    for (const auto& r : reports) {
        INFO(r.check_name);
        CHECK(r.passed());
        CHECK(r.instances_checked > 0);
    }
    CHECK_THROWS_AS(run_suite("nonsense", s, opts), ParseError);
}
