#include "doctest.h"

#include <random>
#include <set>

#include "f1arr/errors.hpp"
#include "f1arr/graph.hpp"
#include "f1arr/lattice.hpp"
#include "f1arr/matrix.hpp"
#include "helpers.hpp"

using namespace f1arr;

namespace {

Graph triangle() { return Graph{3, {{0, 1}, {1, 2}, {2, 0}}}; }

// two vertices joined by three parallel edges
Graph theta() { return Graph{2, {{0, 1}, {0, 1}, {0, 1}}}; }

// two triangles glued at vertex 0
Graph bowtie() { return Graph{5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}}; }

Graph k4() {
    return Graph{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

// every cycle vector must be a circulation: signed edge incidences balance
// at every vertex
bool is_circulation(const Graph& g, const std::vector<int>& cycle) {
    std::vector<long> balance(g.vertex_count, 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        balance[g.edges[e].first] -= cycle[e];
        balance[g.edges[e].second] += cycle[e];
    }
    for (long b : balance) {
        if (b != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("spanning_forest is deterministic and correct") {
    CHECK(spanning_forest(triangle()).edge_indices == std::vector<std::size_t>{0, 1});
    CHECK(spanning_forest(theta()).edge_indices == std::vector<std::size_t>{0});

    Graph forest{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(spanning_forest(forest).edge_indices == std::vector<std::size_t>{0, 1, 2});

    Graph with_loop{2, {{0, 0}, {0, 1}}};
    CHECK(spanning_forest(with_loop).edge_indices == std::vector<std::size_t>{1});
}

TEST_CASE("betti number counts independent cycles") {
    CHECK(betti_number(triangle()) == 1);
    CHECK(betti_number(theta()) == 2);
    CHECK(betti_number(bowtie()) == 2);
    CHECK(betti_number(k4()) == 3);
    CHECK(betti_number(Graph{3, {}}) == 0);
    CHECK(betti_number(Graph{1, {{0, 0}, {0, 0}}}) == 2);  // two loops
}

TEST_CASE("fundamental_basis: triangle, theta, bowtie") {
    CycleBasis tri = fundamental_basis(triangle(), spanning_forest(triangle()));
    REQUIRE(tri.cycles.size() == 1);
    CHECK(tri.labels == std::vector<std::size_t>{2});
    CHECK(tri.cycles[0] == std::vector<int>{1, 1, 1});

    CycleBasis th = fundamental_basis(theta(), spanning_forest(theta()));
    REQUIRE(th.cycles.size() == 2);
    CHECK(th.cycles[0] == std::vector<int>{-1, 1, 0});  // e1 - e0
    CHECK(th.cycles[1] == std::vector<int>{-1, 0, 1});  // e2 - e0

    CycleBasis bow = fundamental_basis(bowtie(), spanning_forest(bowtie()));
    REQUIRE(bow.cycles.size() == 2);
    CHECK(bow.cycles[0] == std::vector<int>{1, 1, 1, 0, 0, 0});
    CHECK(bow.cycles[1] == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("fundamental basis properties on random multigraphs") {
    std::mt19937 rng(4001);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = testutil::random_graph(rng);
        SpanningForest f = spanning_forest(g);
        CycleBasis b = fundamental_basis(g, f);

        CHECK(b.cycles.size() == betti_number(g));
        std::set<std::size_t> forest(f.edge_indices.begin(), f.edge_indices.end());
        for (std::size_t j = 0; j < b.cycles.size(); ++j) {
            CHECK(is_circulation(g, b.cycles[j]));
            CHECK(b.cycles[j][b.labels[j]] == 1);  // the chord has coefficient +1
            for (std::size_t k = 0; k < b.cycles.size(); ++k) {
                // each chord lies in exactly its own cycle
                CHECK((b.cycles[k][b.labels[j]] != 0) == (k == j));
            }
        }

        // b1 two ways: edge count arithmetic vs rank of the cycle matrix
        if (!b.cycles.empty()) {
            RatMatrix m(b.cycles.size(), g.edge_count());
            for (std::size_t i = 0; i < b.cycles.size(); ++i) {
                for (std::size_t e = 0; e < g.edge_count(); ++e) m.at(i, e) = b.cycles[i][e];
            }
            CHECK(rank(m) == betti_number(g));
        }
    }
}

TEST_CASE("cocycle_table: theta rows, bridges, loops") {
    CycleBasis th = fundamental_basis(theta(), spanning_forest(theta()));
    CocycleTable t = cocycle_table(theta(), th);
    CHECK(t.rows[0] == std::vector<int>{-1, -1});
    CHECK(t.rows[1] == std::vector<int>{1, 0});
    CHECK(t.rows[2] == std::vector<int>{0, 1});

    Graph bridge_loop{2, {{0, 1}, {1, 1}}};  // a bridge and a loop
    CycleBasis b = fundamental_basis(bridge_loop, spanning_forest(bridge_loop));
    CocycleTable tb = cocycle_table(bridge_loop, b);
    CHECK(tb.rows[0] == std::vector<int>{0});  // bridge: zero functional
    CHECK(tb.rows[1] == std::vector<int>{1});  // loop: unit functional
}

TEST_CASE("build_cycle_arrangement: named graphs") {
    Arrangement th = build_cycle_arrangement(theta());
    CHECK(th.ambient_dim == 2);
    CHECK(th.size() == 3);
    CHECK(th == testutil::central({{1, 0}, {0, 1}, {1, 1}}, 2));

    Arrangement tri = build_cycle_arrangement(triangle());
    CHECK(tri.ambient_dim == 1);
    CHECK(tri.size() == 1);

    Arrangement bow = build_cycle_arrangement(bowtie());
    CHECK(bow == testutil::central({{1, 0}, {0, 1}}, 2));

    Arrangement k = build_cycle_arrangement(k4());
    CHECK(k.ambient_dim == 3);
    CHECK(k.size() == 6);
}

TEST_CASE("is_separated") {
    CHECK(is_separated(fundamental_basis(bowtie(), spanning_forest(bowtie()))));
    CHECK(!is_separated(fundamental_basis(theta(), spanning_forest(theta()))));
    CHECK(is_separated(fundamental_basis(triangle(), spanning_forest(triangle()))));
    CHECK(is_separated(CycleBasis{}));

    CycleBasis bad;
    bad.cycles.push_back({2, 0});
    CHECK(testutil::thrown_kind([&] { is_separated(bad); }) == ErrorKind::Input);
}

TEST_CASE("is_cactus") {
    CHECK(is_cactus(bowtie()));
    CHECK(!is_cactus(theta()));
    CHECK(!is_cactus(k4()));
    CHECK(is_cactus(Graph{4, {{0, 1}, {1, 2}, {2, 3}}}));   // a path
    CHECK(is_cactus(Graph{3, {}}));                          // no edges at all
    CHECK(is_cactus(Graph{1, {{0, 0}, {0, 0}, {0, 0}}}));    // loops are fine
    CHECK(is_cactus(Graph{2, {{0, 1}, {0, 1}}}));            // a parallel pair is a 2-cycle
    CHECK(!is_cactus(Graph{2, {{0, 1}, {0, 1}, {0, 1}}}));   // three parallels are not
    // triangle with a pendant bridge and a loop
    CHECK(is_cactus(Graph{4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 3}}}));
}

TEST_CASE("spanning forest counting matches enumeration") {
    CHECK(spanning_forest_count(triangle()) == 3);
    CHECK(spanning_forest_count(theta()) == 3);
    CHECK(spanning_forest_count(bowtie()) == 9);
    CHECK(spanning_forest_count(k4()) == 16);
    CHECK(spanning_forest_count(Graph{1, {{0, 0}}}) == 1);

    std::mt19937 rng(4002);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_graph(rng, 6, 9);
        Int count = spanning_forest_count(g);
        std::vector<SpanningForest> all = enumerate_spanning_forests(g, 100000);
        CHECK(count == Int(all.size()));
    }
}

TEST_CASE("cycle arrangement is independent of the spanning forest") {
    std::mt19937 rng(4003);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(rng, 6, 9);
        Arrangement reference = build_cycle_arrangement(g);
        IntPolynomial chi_ref = charpoly(reference);
        for (const SpanningForest& f : enumerate_spanning_forests(g, 500)) {
            CycleBasis basis = fundamental_basis(g, f);
            CocycleTable table = cocycle_table(g, basis);
            std::vector<Hyperplane> hs;
            for (const auto& row : table.rows) {
                bool nonzero = false;
                for (int c : row) nonzero = nonzero || c != 0;
                if (!nonzero) continue;
                std::vector<Rational> v(row.begin(), row.end());
                hs.push_back(Hyperplane::make(v));
            }
            Arrangement a = normalize(hs, basis.cycles.size()).arrangement;
            CHECK(a.size() == reference.size());
            CHECK(charpoly(a) == chi_ref);
        }
    }
}

TEST_CASE("graph torification report: bowtie") {
    GraphTorificationReport r = graph_torification_report(bowtie());
    CHECK(r.verdict);
    CHECK(r.torifiable);
    CHECK(r.cactus);
    CHECK(r.forest_check_exhaustive);
    CHECK(r.forest_count == 9);
    REQUIRE(r.separated_basis.has_value());
    CHECK(r.separated_basis->cycles.size() == 2);
    // the witness is the two triangles
    CHECK(r.separated_basis->cycles[0] == std::vector<int>{1, 1, 1, 0, 0, 0});
    CHECK(r.separated_basis->cycles[1] == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("graph torification report: theta") {
    GraphTorificationReport r = graph_torification_report(theta());
    CHECK(!r.verdict);
    CHECK(!r.cactus);
    CHECK(r.b1 == 2);
    CHECK(r.arrangement_size == 3);
    REQUIRE(r.shared_edge.has_value());
    CHECK(r.shared_edge->edge == 0);  // the forest edge lies on both fundamental cycles
    CHECK(r.shared_edge->cycle_labels == std::vector<std::size_t>{1, 2});
}

TEST_CASE("graph torification report: K4 fails by cardinality") {
    GraphTorificationReport r = graph_torification_report(k4());
    CHECK(!r.verdict);
    CHECK(r.b1 == 3);
    CHECK(r.arrangement_size == 6);
    CHECK(!r.size_equals_b1);
    CHECK(r.shared_edge.has_value());
}

TEST_CASE("graph torification report: forests are trivially torifiable") {
    GraphTorificationReport r = graph_torification_report(Graph{4, {{0, 1}, {2, 3}}});
    CHECK(r.verdict);
    CHECK(r.b1 == 0);
    CHECK(r.arrangement_size == 0);
    CHECK(r.separated_basis.has_value());
    CHECK(r.separated_basis->cycles.empty());
}

TEST_CASE("all equivalent conditions agree on random multigraphs") {
    std::mt19937 rng(4004);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = testutil::random_graph(rng);
        GraphTorificationReport r = graph_torification_report(g);  // throws on any mismatch
        CHECK(r.arrangement_size >= r.b1);
        CHECK(is_essential(r.arrangement));
        CHECK(r.verdict == r.cactus);
    }
}
