#include <doctest.h>

#include "domset/atlas.hpp"
#include "domset/oracle.hpp"

using namespace domset;

namespace {

HostGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return HostGraph::from_edges(n, std::move(edges));
}

HostGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return HostGraph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("subset oracle on hand instances") {
    SolveResult triangle = oracle_solve(complete_graph(3), parse_pattern("clique:3"));
    REQUIRE(triangle.found);
    CHECK(triangle.witness->vertices == VertexSet{0, 1, 2});
    CHECK(triangle.route == "oracle-fallback");

    // the first lexicographic dominating independent pair on a six-cycle
    SolveResult c6 = oracle_solve(cycle_graph(6), parse_pattern("independent:2"));
    REQUIRE(c6.found);
    CHECK(c6.witness->vertices == VertexSet{0, 3});

    // K4 has no independent pair at all
    CHECK_FALSE(oracle_solve(complete_graph(4), parse_pattern("independent:2")).found);

    HostGraph p5 = HostGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    SolveResult path = oracle_solve(p5, parse_pattern("independent:2"));
    REQUIRE(path.found);
    CHECK(path.witness->vertices == VertexSet{0, 3});
    CHECK_FALSE(oracle_solve(p5, parse_pattern("clique:2")).found);
}

TEST_CASE("set and non-induced oracle variants") {
    HostGraph c6 = cycle_graph(6);
    PatternSet ps;
    ps.members = {parse_pattern("clique:2"), parse_pattern("independent:2")};
    SolveResult set_res = oracle_solve_set(c6, ps);
    REQUIRE(set_res.found);
    CHECK(set_res.matched_member == 1);
    CHECK(set_res.witness->vertices == VertexSet{0, 3});

    // a dominating path:3 exists in K4 only non-induced (as part of the clique)
    SolveResult sub = oracle_solve_subgraph(complete_graph(4), parse_pattern("path:3"));
    REQUIRE(sub.found);
    CHECK_FALSE(oracle_solve(complete_graph(4), parse_pattern("path:3")).found);
}

TEST_CASE("rho oracle closed forms and tie-break") {
    CHECK(oracle_rho(parse_pattern("clique:3")).rho == -1);
    CHECK(oracle_rho(parse_pattern("clique:3")).maximizer.empty());

    RhoOracleResult star = oracle_rho(parse_pattern("star:4"));
    CHECK(star.rho == 2);
    CHECK(star.maximizer == VertexSet{1, 2, 3});

    CHECK(oracle_rho(parse_pattern("independent:1")).rho == -1);
    CHECK(oracle_rho(parse_pattern("cycle:5")).rho == -1);
    CHECK(oracle_rho(parse_pattern("matching:4")).rho == 0);

    for (const Pattern& p : all_patterns_up_to(6)) {
        RhoOracleResult o = oracle_rho(p);
        PatternDecomposition dec = compute_rho(p);
        REQUIRE(o.rho == dec.rho);
        REQUIRE(o.maximizer == dec.s);
    }
}

TEST_CASE("orthogonal-vectors oracle") {
    OVInstance inst;
    inst.k = 2;
    inst.d = 3;
    inst.sets = {{0b101, 0b110}, {0b011, 0b010}};
    OvOracleResult res = oracle_ov(inst);
    REQUIRE(res.found);
    CHECK(res.tuple == std::vector<int>{0, 1});  // 0b101 & 0b010 == 0
    CHECK((inst.sets[0][res.tuple[0]] & inst.sets[1][res.tuple[1]]) == 0);

    OVInstance none;
    none.k = 3;
    none.d = 4;
    none.sets = {{0b1111, 0b1111}, {0b1111}, {0b1111, 0b1111}};
    CHECK_FALSE(oracle_ov(none).found);

    OVInstance planted;
    planted.k = 3;
    planted.d = 2;
    planted.sets = {{0b01, 0b11}, {0b11, 0b10}, {0b10, 0b11}};
    OvOracleResult hit = oracle_ov(planted);
    REQUIRE(hit.found);
    uint64_t conj = planted.sets[0][hit.tuple[0]] & planted.sets[1][hit.tuple[1]] &
                    planted.sets[2][hit.tuple[2]];
    CHECK(conj == 0);
}

TEST_CASE("oracle budget caps throw") {
    HostGraph big = complete_graph(40);
    OracleBudgetGuard tight{10};
    CHECK_THROWS_AS(oracle_solve(big, parse_pattern("independent:5"), tight), ResourceLimitError);

    OVInstance inst;
    inst.k = 2;
    inst.d = 2;
    inst.sets = {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK_THROWS_AS(oracle_ov(inst, OracleBudgetGuard{4}), ResourceLimitError);
}
