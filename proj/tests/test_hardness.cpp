#include <doctest.h>

#include <random>

#include "domset/hardness.hpp"
#include "domset/oracle.hpp"

using namespace domset;

TEST_CASE("group sizes follow the decomposition roles") {
    SUBCASE("star: two leaf groups of n, one center group of m/n") {
        ReductionLayout layout = plan_reduction(parse_pattern("star:3"), 16, 64);
        CHECK(layout.group_sizes == std::vector<int>{4, 16, 16});
        // the center group hosts floor(64/16) = 4
    }
    SUBCASE("clique: one m/n group plus sqrt(m) groups") {
        ReductionLayout layout = plan_reduction(parse_pattern("clique:3"), 4, 16);
        CHECK(layout.group_sizes == std::vector<int>{4, 4, 4});
        ReductionLayout skew = plan_reduction(parse_pattern("clique:3"), 8, 32);
        CHECK(skew.group_sizes == std::vector<int>{4, 5, 5});
    }
    SUBCASE("perfect matching: every group is sqrt-sized or n-sized") {
        ReductionLayout layout = plan_reduction(parse_pattern("matching:4"), 9, 81);
        CHECK(layout.group_sizes == std::vector<int>{9, 9, 9, 9});
    }
    SUBCASE("degenerate parameters are rejected") {
        CHECK_THROWS_AS(plan_reduction(parse_pattern("clique:3"), 100, 3), std::invalid_argument);
    }
}

TEST_CASE("anchors keep every group non-optional") {
    ReductionLayout layout = plan_reduction(parse_pattern("clique:3"), 8, 32);
    for (size_t i = 0; i < layout.group_sizes.size(); ++i)
        CHECK(layout.r_sizes[i] >= 2);
}

TEST_CASE("reduction on a hand-checkable two-family instance") {
    ReductionLayout layout = plan_reduction(parse_pattern("clique:2"), 4, 16);
    REQUIRE(layout.group_sizes.size() == 2);

    SUBCASE("a planted orthogonal pair makes the instance solvable") {
        OVInstance inst = make_ov_instance(layout, 6, VectorMode::PlantedOrthogonal, 5);
        REQUIRE(oracle_ov(inst).found);
        ReductionOutput out = reduce(inst, layout);
        SolveResult sr = oracle_solve(out.graph, layout.pattern);
        CHECK(sr.found);
    }
    SUBCASE("all-ones vectors make it unsolvable") {
        OVInstance inst = make_ov_instance(layout, 6, VectorMode::None, 5);
        REQUIRE_FALSE(oracle_ov(inst).found);
        ReductionOutput out = reduce(inst, layout);
        CHECK_FALSE(oracle_solve(out.graph, layout.pattern).found);
    }
}

TEST_CASE("independent patterns get internal cliques per group") {
    ReductionLayout layout = plan_reduction(parse_pattern("independent:2"), 4, 16);
    OVInstance inst = make_ov_instance(layout, 4, VectorMode::Random, 11);
    ReductionOutput out = reduce(inst, layout);
    // every V_i block is internally complete
    for (const BlockRange& b : out.blocks) {
        if (b.name.rfind("V", 0) != 0) continue;
        for (int u = b.begin; u < b.end; ++u)
            for (int v = u + 1; v < b.end; ++v) REQUIRE(out.graph.has_edge(u, v));
    }
}

TEST_CASE("audited size bounds hold across modes and patterns") {
    std::mt19937_64 rng(3);
    for (const char* spec : {"clique:2", "star:3", "independent:3", "matching:4"}) {
        Pattern p = parse_pattern(spec);
        ReductionLayout layout = plan_reduction(p, 9, 81);
        for (VectorMode mode :
             {VectorMode::Random, VectorMode::PlantedOrthogonal, VectorMode::None}) {
            OVInstance inst = make_ov_instance(layout, 6, mode, rng());
            ReductionOutput out = reduce(inst, layout);
            AuditReport report = audit_sizes(out.graph, layout, 6);
            INFO(spec << " " << report.detail);
            CHECK(report.ok);
        }
    }
}

TEST_CASE("reduction equivalence on random instances") {
    std::mt19937_64 rng(77);
    for (const char* spec : {"clique:2", "independent:2", "star:3"}) {
        Pattern p = parse_pattern(spec);
        ReductionLayout layout = plan_reduction(p, 4, 16);
        for (int trial = 0; trial < 10; ++trial) {
            OVInstance inst = make_ov_instance(layout, 5, VectorMode::Random, rng());
            ReductionOutput out = reduce(inst, layout);
            bool via_vectors = oracle_ov(inst).found;
            bool via_graph = oracle_solve(out.graph, layout.pattern).found;
            REQUIRE(via_vectors == via_graph);
        }
    }
}

TEST_CASE("block ranges tile the generated graph") {
    ReductionLayout layout = plan_reduction(parse_pattern("star:3"), 9, 81);
    OVInstance inst = make_ov_instance(layout, 6, VectorMode::Random, 1);
    ReductionOutput out = reduce(inst, layout);
    std::vector<char> seen(out.graph.n, 0);
    for (const BlockRange& b : out.blocks) {
        CHECK(b.begin < b.end);
        for (int v = b.begin; v < b.end; ++v) {
            REQUIRE_FALSE(seen[v]);
            seen[v] = 1;
        }
    }
    for (int v = 0; v < out.graph.n; ++v) REQUIRE(seen[v]);
    CHECK(blocks_to_json(out).find("\"X\"") != std::string::npos);
}
