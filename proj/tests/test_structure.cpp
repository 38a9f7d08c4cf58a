#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgc/enumeration.hpp"
#include "sgc/structure.hpp"

using namespace sgc;
using oracle::make;

namespace {

SignedGraph complete(int n, Sign s = Sign::positive) {
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.push_back({a, b, s});
    return SignedGraph(n, es);
}

SignedGraph cycle(int n, bool unbalanced) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, Sign::positive});
    if (unbalanced) es.back().sign = Sign::negative;
    return SignedGraph(n, es);
}

SignedGraph random_graph(std::mt19937& rng, int n, int m) {
    std::vector<Edge> es;
    while (static_cast<int>(es.size()) < m) {
        const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u != v) es.push_back({u, v, rng() % 2 ? Sign::positive : Sign::negative});
    }
    return SignedGraph(n, es);
}

void check_parts(const SignedGraph& g, const BalancePartition& p, Sign across) {
    CHECK((p.x + p.y).size() == g.vertex_count());
    CHECK(p.x.complement() == p.y);
    for (const Edge& e : g.edges()) CHECK((p.x.contains(e.u) != p.x.contains(e.v)) == (e.sign == across));
}

void check_cycle(const SignedGraph& g, const SignedCycle& c) {
    REQUIRE(c.edges.size() == c.vertices.size());
    REQUIRE(!c.edges.empty());
    std::set<Vertex> seen(c.vertices.begin(), c.vertices.end());
    CHECK(seen.size() == c.vertices.size());
    const std::size_t k = c.edges.size();
    for (std::size_t i = 0; i < k; ++i) CHECK(g.edge(c.edges[i]).joins(c.vertices[i], c.vertices[(i + 1) % k]));
    CHECK(sign_product(g, c.edges) == Sign::negative);
}

}  // namespace

TEST_SUITE("structure") {
TEST_CASE("is_balanced examples") {
    const BalanceResult k4 = is_balanced(complete(4));
    CHECK(k4.balanced);
    CHECK(k4.parts->x.size() == 4);
    CHECK(k4.parts->y.empty());

    const BalanceResult neg = is_balanced(make(2, {{0, 1, -1}}));
    CHECK(neg.balanced);
    CHECK(neg.parts->x == VertexSet(2, {0}));
    CHECK(neg.parts->y == VertexSet(2, {1}));

    const SignedGraph tri = make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
    const BalanceResult t = is_balanced(tri);
    CHECK_FALSE(t.balanced);
    REQUIRE(t.cycle);
    CHECK(t.cycle->edges.size() == 3);
    check_cycle(tri, *t.cycle);
}

TEST_CASE("is_antibalanced examples") {
    CHECK(is_antibalanced(complete(3, Sign::negative)).balanced);
    CHECK_FALSE(is_antibalanced(complete(3)).balanced);
    const BalanceResult c4 = is_antibalanced(cycle(4, false));
    CHECK(c4.balanced);
    CHECK(c4.parts->x == VertexSet(4, {0, 2}));
    CHECK(c4.parts->y == VertexSet(4, {1, 3}));
}

TEST_CASE("switching_equivalence examples") {
    const SignedGraph k2 = complete(2), nk2 = complete(2, Sign::negative);
    const auto x = switching_equivalence(k2, nk2);
    REQUIRE(x);
    CHECK(x->size() == 1);
    CHECK_FALSE(is_switching_equivalent(complete(3), make(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}})));
    CHECK_THROWS_AS(switching_equivalence(complete(3), cycle(4, false)), std::invalid_argument);
    CHECK_THROWS_AS(switching_equivalence(make(3, {{0, 1, 1}}), make(3, {{0, 2, 1}})), std::invalid_argument);
}

TEST_CASE("blocks examples") {
    const BlockDecomposition p = blocks(make(3, {{0, 1, 1}, {1, 2, 1}}));
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0].vertices == std::vector<Vertex>{0, 1});
    CHECK(p.blocks[1].vertices == std::vector<Vertex>{1, 2});
    CHECK(p.cut_vertices.members() == std::vector<Vertex>{1});
    CHECK(p.blocks_at[1] == std::vector<int>{0, 1});
    CHECK(p.end_blocks() == std::vector<int>{0, 1});

    const BlockDecomposition d = blocks(double_graph(complete(3)));
    CHECK(d.blocks.size() == 1);
    CHECK(d.cut_vertices.empty());

    const SignedGraph bowtie = make(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
    const BlockDecomposition b = blocks(bowtie);
    REQUIRE(b.blocks.size() == 2);
    CHECK(b.blocks[0].graph == make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
    CHECK(b.blocks[1].vertices == std::vector<Vertex>{2, 3, 4});
    CHECK(b.cut_vertices.members() == std::vector<Vertex>{2});

    const BlockDecomposition iso = blocks(make(3, {{0, 1, 1}}));
    CHECK(iso.blocks.size() == 2);
    CHECK(iso.blocks[1].vertices == std::vector<Vertex>{2});
}

TEST_CASE("classify_brick examples and tie-breaks") {
    CHECK(classify_brick(complete(4)) == BrickClass{BrickKind::balanced_complete, 4, ""});
    CHECK(classify_brick(cycle(4, true)) == BrickClass{BrickKind::unbalanced_even_cycle, 4, ""});
    CHECK_FALSE(classify_brick(cycle(4, false)).is_brick());
    CHECK(classify_brick(complete(3)).kind == BrickKind::balanced_complete);
    CHECK(classify_brick(complete(1)).kind == BrickKind::balanced_complete);
    CHECK(classify_brick(complete(2, Sign::negative)).kind == BrickKind::balanced_complete);
    CHECK(classify_brick(double_graph(complete(2))).kind == BrickKind::doubled_complete);
    CHECK(classify_brick(double_graph(complete(4))) == BrickClass{BrickKind::doubled_complete, 4, ""});
    CHECK(classify_brick(double_graph(cycle(5, false))) == BrickClass{BrickKind::doubled_odd_cycle, 5, ""});
    CHECK(classify_brick(cycle(5, false)) == BrickClass{BrickKind::balanced_odd_cycle, 5, ""});
    CHECK_FALSE(classify_brick(double_graph(cycle(4, false))).is_brick());
    CHECK_FALSE(classify_brick(cycle(5, true)).is_brick());
    CHECK_FALSE(classify_brick(make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 2, 1}})).is_brick());
    CHECK_FALSE(classify_brick(make(2, {{0, 1, 1}, {0, 1, 1}})).is_brick());
    CHECK(classify_brick(switch_at(complete(4), VertexSet(4, {0, 1}))).kind == BrickKind::balanced_complete);
    CHECK_THROWS_AS(classify_brick(make(3, {{0, 1, 1}, {1, 2, 1}})), std::domain_error);
    CHECK_THROWS_AS(classify_brick(make(2, {})), std::domain_error);
}

TEST_CASE("brick classes are regular of the stated degree") {
    const std::vector<std::pair<SignedGraph, int>> bricks{
        {complete(1), 0},       {complete(2), 1},          {complete(5), 4},
        {cycle(7, false), 2},   {cycle(6, true), 2},       {double_graph(complete(2)), 2},
        {double_graph(complete(5)), 8}, {double_graph(cycle(3, false)), 4}, {double_graph(cycle(7, false)), 4},
    };
    for (const auto& [g, r] : bricks) {
        const BrickClass c = classify_brick(g);
        CHECK(c.is_brick());
        CHECK(c.degree() == r);
        CHECK(g.is_regular());
        CHECK(g.max_degree() == r);
    }
}

TEST_CASE("all_blocks_are_bricks examples") {
    const BrickCheck p = all_blocks_are_bricks(make(3, {{0, 1, 1}, {1, 2, 1}}));
    CHECK(p.all_bricks);
    REQUIRE(p.classes.size() == 2);
    CHECK(p.classes[0] == BrickClass{BrickKind::balanced_complete, 2, ""});
    CHECK_FALSE(all_blocks_are_bricks(cycle(4, false)).all_bricks);
    const SignedGraph bowtie = make(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
    CHECK(all_blocks_are_bricks(bowtie).all_bricks);
    CHECK_FALSE(is_brick(bowtie));
    CHECK(is_brick(complete(3)));
    CHECK_THROWS_AS(all_blocks_are_bricks(make(3, {{0, 1, 1}})), std::domain_error);
}

TEST_CASE("balance agrees with the switching oracle and has valid witnesses") {
    std::mt19937 rng(23);
    for (int i = 0; i < 400; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const SignedGraph g = n == 1 ? SignedGraph(1, {}) : random_graph(rng, n, static_cast<int>(rng() % 10));
        const BalanceResult b = is_balanced(g), a = is_antibalanced(g);
        CHECK(b.balanced == oracle::balanced(g));
        CHECK(a.balanced == oracle::antibalanced(g));
        CHECK(a.balanced == is_balanced(negate(g)).balanced);
        if (b.balanced) {
            check_parts(g, *b.parts, Sign::negative);
            CHECK(b.parts->x.contains(0));
        } else {
            check_cycle(g, *b.cycle);
        }
        if (a.balanced) check_parts(g, *a.parts, Sign::positive);
        VertexSet x(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 2) x.insert(v);
        const SignedGraph h = switch_at(g, x);
        CHECK(is_balanced(h).balanced == b.balanced);
        const auto eq = switching_equivalence(g, h);
        REQUIRE(eq);
        CHECK(switch_at(g, *eq) == h);
        std::vector<Edge> flipped = g.edges();
        if (!flipped.empty()) {
            Edge& e = flipped[rng() % flipped.size()];
            e.sign = -e.sign;
            const SignedGraph f(n, flipped);
            CHECK(is_switching_equivalent(g, f) == oracle::switching_equivalent(g, f));
        }
    }
}

TEST_CASE("blocks agree with the separation oracle") {
    std::mt19937 rng(29);
    for (int i = 0; i < 300; ++i) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const SignedGraph g = random_graph(rng, n, static_cast<int>(rng() % 10));
        const BlockDecomposition d = blocks(g);
        CHECK(d.cut_vertices.members() == oracle::cut_vertices(g));
        std::set<std::set<int>> mine, theirs;
        for (const Block& b : d.blocks)
            if (!b.edges.empty()) mine.insert(std::set<int>(b.edges.begin(), b.edges.end()));
        for (const auto& s : oracle::edge_blocks(g)) theirs.insert(s);
        CHECK(mine == theirs);
        for (int v = 0; v < n; ++v) CHECK((d.blocks_at[static_cast<std::size_t>(v)].size() >= 2) == d.cut_vertices.contains(v));
        for (std::size_t a = 0; a < d.blocks.size(); ++a)
            for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
                std::vector<Vertex> common;
                std::set_intersection(d.blocks[a].vertices.begin(), d.blocks[a].vertices.end(),
                                      d.blocks[b].vertices.begin(), d.blocks[b].vertices.end(),
                                      std::back_inserter(common));
                CHECK(common.size() <= 1);
            }
        if (g.is_connected()) {
            int sum = 0;
            for (const Block& b : d.blocks) sum += static_cast<int>(b.vertices.size()) - 1;
            CHECK(sum == n - 1);
            if (!d.cut_vertices.empty()) CHECK(d.end_blocks().size() >= 2);
        }
    }
}

TEST_CASE("brick classification is switching invariant and matches degrees") {
    EnumSpec spec;
    spec.max_vertices = 5;
    int bricks = 0;
    enumerate(spec, [&](const SignedGraph& g) {
        if (!oracle::cut_vertices(g).empty()) return true;
        const BrickClass c = classify_brick(g);
        VertexSet x(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); v += 2) x.insert(v);
        CHECK(classify_brick(switch_at(g, x)) == c);
        if (c.is_brick()) {
            ++bricks;
            CHECK(g.is_regular());
            CHECK(g.max_degree() == c.degree());
        }
        return true;
    });
    // balanced K_1..K_5 and C_5, unbalanced C_4, 2K_2..2K_5, 2C_5
    CHECK(bricks == 12);
}
}
