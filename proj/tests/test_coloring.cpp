#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sgc/coloring.hpp"
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

bool in_palette(const SignedColoring& phi, int k) {
    const ColorSet z = ColorSet::z(k);
    return std::all_of(phi.begin(), phi.end(), [&](int c) { return z.contains(c); });
}

}  // namespace

TEST_SUITE("coloring") {
TEST_CASE("palettes") {
    CHECK(ColorSet::z(0).empty());
    CHECK(ColorSet::z(1) == ColorSet{0});
    CHECK(ColorSet::z(4) == ColorSet{-2, -1, 1, 2});
    CHECK(ColorSet::z(5) == ColorSet{-2, -1, 0, 1, 2});
    for (int k = 0; k < 12; ++k) {
        CHECK(ColorSet::z(k).size() == k);
        CHECK(ColorSet::z(k).is_symmetric());
        CHECK(ColorSet(oracle::z(k)) == ColorSet::z(k));
    }
    CHECK_FALSE(ColorSet({1, 2}).is_symmetric());
    CHECK(ColorSet({2, 1, 2}).colors() == std::vector<int>{1, 2});
    CHECK(ColorSet({1, -3}).negated() == ColorSet{-1, 3});
    CHECK(ColorSet({1, 2}).str() == "{1, 2}");
    CHECK(ColorSet::range(3, 2) == ColorSet{3, 4});
}

TEST_CASE("is_valid_coloring examples") {
    CHECK(is_valid_coloring(complete(2), {1, 2}));
    CHECK_FALSE(is_valid_coloring(complete(2, Sign::negative), {1, -1}));
    CHECK_FALSE(is_valid_coloring(double_graph(complete(2)), {1, -1}));
    CHECK(is_valid_coloring(double_graph(complete(2)), {1, 2}));
    CHECK(is_valid_coloring(complete(2, Sign::negative), {0, 1}));
    CHECK_FALSE(is_valid_coloring(complete(2, Sign::negative), {0, 0}));
    CHECK_THROWS_AS(is_valid_coloring(complete(3), {0, 1}), std::invalid_argument);
}

TEST_CASE("solve_with_colorset examples") {
    const auto t3 = solve_with_colorset(complete(3), ColorSet::z(3));
    REQUIRE(t3);
    CHECK(is_valid_coloring(complete(3), *t3));
    CHECK(in_palette(*t3, 3));
    CHECK_FALSE(solve_with_colorset(complete(3), ColorSet::z(2)));
    CHECK_FALSE(solve_with_colorset(cycle(4, true), ColorSet::z(2)));
    const auto pos = solve_with_colorset(complete(3), ColorSet{5, 7, 9});
    REQUIRE(pos);
    CHECK(ColorSet(*pos) == ColorSet{5, 7, 9});
    CHECK_FALSE(solve_with_colorset(make(2, {{0, 1, -1}}), ColorSet{0}));
    CHECK(solve_with_colorset(make(2, {{0, 1, -1}}), ColorSet{3}));
}

TEST_CASE("signed_chromatic_number examples") {
    CHECK(signed_chromatic_number(complete(4)) == 4);
    CHECK(signed_chromatic_number(double_graph(complete(3))) == 5);
    CHECK(signed_chromatic_number(complete(3, Sign::negative)) == 2);
    CHECK(signed_chromatic_number(SignedGraph(0, {})) == 0);
    CHECK(signed_chromatic_number(SignedGraph(3, {})) == 1);
    const ChromaticResult r = signed_chromatic(cycle(4, true));
    CHECK(r.k == 3);
    CHECK(is_valid_coloring(cycle(4, true), r.coloring));
    CHECK(in_palette(r.coloring, 3));
}

TEST_CASE("coloring_number examples") {
    CHECK(coloring_number(cycle(4, false)).col == 3);
    CHECK(coloring_number(complete(1)).col == 1);
    CHECK(coloring_number(double_graph(complete(3))).col == 5);
    CHECK(coloring_number(SignedGraph(0, {})).col == 0);
}

TEST_CASE("greedy_coloring examples") {
    const SignedColoring t = greedy_coloring(complete(3), {0, 1, 2});
    CHECK(t == SignedColoring{0, 1, -1});
    CHECK(greedy_coloring(SignedGraph(4, {}), {0, 1, 2, 3}) == SignedColoring{0, 0, 0, 0});
    CHECK(greedy_coloring(make(2, {{0, 1, -1}}), {0, 1}) == SignedColoring{0, 1});
    CHECK(greedy_coloring(make(2, {{0, 1, -1}}), {0, 1}, 2) == SignedColoring{1, 1});
    CHECK_THROWS_AS(greedy_coloring(complete(3), {0, 1, 2}, 2), std::domain_error);
}

TEST_CASE("is_k_critical examples") {
    CHECK(is_k_critical(complete(4), 4));
    CHECK(is_k_critical(cycle(4, true), 3));
    CHECK_FALSE(is_k_critical(cycle(4, false), 3));
    CHECK(is_k_critical(cycle(5, false), 3));
    CHECK_FALSE(is_k_critical(complete(4), 3));
    CHECK(is_k_critical(double_graph(complete(2)), 3));
    CHECK(is_k_critical(complete(1), 1));
}

TEST_CASE("exact solvers agree with brute force on every graph up to 4 vertices") {
    EnumSpec spec;
    spec.max_vertices = 4;
    spec.modulo = Equivalence::isomorphism;
    std::uint64_t n = enumerate(spec, [](const SignedGraph& g) {
        const ChromaticResult r = signed_chromatic(g);
        CHECK(r.k == oracle::chromatic(g));
        CHECK(is_valid_coloring(g, r.coloring));
        CHECK(in_palette(r.coloring, r.k));
        CHECK(coloring_number(g).col == oracle::coloring_number(g));
        CHECK(underlying_chromatic_number(g) == oracle::underlying_chromatic(g));
        for (int k = 1; k <= 5; ++k) CHECK(is_k_critical(g, k) == oracle::critical(g, k));
        return true;
    });
    CHECK(n > 0);
}

TEST_CASE("chromatic number matches brute force on 5-vertex classes") {
    EnumSpec spec;
    spec.min_vertices = spec.max_vertices = 5;
    enumerate(spec, [](const SignedGraph& g) {
        CHECK(signed_chromatic_number(g) == oracle::chromatic(g));
        return true;
    });
}

TEST_CASE("generic search agrees with the small-palette path on larger palettes") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Edge> es;
        const int m = static_cast<int>(rng() % 10);
        while (static_cast<int>(es.size()) < m) {
            const int u = static_cast<int>(rng() % static_cast<unsigned>(n)), v = static_cast<int>(rng() % static_cast<unsigned>(n));
            if (u != v) es.push_back({u, v, rng() % 2 ? Sign::positive : Sign::negative});
        }
        const SignedGraph g(n, es);
        ColorSet shifted;
        const int k = signed_chromatic_number(g);
        // a non-symmetric set with the same pattern as Z_k under c -> c + 100
        for (int c : oracle::z(k)) shifted = shifted.united(ColorSet{c + 100});
        const auto phi = solve_with_colorset(g, shifted);
        CHECK(phi.has_value() == oracle::colorable(g, oracle::Lists(static_cast<std::size_t>(n), shifted.colors())));
        if (phi) CHECK(is_valid_coloring(g, *phi));
    }
}

TEST_CASE("switching maps colorings to colorings") {
    std::mt19937 rng(37);
    EnumSpec spec;
    spec.max_vertices = 5;
    enumerate(spec, [&](const SignedGraph& g) {
        VertexSet x(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2) x.insert(v);
        const SignedGraph h = switch_at(g, x);
        const ChromaticResult r = signed_chromatic(g);
        SignedColoring phi = r.coloring;
        for (Vertex v : x.members()) phi[static_cast<std::size_t>(v)] = -phi[static_cast<std::size_t>(v)];
        CHECK(is_valid_coloring(h, phi));
        CHECK(signed_chromatic_number(h) == r.k);
        return true;
    });
}

TEST_CASE("chain, antibalance and Brooks bounds on all classes up to 5 vertices") {
    EnumSpec spec;
    spec.max_vertices = 5;
    enumerate(spec, [](const SignedGraph& g) {
        const int chi = signed_chromatic_number(g);
        const ColoringNumber col = coloring_number(g);
        CHECK(chi <= col.col);
        CHECK(col.col <= g.max_degree() + 1);
        CHECK(chi <= 2 * underlying_chromatic_number(g) - 1);
        CHECK((chi <= 2) == is_antibalanced(g).balanced);
        if (!is_brick(g)) CHECK(chi <= std::max(g.max_degree(), 1));
        const SignedColoring greedy = greedy_coloring(g, col.ordering, col.col);
        CHECK(is_valid_coloring(g, greedy));
        CHECK(in_palette(greedy, col.col));
        return true;
    });
}

TEST_CASE("doubling and bricks") {
    for (int n = 2; n <= 5; ++n) CHECK(signed_chromatic_number(double_graph(complete(n))) == 2 * n - 1);
    CHECK(signed_chromatic_number(double_graph(cycle(5, false))) == 5);
    CHECK(signed_chromatic_number(double_graph(cycle(4, false))) == 3);
    for (const SignedGraph& b : {complete(5), cycle(7, false), cycle(6, true), double_graph(complete(3)),
                                 double_graph(cycle(5, false))}) {
        const int r = b.max_degree();
        CHECK(signed_chromatic_number(b) == r + 1);
        CHECK(is_k_critical(b, r + 1));
    }
}
}
