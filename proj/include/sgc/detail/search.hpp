#ifndef SGC_DETAIL_SEARCH_HPP
#define SGC_DETAIL_SEARCH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc::detail {

/// Symmetry of the palette that the search may quotient out. Only valid when
/// every vertex starts with the same list.
enum class PaletteSymmetry {
    none,
    /// The list is symmetric; the pairs {c, -c} may be permuted and flipped.
    signed_pairs,
    /// Every color may be permuted freely (ordinary coloring of a positive graph).
    interchangeable,
};

/// Backtracking with forward checking over bit-set domains. Vertices are
/// colored in the reverse of a minimum-degree elimination order. Returns an
/// assignment with lists[v] containing result[v], or nullopt after an
/// exhaustive search.
std::optional<std::vector<int>> find_coloring(const SignedGraph& g, std::span<const std::vector<int>> lists,
                                              PaletteSymmetry symmetry = PaletteSymmetry::none);

/// Repeated Z_k queries on one small graph (at most 16 vertices, k at most
/// 63) without per-query allocation. Color bit 0 is 0; bits 2j-1 and 2j are
/// +j and -j, so Z_k is a run of low bits and the signed-pair symmetry is a
/// prefix mask.
class SmallPaletteSolver {
public:
    static constexpr int kMaxVertices = 16;
    static constexpr int kMaxColors = 63;

    static bool fits(const SignedGraph& g) {
        return g.vertex_count() <= kMaxVertices && g.max_degree() + 1 <= kMaxColors;
    }

    /// Throws std::length_error unless fits(g).
    explicit SmallPaletteSolver(const SignedGraph& g);

    /// Whether G has a coloring into Z_k; fills `coloring` when it does.
    bool solve(int k, std::vector<int>* coloring = nullptr);

private:
    struct Arc {
        std::int8_t to;
        bool same;
        bool negated;
    };

    bool dfs(int depth, int used);

    int n_ = 0;
    std::array<std::array<Arc, kMaxVertices>, kMaxVertices> arcs_{};
    std::array<int, kMaxVertices> arc_count_{};
    std::array<int, kMaxVertices> order_{};
    std::array<int, kMaxVertices> position_{};
    std::array<std::array<std::uint64_t, kMaxVertices>, kMaxVertices + 1> domains_{};
    std::array<int, kMaxVertices> chosen_{};
};

/// Minimum-degree elimination order; ties go to the smallest id.
std::vector<Vertex> elimination_order(const SignedGraph& g, int* degeneracy = nullptr);

}  // namespace sgc::detail

#endif  // SGC_DETAIL_SEARCH_HPP
