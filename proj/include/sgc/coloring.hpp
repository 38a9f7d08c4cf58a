#ifndef SGC_COLORING_HPP
#define SGC_COLORING_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Finite set of integer colors, kept sorted and duplicate-free.
class ColorSet {
public:
    ColorSet() = default;
    ColorSet(std::initializer_list<int> colors);
    explicit ColorSet(std::vector<int> colors);

    /// Z_k: {±1, ..., ±h} for k = 2h, plus 0 when k = 2h + 1.
    static ColorSet z(int k);
    /// {first, first + 1, ..., first + count - 1}.
    static ColorSet range(int first, int count);

    const std::vector<int>& colors() const { return colors_; }
    int size() const { return static_cast<int>(colors_.size()); }
    bool empty() const { return colors_.empty(); }
    bool contains(int c) const;
    ColorSet negated() const;
    bool is_symmetric() const { return *this == negated(); }
    ColorSet united(const ColorSet& other) const;
    ColorSet intersected(const ColorSet& other) const;
    ColorSet without(int c) const;
    /// "{-1, 1, 2}"
    std::string str() const;

    auto begin() const { return colors_.begin(); }
    auto end() const { return colors_.end(); }
    friend bool operator==(const ColorSet&, const ColorSet&) = default;
    friend auto operator<=>(const ColorSet&, const ColorSet&) = default;

private:
    std::vector<int> colors_;
};

/// phi: vertex id -> color.
using SignedColoring = std::vector<int>;

/// phi(v) != sigma(e) phi(w) on every edge. Throws std::invalid_argument when
/// phi does not cover every vertex.
bool is_valid_coloring(const SignedGraph& g, const SignedColoring& phi);

/// Exhaustive search for a coloring with image inside C. When C is symmetric
/// the search is run modulo the sign-respecting relabelings of C.
std::optional<SignedColoring> solve_with_colorset(const SignedGraph& g, const ColorSet& c);

struct ChromaticResult {
    int k = 0;
    SignedColoring coloring;  // image inside Z_k
};

/// Least k admitting a coloring into Z_k, with a witness. The empty graph has
/// k = 0 and an edgeless nonempty graph k = 1.
ChromaticResult signed_chromatic(const SignedGraph& g);
int signed_chromatic_number(const SignedGraph& g);

struct ColoringNumber {
    int col = 0;
    std::vector<Vertex> elimination;  // minimum-degree removal order
    std::vector<Vertex> ordering;     // reverse of elimination; greedy colors in this order
};

/// Degeneracy + 1 (0 for the empty graph).
ColoringNumber coloring_number(const SignedGraph& g);

/// First admissible color in the order 0, 1, -1, 2, -2, ... for each vertex in
/// turn. With k > 0 only colors of Z_k are tried and std::domain_error is
/// thrown when a vertex has none left; a coloring_number ordering never runs
/// out with k = col.
SignedColoring greedy_coloring(const SignedGraph& g, const std::vector<Vertex>& ordering, int k = 0);

/// chi(G) = k and every proper subgraph is (k-1)-colorable. Deleting one edge
/// or one vertex covers every proper subgraph by monotonicity.
bool is_k_critical(const SignedGraph& g, int k);

/// Ordinary chromatic number of the simple support.
int underlying_chromatic_number(const SignedGraph& g);

}  // namespace sgc

#endif  // SGC_COLORING_HPP
