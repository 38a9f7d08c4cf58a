#ifndef SGC_STRUCTURE_HPP
#define SGC_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Parts of a balanced graph: an edge is negative iff it joins X to Y.
struct BalancePartition {
    VertexSet x;
    VertexSet y;
};

/// A cycle given as its edge sequence; vertices[i] and vertices[i+1] (cyclically)
/// are the ends of edges[i].
struct SignedCycle {
    std::vector<EdgeId> edges;
    std::vector<Vertex> vertices;
};

struct BalanceResult {
    bool balanced = false;
    std::optional<BalancePartition> parts;  // set when balanced
    std::optional<SignedCycle> cycle;       // set when not balanced
};

/// Spanning-forest normalization. Roots (smallest vertex of each component)
/// go to X. Works on disconnected graphs.
BalanceResult is_balanced(const SignedGraph& g);

/// Balance of the negation; when true the parts have positive edges exactly
/// between X and Y.
BalanceResult is_antibalanced(const SignedGraph& g);

/// X with G2 = G/X, or nullopt when the two signings are not switching
/// equivalent. Throws std::invalid_argument unless both graphs have the same
/// endpoints at every edge id.
std::optional<VertexSet> switching_equivalence(const SignedGraph& g, const SignedGraph& g2);
bool is_switching_equivalent(const SignedGraph& g, const SignedGraph& g2);

struct Block {
    SignedGraph graph;
    std::vector<Vertex> vertices;  // local -> parent, ascending
    std::vector<EdgeId> edges;     // local -> parent, ascending
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    VertexSet cut_vertices;
    std::vector<std::vector<int>> blocks_at;  // vertex -> indices of blocks containing it

    /// Blocks holding at most one cut vertex.
    std::vector<int> end_blocks() const;
};

/// Biconnected decomposition of the underlying multigraph. Parallel edges
/// form one block; isolated vertices are single-vertex blocks. Blocks are
/// ordered by their smallest edge id (vertex id for isolated vertices).
BlockDecomposition blocks(const SignedGraph& g);

enum class BrickKind {
    balanced_complete,
    balanced_odd_cycle,
    unbalanced_even_cycle,
    doubled_complete,
    doubled_odd_cycle,
    not_a_brick,
};

struct BrickClass {
    BrickKind kind = BrickKind::not_a_brick;
    int order = 0;
    std::string reason;  // only for not_a_brick

    bool is_brick() const { return kind != BrickKind::not_a_brick; }
    /// Uniform degree of the brick.
    int degree() const;
    /// True for the classes whose bad lists are one symmetric set.
    bool symmetric_class() const;
    std::string name() const;
    friend bool operator==(const BrickClass&, const BrickClass&) = default;
};

/// Throws std::domain_error if the graph is not connected or has a cut vertex.
/// Balanced K_3 reports balanced_complete and 2K_3 doubled_complete.
BrickClass classify_brick(const SignedGraph& b);

struct BrickCheck {
    bool all_bricks = false;
    std::vector<BrickClass> classes;  // one per block, in block order
    BlockDecomposition decomposition;
};

/// Throws std::domain_error on disconnected input.
BrickCheck all_blocks_are_bricks(const SignedGraph& g);

/// Connected with a single block that is a brick.
bool is_brick(const SignedGraph& g);

}  // namespace sgc

#endif  // SGC_STRUCTURE_HPP
