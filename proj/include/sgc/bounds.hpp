#ifndef SGC_BOUNDS_HPP
#define SGC_BOUNDS_HPP

#include <optional>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/list_coloring.hpp"
#include "sgc/rational.hpp"

namespace sgc {

/// Membership in the Gallai class T_k, condition by condition.
struct GallaiMembership {
    bool connected = false;
    bool simple = false;           // mu(T) <= 1
    bool degree_bounded = false;   // Delta(T) <= k - 1
    bool blocks_are_bricks = false;
    bool not_balanced_kk = false;  // T is not a balanced complete graph of order k

    bool member() const { return connected && simple && degree_bounded && blocks_are_bricks && not_balanced_kk; }
};

/// Throws std::invalid_argument for k < 4.
GallaiMembership gallai_class_member(const SignedGraph& t, int k);

/// r = k - 2 + 2/(k - 1).
Rational gallai_ratio(int k);
/// m(T) = r |V(T)| - 2 |E(T)|.
Rational gallai_deficiency(const SignedGraph& t, int k);

struct EdgeBound {
    bool holds = false;
    std::int64_t lhs = 0;  // 2 |E|
    Rational rhs;          // (k - 1 + (k - 3)/(k^2 - 3)) |V|
};

/// Exact comparison 2|E| >= (k - 1 + (k - 3)/(k^2 - 3)) |V|. It does not
/// certify that G is k-list-critical; callers pass a k-critical graph (which is
/// k-list-critical) that is simple and not a balanced K_k.
EdgeBound edge_bound_check(const SignedGraph& g, int k);

struct LowVertexSplit {
    VertexSet high;  // H = {v : d(v) > |L(v)|}
    VertexSet low;   // F = V \ H
    Subgraph low_subgraph;  // G[F]
};

LowVertexSplit low_vertex_subgraph(const SignedGraph& g, const ListAssignment& l);

struct LowComponentReport {
    std::vector<Vertex> vertices;  // one component X of G[F], parent ids
    bool degrees_match = false;    // d_G(v) == |L(v)| on X
    bool blocks_are_bricks = false;
};

struct ListCriticalReport {
    LowVertexSplit split;
    std::vector<LowComponentReport> components;
    /// Set when every list has the same size k - 1.
    std::optional<int> k;
    bool high_nonempty_or_brick = true;
    bool clique_forces_balanced_kk = true;  // a K_k inside G[F] only if G is a balanced K_k

    bool all() const;
};

/// Throws std::domain_error when G is not L-critical.
ListCriticalReport check_list_critical_structure(const SignedGraph& g, const ListAssignment& l);

/// Vertices are the edge ids of G; distinct edges sharing an end are joined by
/// one edge whose sign is the product of theirs.
SignedGraph signed_line_graph(const SignedGraph& g);

}  // namespace sgc

#endif  // SGC_BOUNDS_HPP
