#ifndef SGC_GRAPH_HPP
#define SGC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sgc {

using Vertex = int;
using EdgeId = int;

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::positive : Sign::negative; }

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Sign sign = Sign::positive;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool joins(Vertex a, Vertex b) const { return (u == a && v == b) || (u == b && v == a); }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Subset of the vertex set of a graph with `universe` vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : member_(static_cast<std::size_t>(universe), false) {}
    VertexSet(int universe, std::initializer_list<Vertex> members);
    static VertexSet from_members(int universe, std::span<const Vertex> members);

    int universe() const { return static_cast<int>(member_.size()); }
    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);
    int size() const;
    bool empty() const { return size() == 0; }
    std::vector<Vertex> members() const;

    VertexSet complement() const;
    /// X + Y, the symmetric difference.
    VertexSet operator+(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<bool> member_;
};

/// Loopless multigraph with a sign on every edge. Edge ids are positions in
/// insertion order and stay stable for the lifetime of the value.
class SignedGraph {
public:
    SignedGraph() = default;
    /// Throws std::invalid_argument on loops or out-of-range endpoints.
    SignedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;

    /// Ids of edges incident to v, ascending.
    std::span<const EdgeId> incident(Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const;
    int min_degree() const;
    int multiplicity(Vertex a, Vertex b) const;
    int max_multiplicity() const;
    std::vector<EdgeId> edges_between(Vertex a, Vertex b) const;
    /// Edges with exactly one end in X.
    std::vector<EdgeId> coboundary(const VertexSet& x) const;
    /// Number of edges joining v to a vertex of X.
    int degree_into(Vertex v, const VertexSet& x) const;
    /// Neighbors joined to v by at least one positive (resp. negative) edge.
    std::vector<Vertex> positive_neighbors(Vertex v) const;
    std::vector<Vertex> negative_neighbors(Vertex v) const;

    bool is_simple() const { return max_multiplicity() <= 1; }
    bool is_positive() const;
    bool is_connected() const;
    bool is_regular() const { return n_ == 0 || max_degree() == min_degree(); }
    /// Component index per vertex, numbered in order of first vertex.
    std::vector<int> components() const;
    int component_count() const;

    void check_vertex(Vertex v) const;
    void check_edge(EdgeId e) const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<EdgeId> incidence_;
};

/// A subgraph carried together with its embedding into the parent graph.
struct Subgraph {
    SignedGraph graph;
    std::vector<Vertex> vertices;  // local id -> parent id
    std::vector<EdgeId> edges;     // local id -> parent id
};

SignedGraph build_graph(int vertex_count, std::vector<Edge> edges);
int degree(const SignedGraph& g, Vertex v);

/// G/X: reverses the sign of every edge in the coboundary of X.
SignedGraph switch_at(const SignedGraph& g, const VertexSet& x);
SignedGraph negate(const SignedGraph& g);
/// 2H for a simple positive H: each edge becomes a positive and a negative
/// parallel pair (positive first).
SignedGraph double_graph(const SignedGraph& h);

struct VertexDeletion {
    SignedGraph graph;
    std::vector<Vertex> old_to_new;  // -1 for the deleted vertex
    std::vector<Vertex> new_to_old;
};
VertexDeletion delete_vertex(const SignedGraph& g, Vertex v);
SignedGraph delete_edge(const SignedGraph& g, EdgeId e);

/// G[X] with vertices in ascending parent order and edges in parent id order.
Subgraph induced_subgraph(const SignedGraph& g, const VertexSet& x);
/// Subgraph spanned by the given edges, on the vertices they touch.
Subgraph edge_subgraph(const SignedGraph& g, std::span<const EdgeId> edge_ids);
/// The simple positive graph on the same vertex set, one edge per adjacent pair.
SignedGraph simple_support(const SignedGraph& g);

Sign sign_product(const SignedGraph& g, std::span<const EdgeId> edge_ids);

}  // namespace sgc

#endif  // SGC_GRAPH_HPP
