#include "sgc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgc {

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_members(int universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return v >= 0 && v < universe() && member_[static_cast<std::size_t>(v)];
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= universe()) throw std::out_of_range("vertex " + std::to_string(v) + " outside vertex set universe");
    member_[static_cast<std::size_t>(v)] = true;
}

void VertexSet::erase(Vertex v) {
    if (v < 0 || v >= universe()) throw std::out_of_range("vertex " + std::to_string(v) + " outside vertex set universe");
    member_[static_cast<std::size_t>(v)] = false;
}

int VertexSet::size() const { return static_cast<int>(std::count(member_.begin(), member_.end(), true)); }

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (int v = 0; v < universe(); ++v)
        if (member_[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe());
    for (int v = 0; v < universe(); ++v) out.member_[static_cast<std::size_t>(v)] = !member_[static_cast<std::size_t>(v)];
    return out;
}

VertexSet VertexSet::operator+(const VertexSet& other) const {
    if (other.universe() != universe()) throw std::invalid_argument("vertex sets over different universes");
    VertexSet out(universe());
    for (std::size_t v = 0; v < member_.size(); ++v) out.member_[v] = member_[v] != other.member_[v];
    return out;
}

SignedGraph::SignedGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i) + " is a loop");
        if (e.sign != Sign::positive && e.sign != Sign::negative)
            throw std::invalid_argument("edge " + std::to_string(i) + " has an invalid sign");
        ++offsets_[static_cast<std::size_t>(e.u) + 1];
        ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    incidence_.resize(2 * edges_.size());
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incidence_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[i].u)]++)] = static_cast<EdgeId>(i);
        incidence_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[i].v)]++)] = static_cast<EdgeId>(i);
    }
}

void SignedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void SignedGraph::check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw std::out_of_range("edge " + std::to_string(e) + " out of range");
}

const Edge& SignedGraph::edge(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)];
}

std::span<const EdgeId> SignedGraph::incident(Vertex v) const {
    check_vertex(v);
    auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return {incidence_.data() + b, e - b};
}

int SignedGraph::degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

int SignedGraph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int SignedGraph::min_degree() const {
    if (n_ == 0) return 0;
    int best = degree(0);
    for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int SignedGraph::multiplicity(Vertex a, Vertex b) const {
    check_vertex(b);
    int m = 0;
    for (EdgeId e : incident(a))
        if (edges_[static_cast<std::size_t>(e)].joins(a, b)) ++m;
    return a == b ? 0 : m;
}

int SignedGraph::max_multiplicity() const {
    int best = 0;
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) {
        for (EdgeId e : incident(v)) {
            Vertex w = edges_[static_cast<std::size_t>(e)].other(v);
            if (w > v) best = std::max(best, ++count[static_cast<std::size_t>(w)]);
        }
        for (EdgeId e : incident(v)) count[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].other(v))] = 0;
    }
    return best;
}

std::vector<EdgeId> SignedGraph::edges_between(Vertex a, Vertex b) const {
    check_vertex(b);
    std::vector<EdgeId> out;
    for (EdgeId e : incident(a))
        if (edges_[static_cast<std::size_t>(e)].joins(a, b)) out.push_back(e);
    return out;
}

std::vector<EdgeId> SignedGraph::coboundary(const VertexSet& x) const {
    if (x.universe() != n_) throw std::invalid_argument("vertex set does not belong to this graph");
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (x.contains(edges_[i].u) != x.contains(edges_[i].v)) out.push_back(static_cast<EdgeId>(i));
    return out;
}

int SignedGraph::degree_into(Vertex v, const VertexSet& x) const {
    int d = 0;
    for (EdgeId e : incident(v))
        if (x.contains(edges_[static_cast<std::size_t>(e)].other(v))) ++d;
    return d;
}

namespace {

std::vector<Vertex> signed_neighbors(const SignedGraph& g, Vertex v, Sign s) {
    std::vector<Vertex> out;
    for (EdgeId e : g.incident(v)) {
        const Edge& edge = g.edge(e);
        if (edge.sign == s) out.push_back(edge.other(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Vertex> SignedGraph::positive_neighbors(Vertex v) const { return signed_neighbors(*this, v, Sign::positive); }
std::vector<Vertex> SignedGraph::negative_neighbors(Vertex v) const { return signed_neighbors(*this, v, Sign::negative); }

bool SignedGraph::is_positive() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign == Sign::positive; });
}

std::vector<int> SignedGraph::components() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<Vertex> stack;
    int next = 0;
    for (Vertex s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        comp[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (EdgeId e : incident(v)) {
                Vertex w = edges_[static_cast<std::size_t>(e)].other(v);
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int SignedGraph::component_count() const {
    auto comp = components();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool SignedGraph::is_connected() const { return component_count() <= 1; }

SignedGraph build_graph(int vertex_count, std::vector<Edge> edges) { return SignedGraph(vertex_count, std::move(edges)); }

int degree(const SignedGraph& g, Vertex v) { return g.degree(v); }

SignedGraph switch_at(const SignedGraph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count()) throw std::invalid_argument("vertex set does not belong to this graph");
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges)
        if (x.contains(e.u) != x.contains(e.v)) e.sign = -e.sign;
    return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph negate(const SignedGraph& g) {
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.sign = -e.sign;
    return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph double_graph(const SignedGraph& h) {
    if (!h.is_simple()) throw std::invalid_argument("doubling needs a simple graph");
    if (!h.is_positive()) throw std::invalid_argument("doubling needs an all-positive graph");
    std::vector<Edge> edges;
    edges.reserve(2 * h.edges().size());
    for (const Edge& e : h.edges()) {
        edges.push_back({e.u, e.v, Sign::positive});
        edges.push_back({e.u, e.v, Sign::negative});
    }
    return SignedGraph(h.vertex_count(), std::move(edges));
}

VertexDeletion delete_vertex(const SignedGraph& g, Vertex v) {
    g.check_vertex(v);
    VertexDeletion out;
    out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (w == v) continue;
        out.old_to_new[static_cast<std::size_t>(w)] = static_cast<Vertex>(out.new_to_old.size());
        out.new_to_old.push_back(w);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        edges.push_back({out.old_to_new[static_cast<std::size_t>(e.u)], out.old_to_new[static_cast<std::size_t>(e.v)], e.sign});
    }
    out.graph = SignedGraph(g.vertex_count() - 1, std::move(edges));
    return out;
}

SignedGraph delete_edge(const SignedGraph& g, EdgeId e) {
    g.check_edge(e);
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + e);
    return SignedGraph(g.vertex_count(), std::move(edges));
}

Subgraph induced_subgraph(const SignedGraph& g, const VertexSet& x) {
    if (x.universe() != g.vertex_count()) throw std::invalid_argument("vertex set does not belong to this graph");
    Subgraph out;
    std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex v : x.members()) {
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.vertices.size());
        out.vertices.push_back(v);
    }
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[static_cast<std::size_t>(i)];
        if (!x.contains(e.u) || !x.contains(e.v)) continue;
        edges.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.sign});
        out.edges.push_back(i);
    }
    out.graph = SignedGraph(static_cast<int>(out.vertices.size()), std::move(edges));
    return out;
}

Subgraph edge_subgraph(const SignedGraph& g, std::span<const EdgeId> edge_ids) {
    VertexSet touched(g.vertex_count());
    for (EdgeId e : edge_ids) {
        touched.insert(g.edge(e).u);
        touched.insert(g.edge(e).v);
    }
    Subgraph out;
    std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex v : touched.members()) {
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.vertices.size());
        out.vertices.push_back(v);
    }
    std::vector<EdgeId> sorted(edge_ids.begin(), edge_ids.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Edge> edges;
    for (EdgeId i : sorted) {
        const Edge& e = g.edge(i);
        edges.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.sign});
    }
    out.edges = std::move(sorted);
    out.graph = SignedGraph(static_cast<int>(out.vertices.size()), std::move(edges));
    return out;
}

SignedGraph simple_support(const SignedGraph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::vector<Vertex> nbrs;
        for (EdgeId e : g.incident(u)) {
            Vertex w = g.edge(e).other(u);
            if (w > u) nbrs.push_back(w);
        }
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        for (Vertex w : nbrs) edges.push_back({u, w, Sign::positive});
    }
    return SignedGraph(g.vertex_count(), std::move(edges));
}

Sign sign_product(const SignedGraph& g, std::span<const EdgeId> edge_ids) {
    Sign s = Sign::positive;
    for (EdgeId e : edge_ids) s = s * g.edge(e).sign;
    return s;
}

}  // namespace sgc
