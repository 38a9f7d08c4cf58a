#include "sgc/bounds.hpp"

#include <algorithm>

#include "sgc/structure.hpp"

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_k(int k) {
    if (k < 4) throw std::invalid_argument("k must be at least 4, got " + std::to_string(k));
}

bool is_balanced_complete(const SignedGraph& g, int order) {
    if (g.vertex_count() != order || !g.is_simple()) return false;
    if (g.edge_count() != order * (order - 1) / 2) return false;
    return is_balanced(g).balanced;
}

// Extends `clique` by vertices of `cand` (ascending) until it has `want` members.
bool grow_clique(const std::vector<std::vector<bool>>& adj, std::vector<Vertex>& clique, std::vector<Vertex> cand,
                 int want) {
    if (static_cast<int>(clique.size()) == want) return true;
    if (static_cast<int>(clique.size() + cand.size()) < want) return false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const Vertex v = cand[i];
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (adj[idx(v)][idx(cand[j])]) next.push_back(cand[j]);
        clique.push_back(v);
        if (grow_clique(adj, clique, std::move(next), want)) return true;
        clique.pop_back();
    }
    return false;
}

bool has_clique(const SignedGraph& g, int order) {
    if (order <= 0) return true;
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(idx(n), std::vector<bool>(idx(n), false));
    for (const Edge& e : g.edges()) adj[idx(e.u)][idx(e.v)] = adj[idx(e.v)][idx(e.u)] = true;
    std::vector<Vertex> all(idx(n)), clique;
    for (Vertex v = 0; v < n; ++v) all[idx(v)] = v;
    return grow_clique(adj, clique, all, order);
}

}  // namespace

GallaiMembership gallai_class_member(const SignedGraph& t, int k) {
    check_k(k);
    GallaiMembership m;
    m.connected = t.vertex_count() > 0 && t.is_connected();
    m.simple = t.is_simple();
    m.degree_bounded = t.vertex_count() == 0 || t.max_degree() <= k - 1;
    m.blocks_are_bricks = m.connected && all_blocks_are_bricks(t).all_bricks;
    m.not_balanced_kk = !is_balanced_complete(t, k);
    return m;
}

Rational gallai_ratio(int k) {
    check_k(k);
    return Rational(k - 2) + Rational(2, k - 1);
}

Rational gallai_deficiency(const SignedGraph& t, int k) {
    return gallai_ratio(k) * Rational(t.vertex_count()) - Rational(2 * static_cast<std::int64_t>(t.edge_count()));
}

EdgeBound edge_bound_check(const SignedGraph& g, int k) {
    check_k(k);
    const std::int64_t kk = k;
    EdgeBound b;
    b.lhs = 2 * static_cast<std::int64_t>(g.edge_count());
    b.rhs = (Rational(kk - 1) + Rational(kk - 3, kk * kk - 3)) * Rational(g.vertex_count());
    b.holds = Rational(b.lhs) >= b.rhs;
    return b;
}

LowVertexSplit low_vertex_subgraph(const SignedGraph& g, const ListAssignment& l) {
    if (static_cast<int>(l.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment does not cover every vertex");
    LowVertexSplit s{VertexSet(g.vertex_count()), VertexSet(g.vertex_count()), {}};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > l[idx(v)].size()) s.high.insert(v);
        else s.low.insert(v);
    }
    s.low_subgraph = induced_subgraph(g, s.low);
    return s;
}

bool ListCriticalReport::all() const {
    for (const LowComponentReport& c : components)
        if (!c.degrees_match || !c.blocks_are_bricks) return false;
    return high_nonempty_or_brick && clique_forces_balanced_kk;
}

ListCriticalReport check_list_critical_structure(const SignedGraph& g, const ListAssignment& l) {
    if (!is_list_critical(g, l)) throw std::domain_error("graph is not L-critical");
    ListCriticalReport r;
    r.split = low_vertex_subgraph(g, l);
    const Subgraph& gf = r.split.low_subgraph;

    const std::vector<int> comp = gf.graph.components();
    const int ncomp = gf.graph.component_count();
    for (int c = 0; c < ncomp; ++c) {
        VertexSet local(gf.graph.vertex_count());
        LowComponentReport cr;
        cr.degrees_match = true;
        for (Vertex v = 0; v < gf.graph.vertex_count(); ++v) {
            if (comp[idx(v)] != c) continue;
            local.insert(v);
            const Vertex pv = gf.vertices[idx(v)];
            cr.vertices.push_back(pv);
            if (g.degree(pv) != l[idx(pv)].size()) cr.degrees_match = false;
        }
        cr.blocks_are_bricks = all_blocks_are_bricks(induced_subgraph(gf.graph, local).graph).all_bricks;
        r.components.push_back(std::move(cr));
    }

    const int s = l.empty() ? 0 : l.front().size();
    if (std::all_of(l.begin(), l.end(), [&](const ColorSet& c) { return c.size() == s; })) {
        const int k = s + 1;
        r.k = k;
        r.high_nonempty_or_brick = !r.split.high.empty() || is_brick(g);
        r.clique_forces_balanced_kk = !has_clique(gf.graph, k) || is_balanced_complete(g, k);
    }
    return r;
}

SignedGraph signed_line_graph(const SignedGraph& g) {
    std::vector<Edge> out;
    const int m = g.edge_count();
    for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) out.push_back({a, b, ea.sign * eb.sign});
        }
    return SignedGraph(m, std::move(out));
}

}  // namespace sgc
