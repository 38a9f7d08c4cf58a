#include "sgc/structure.hpp"

#include <algorithm>
#include <map>

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Path from v up to (excluding) the ancestor a in the BFS forest.
void climb(Vertex v, Vertex a, const std::vector<Vertex>& parent, const std::vector<EdgeId>& parent_edge,
           std::vector<Vertex>& verts, std::vector<EdgeId>& edges) {
    while (v != a) {
        verts.push_back(v);
        edges.push_back(parent_edge[idx(v)]);
        v = parent[idx(v)];
    }
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> potential(idx(n), 0);  // +1 in X, -1 in Y, 0 unvisited
    std::vector<Vertex> parent(idx(n), -1);
    std::vector<EdgeId> parent_edge(idx(n), -1);
    std::vector<int> depth(idx(n), 0);
    std::vector<Vertex> queue;
    queue.reserve(idx(n));

    for (Vertex root = 0; root < n; ++root) {
        if (potential[idx(root)] != 0) continue;
        potential[idx(root)] = 1;
        queue.clear();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (EdgeId e : g.incident(v)) {
                const Edge& edge = g.edges()[idx(e)];
                Vertex w = edge.other(v);
                if (potential[idx(w)] == 0) {
                    potential[idx(w)] = potential[idx(v)] * value(edge.sign);
                    parent[idx(w)] = v;
                    parent_edge[idx(w)] = e;
                    depth[idx(w)] = depth[idx(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[idx(e)];
        if (potential[idx(edge.u)] * potential[idx(edge.v)] == value(edge.sign)) continue;
        // Non-tree edge closing a negative cycle with the tree path between its ends.
        Vertex a = edge.u, b = edge.v;
        while (depth[idx(a)] > depth[idx(b)]) a = parent[idx(a)];
        while (depth[idx(b)] > depth[idx(a)]) b = parent[idx(b)];
        while (a != b) {
            a = parent[idx(a)];
            b = parent[idx(b)];
        }
        SignedCycle cycle;
        std::vector<Vertex> up_v;
        std::vector<EdgeId> up_e;
        // u -> ... -> lca, then lca -> ... -> v, then the closing edge back to u.
        climb(edge.u, a, parent, parent_edge, cycle.vertices, cycle.edges);
        climb(edge.v, a, parent, parent_edge, up_v, up_e);
        cycle.vertices.push_back(a);
        for (std::size_t i = up_v.size(); i-- > 0;) {
            cycle.vertices.push_back(up_v[i]);
            cycle.edges.push_back(up_e[i]);
        }
        cycle.edges.push_back(e);
        BalanceResult out;
        out.balanced = false;
        out.cycle = std::move(cycle);
        return out;
    }

    BalanceResult out;
    out.balanced = true;
    BalancePartition parts{VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < n; ++v) (potential[idx(v)] > 0 ? parts.x : parts.y).insert(v);
    out.parts = std::move(parts);
    return out;
}

BalanceResult is_antibalanced(const SignedGraph& g) { return is_balanced(negate(g)); }

std::optional<VertexSet> switching_equivalence(const SignedGraph& g, const SignedGraph& g2) {
    if (g.vertex_count() != g2.vertex_count() || g.edge_count() != g2.edge_count())
        throw std::invalid_argument("switching equivalence needs identical underlying graphs");
    std::vector<Edge> ratio;
    ratio.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& a = g.edges()[i];
        const Edge& b = g2.edges()[i];
        if (!a.joins(b.u, b.v)) throw std::invalid_argument("edge " + std::to_string(i) + " has different endpoints");
        ratio.push_back({a.u, a.v, a.sign * b.sign});
    }
    BalanceResult r = is_balanced(SignedGraph(g.vertex_count(), std::move(ratio)));
    if (!r.balanced) return std::nullopt;
    return r.parts->x;
}

bool is_switching_equivalent(const SignedGraph& g, const SignedGraph& g2) {
    return switching_equivalence(g, g2).has_value();
}

std::vector<int> BlockDecomposition::end_blocks() const {
    std::vector<int> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        int cuts = 0;
        for (Vertex v : blocks[b].vertices)
            if (cut_vertices.contains(v)) ++cuts;
        if (cuts <= 1) out.push_back(static_cast<int>(b));
    }
    return out;
}

BlockDecomposition blocks(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(idx(n), -1), low(idx(n), 0);
    std::vector<std::vector<EdgeId>> edge_groups;
    std::vector<Vertex> isolated;
    std::vector<EdgeId> edge_stack;
    struct Frame {
        Vertex v;
        EdgeId parent_edge;
        std::size_t next;
    };
    std::vector<Frame> frames;
    int timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[idx(root)] >= 0) continue;
        disc[idx(root)] = low[idx(root)] = timer++;
        if (g.degree(root) == 0) {
            isolated.push_back(root);
            continue;
        }
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.parent_edge) continue;
                Vertex w = g.edges()[idx(e)].other(f.v);
                if (disc[idx(w)] < 0) {
                    edge_stack.push_back(e);
                    disc[idx(w)] = low[idx(w)] = timer++;
                    frames.push_back({w, e, 0});
                } else if (disc[idx(w)] < disc[idx(f.v)]) {
                    edge_stack.push_back(e);
                    low[idx(f.v)] = std::min(low[idx(f.v)], disc[idx(w)]);
                }
                continue;
            }
            Frame done = f;
            frames.pop_back();
            if (frames.empty()) break;
            Vertex p = frames.back().v;
            low[idx(p)] = std::min(low[idx(p)], low[idx(done.v)]);
            if (low[idx(done.v)] >= disc[idx(p)]) {
                std::vector<EdgeId> group;
                while (true) {
                    EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    group.push_back(e);
                    if (e == done.parent_edge) break;
                }
                std::sort(group.begin(), group.end());
                edge_groups.push_back(std::move(group));
            }
        }
    }

    struct Pending {
        int key_kind;  // 0: edge block, 1: isolated vertex
        int key;
        std::vector<EdgeId> edges;
        Vertex vertex;
    };
    std::vector<Pending> pending;
    for (auto& grp : edge_groups) pending.push_back({0, grp.front(), std::move(grp), -1});
    for (Vertex v : isolated) pending.push_back({1, v, {}, v});
    std::sort(pending.begin(), pending.end(),
              [](const Pending& a, const Pending& b) { return std::tie(a.key_kind, a.key) < std::tie(b.key_kind, b.key); });

    BlockDecomposition out;
    out.cut_vertices = VertexSet(n);
    out.blocks_at.assign(idx(n), {});
    for (auto& p : pending) {
        Block b;
        if (p.key_kind == 1) {
            b.vertices = {p.vertex};
            b.graph = SignedGraph(1, {});
        } else {
            Subgraph s = edge_subgraph(g, p.edges);
            b.graph = std::move(s.graph);
            b.vertices = std::move(s.vertices);
            b.edges = std::move(s.edges);
        }
        int index = static_cast<int>(out.blocks.size());
        for (Vertex v : b.vertices) out.blocks_at[idx(v)].push_back(index);
        out.blocks.push_back(std::move(b));
    }
    for (Vertex v = 0; v < n; ++v)
        if (out.blocks_at[idx(v)].size() >= 2) out.cut_vertices.insert(v);
    return out;
}

int BrickClass::degree() const {
    switch (kind) {
        case BrickKind::balanced_complete: return order - 1;
        case BrickKind::balanced_odd_cycle:
        case BrickKind::unbalanced_even_cycle: return 2;
        case BrickKind::doubled_complete: return 2 * order - 2;
        case BrickKind::doubled_odd_cycle: return 4;
        case BrickKind::not_a_brick: break;
    }
    throw std::logic_error("not a brick has no degree");
}

bool BrickClass::symmetric_class() const {
    return kind == BrickKind::unbalanced_even_cycle || kind == BrickKind::doubled_complete ||
           kind == BrickKind::doubled_odd_cycle;
}

std::string BrickClass::name() const {
    const std::string n = std::to_string(order);
    switch (kind) {
        case BrickKind::balanced_complete: return "balanced K_" + n;
        case BrickKind::balanced_odd_cycle: return "balanced C_" + n;
        case BrickKind::unbalanced_even_cycle: return "unbalanced C_" + n;
        case BrickKind::doubled_complete: return "2K_" + n;
        case BrickKind::doubled_odd_cycle: return "2C_" + n;
        case BrickKind::not_a_brick: break;
    }
    return "not a brick (" + reason + ")";
}

namespace {

BrickClass not_brick(std::string reason) { return {BrickKind::not_a_brick, 0, std::move(reason)}; }

}  // namespace

BrickClass classify_brick(const SignedGraph& b) {
    const int n = b.vertex_count();
    if (n == 0) throw std::domain_error("the empty graph is not a block");
    if (!b.is_connected()) throw std::domain_error("graph is not connected, so not a block");
    if (n >= 3 && blocks(b).blocks.size() != 1) throw std::domain_error("graph has a cut vertex, so not a block");
    if (n == 1) return {BrickKind::balanced_complete, 1, {}};

    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    if (b.is_simple()) {
        const bool complete = b.edge_count() == pairs;
        const bool balanced = is_balanced(b).balanced;
        if (complete && balanced) return {BrickKind::balanced_complete, n, {}};
        const bool cycle = n >= 3 && b.is_regular() && b.max_degree() == 2;
        if (cycle) {
            if (n % 2 == 1 && balanced) return {BrickKind::balanced_odd_cycle, n, {}};
            if (n % 2 == 0 && !balanced) return {BrickKind::unbalanced_even_cycle, n, {}};
            return not_brick(balanced ? "balanced even cycle" : "unbalanced odd cycle");
        }
        if (complete) return not_brick("unbalanced complete graph");
        return not_brick("simple graph that is neither complete nor a cycle");
    }

    if (b.max_multiplicity() > 2) return not_brick("multiplicity above 2");
    std::map<std::pair<Vertex, Vertex>, std::vector<Sign>> by_pair;
    for (const Edge& e : b.edges()) by_pair[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.sign);
    for (const auto& [pair, signs] : by_pair)
        if (signs.size() != 2 || signs[0] == signs[1])
            return not_brick("adjacent pair not joined by a differently signed parallel pair");
    const long support_edges = static_cast<long>(by_pair.size());
    if (support_edges == pairs) return {BrickKind::doubled_complete, n, {}};
    if (b.is_regular() && b.max_degree() == 4 && support_edges == n) {
        if (n % 2 == 1) return {BrickKind::doubled_odd_cycle, n, {}};
        return not_brick("doubled even cycle");
    }
    return not_brick("doubled graph whose support is neither complete nor a cycle");
}

BrickCheck all_blocks_are_bricks(const SignedGraph& g) {
    if (g.vertex_count() == 0 || !g.is_connected()) throw std::domain_error("brick check needs a connected graph");
    BrickCheck out;
    out.decomposition = blocks(g);
    out.all_bricks = true;
    for (const Block& b : out.decomposition.blocks) {
        out.classes.push_back(classify_brick(b.graph));
        if (!out.classes.back().is_brick()) out.all_bricks = false;
    }
    return out;
}

bool is_brick(const SignedGraph& g) {
    if (g.vertex_count() == 0 || !g.is_connected()) return false;
    if (g.vertex_count() >= 3 && blocks(g).blocks.size() != 1) return false;
    return classify_brick(g).is_brick();
}

}  // namespace sgc
