#include "sgc/list_coloring.hpp"

#include <algorithm>

#include "sgc/detail/search.hpp"

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_cover(const SignedGraph& g, const ListAssignment& l) {
    if (static_cast<int>(l.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment has " + std::to_string(l.size()) + " lists for " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

bool is_f_assignment(const ListAssignment& l, const std::vector<int>& f) {
    if (l.size() != f.size()) return false;
    for (std::size_t v = 0; v < l.size(); ++v)
        if (l[v].size() != f[v]) return false;
    return true;
}

ListAssignment switch_lists(const ListAssignment& l, const VertexSet& x) {
    ListAssignment out = l;
    for (Vertex v : x.members()) out[idx(v)] = out[idx(v)].negated();
    return out;
}

std::optional<SignedColoring> solve_list_coloring(const SignedGraph& g, const ListAssignment& l) {
    check_cover(g, l);
    std::vector<std::vector<int>> lists;
    lists.reserve(l.size());
    for (const ColorSet& c : l) lists.push_back(c.colors());
    return detail::find_coloring(g, lists, detail::PaletteSymmetry::none);
}

bool is_list_colorable(const SignedGraph& g, const ListAssignment& l) { return solve_list_coloring(g, l).has_value(); }

ReducedPair reduce_pair(const SignedGraph& g, const ListAssignment& l, Vertex v, int c) {
    check_cover(g, l);
    g.check_vertex(v);
    if (g.vertex_count() < 2) throw std::domain_error("reduction needs at least two vertices");
    if (!l[idx(v)].contains(c)) throw std::domain_error("color " + std::to_string(c) + " is not in the list of vertex " + std::to_string(v));
    VertexDeletion del = delete_vertex(g, v);
    if (del.graph.component_count() > g.component_count())
        throw std::domain_error("vertex " + std::to_string(v) + " is a separating vertex");

    std::vector<bool> pos(idx(g.vertex_count()), false), neg(idx(g.vertex_count()), false);
    for (Vertex w : g.positive_neighbors(v)) pos[idx(w)] = true;
    for (Vertex w : g.negative_neighbors(v)) neg[idx(w)] = true;

    ReducedPair out;
    out.graph = std::move(del.graph);
    out.new_to_old = del.new_to_old;
    for (Vertex u : del.new_to_old) {
        ColorSet lu = l[idx(u)];
        if (pos[idx(u)]) lu = lu.without(c);
        if (neg[idx(u)]) lu = lu.without(-c);
        out.lists.push_back(std::move(lu));
    }
    return out;
}

int band_width(const BrickClass& c) {
    if (!c.is_brick()) throw std::domain_error("not a brick: " + c.reason);
    return c.symmetric_class() ? c.degree() / 2 : c.degree();
}

ListAssignment brick_bad_lists(const SignedGraph& brick, int band_offset) {
    if (band_offset < 0) throw std::invalid_argument("band offset must be nonnegative");
    const BrickClass cls = classify_brick(brick);
    if (!cls.is_brick()) throw std::domain_error("not a brick: " + cls.reason);
    const int n = brick.vertex_count();
    if (cls.symmetric_class()) {
        if (cls.degree() % 2 != 0) throw std::domain_error("symmetric brick class with odd degree");
        std::vector<int> c;
        for (int i = 1; i <= cls.degree() / 2; ++i) {
            c.push_back(band_offset + i);
            c.push_back(-(band_offset + i));
        }
        return ListAssignment(idx(n), ColorSet(std::move(c)));
    }
    const ColorSet c = ColorSet::range(band_offset + 1, cls.degree());
    const BalanceResult bal = is_balanced(brick);
    ListAssignment out(idx(n));
    for (Vertex v = 0; v < n; ++v) out[idx(v)] = bal.parts->x.contains(v) ? c : c.negated();
    return out;
}

ListAssignment build_uncolorable_assignment(const SignedGraph& g) {
    const BrickCheck check = all_blocks_are_bricks(g);
    ListAssignment out(idx(g.vertex_count()));
    int offset = 0;
    for (std::size_t b = 0; b < check.classes.size(); ++b) {
        if (!check.classes[b].is_brick())
            throw std::domain_error("block " + std::to_string(b) + " is not a brick: " + check.classes[b].reason);
        const Block& block = check.decomposition.blocks[b];
        ListAssignment local = brick_bad_lists(block.graph, offset);
        for (std::size_t i = 0; i < block.vertices.size(); ++i)
            out[idx(block.vertices[i])] = out[idx(block.vertices[i])].united(local[i]);
        offset += band_width(check.classes[b]);
    }
    return out;
}

DegreeChoosability is_degree_choosable(const SignedGraph& g) {
    const BrickCheck check = all_blocks_are_bricks(g);
    DegreeChoosability out;
    if (!check.all_bricks) {
        out.choosable = true;
        for (std::size_t b = 0; b < check.classes.size(); ++b)
            if (!check.classes[b].is_brick()) {
                out.non_brick_block = static_cast<int>(b);
                out.reason = check.classes[b].reason;
                break;
            }
        return out;
    }
    out.choosable = false;
    out.bad_lists = build_uncolorable_assignment(g);
    out.bad_lists_verified = !is_list_colorable(g, *out.bad_lists);
    return out;
}

bool is_list_critical(const SignedGraph& g, const ListAssignment& l) {
    check_cover(g, l);
    if (is_list_colorable(g, l)) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!is_list_colorable(delete_edge(g, e), l)) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexDeletion del = delete_vertex(g, v);
        ListAssignment rest;
        for (Vertex u : del.new_to_old) rest.push_back(l[idx(u)]);
        if (!is_list_colorable(del.graph, rest)) return false;
    }
    return true;
}

}  // namespace sgc
