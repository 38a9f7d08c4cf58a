#include <algorithm>
#include <map>

#include "sgc/list_coloring.hpp"

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Colors c in L(pin) for which the subgraph has no coloring with phi(pin) = c.
ColorSet blocked_colors(const Subgraph& part, const ListAssignment& global, Vertex pin) {
    ListAssignment local;
    Vertex local_pin = -1;
    for (std::size_t i = 0; i < part.vertices.size(); ++i) {
        local.push_back(global[idx(part.vertices[i])]);
        if (part.vertices[i] == pin) local_pin = static_cast<Vertex>(i);
    }
    std::vector<int> blocked;
    for (int c : global[idx(pin)]) {
        local[idx(local_pin)] = ColorSet{c};
        if (!is_list_colorable(part.graph, local)) blocked.push_back(c);
    }
    return ColorSet(std::move(blocked));
}

}  // namespace

std::vector<ListAssignment> split_block_lists(const SignedGraph& g, const ListAssignment& l,
                                              const BlockDecomposition& dec) {
    const std::size_t nb = dec.blocks.size();
    std::vector<ListAssignment> out(nb);
    std::vector<bool> alive(nb, true);
    ListAssignment current = l;
    std::size_t remaining = nb;

    auto alive_blocks_at = [&](Vertex v) {
        int c = 0;
        for (int b : dec.blocks_at[idx(v)])
            if (alive[idx(b)]) ++c;
        return c;
    };
    auto local_lists = [&](const Block& b) {
        ListAssignment lb;
        for (Vertex v : b.vertices) lb.push_back(current[idx(v)]);
        return lb;
    };

    while (remaining > 1) {
        // Smallest-index alive end-block and its only remaining cut vertex.
        std::size_t end = nb;
        Vertex cut = -1;
        for (std::size_t b = 0; b < nb && end == nb; ++b) {
            if (!alive[b]) continue;
            int cuts = 0;
            Vertex last = -1;
            for (Vertex v : dec.blocks[b].vertices)
                if (alive_blocks_at(v) >= 2) {
                    ++cuts;
                    last = v;
                }
            if (cuts == 1) {
                end = b;
                cut = last;
            }
        }
        if (end == nb) throw std::logic_error("alive blocks have no end-block");

        const Block& eb = dec.blocks[end];
        Subgraph end_part{eb.graph, eb.vertices, eb.edges};
        std::vector<EdgeId> rest_edges;
        for (std::size_t b = 0; b < nb; ++b)
            if (alive[b] && b != end) rest_edges.insert(rest_edges.end(), dec.blocks[b].edges.begin(), dec.blocks[b].edges.end());
        Subgraph rest = edge_subgraph(g, rest_edges);

        const ColorSet own = blocked_colors(end_part, current, cut);
        const ColorSet others = blocked_colors(rest, current, cut);
        out[end] = local_lists(eb);
        for (std::size_t i = 0; i < eb.vertices.size(); ++i)
            if (eb.vertices[i] == cut) out[end][i] = own;
        current[idx(cut)] = others;
        alive[end] = false;
        --remaining;
    }
    for (std::size_t b = 0; b < nb; ++b)
        if (alive[b]) out[b] = local_lists(dec.blocks[b]);
    return out;
}

PairStructureReport check_pair_structure(const UncolorablePair& pair) {
    const SignedGraph& g = pair.graph;
    const ListAssignment& l = pair.lists;
    if (static_cast<int>(l.size()) != g.vertex_count()) throw std::invalid_argument("lists do not cover every vertex");
    if (g.vertex_count() == 0 || !g.is_connected()) throw std::domain_error("an uncolorable pair needs a connected graph");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (l[idx(v)].size() < g.degree(v))
            throw std::domain_error("vertex " + std::to_string(v) + " has a list shorter than its degree");
    if (is_list_colorable(g, l)) throw std::domain_error("pair is colorable");

    PairStructureReport r;
    r.lists_equal_degrees = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (l[idx(v)].size() != g.degree(v)) r.lists_equal_degrees = false;

    std::map<std::pair<Vertex, Vertex>, std::vector<Sign>> by_pair;
    for (const Edge& e : g.edges()) by_pair[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.sign);
    r.edge_shape = std::all_of(by_pair.begin(), by_pair.end(), [](const auto& kv) {
        const auto& s = kv.second;
        return s.size() == 1 || (s.size() == 2 && s[0] != s[1]);
    });

    const BlockDecomposition dec = blocks(g);
    r.blocks_are_bricks = true;
    for (const Block& b : dec.blocks) {
        r.brick_classes.push_back(classify_brick(b.graph));
        if (!r.brick_classes.back().is_brick()) r.blocks_are_bricks = false;
    }

    const std::vector<ListAssignment> split = split_block_lists(g, l, dec);
    r.block_lists = true;
    r.even_regular = true;
    for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
        const Block& b = dec.blocks[bi];
        const SignedGraph& bg = b.graph;
        const ListAssignment& lb = split[bi];
        BlockListReport br;
        br.block = static_cast<int>(bi);
        br.lists = lb;
        br.lists_match_degree = true;
        for (Vertex v = 0; v < bg.vertex_count(); ++v)
            if (lb[idx(v)].size() != bg.degree(v)) br.lists_match_degree = false;
        br.edge_relation = std::all_of(bg.edges().begin(), bg.edges().end(), [&](const Edge& e) {
            return lb[idx(e.u)] == (e.sign == Sign::positive ? lb[idx(e.v)] : lb[idx(e.v)].negated());
        });
        br.positive = bg.is_positive();
        br.c = lb.front();
        br.constant = std::all_of(lb.begin(), lb.end(), [&](const ColorSet& s) { return s == br.c; });
        br.constant_symmetric = br.constant && br.c.is_symmetric();

        VertexSet x(bg.vertex_count()), y(bg.vertex_count());
        bool cover = true;
        for (Vertex v = 0; v < bg.vertex_count(); ++v) {
            if (lb[idx(v)] == br.c) x.insert(v);
            else if (lb[idx(v)] == br.c.negated()) y.insert(v);
            else cover = false;
        }
        br.balanced_split = cover && std::all_of(bg.edges().begin(), bg.edges().end(), [&](const Edge& e) {
            const bool crosses = x.contains(e.u) != x.contains(e.v);
            return crosses == (e.sign == Sign::negative);
        });
        if (br.balanced_split) {
            for (Vertex v : x.members()) br.x.push_back(b.vertices[idx(v)]);
            for (Vertex v : y.members()) br.y.push_back(b.vertices[idx(v)]);
        }
        br.regular = bg.is_regular();
        br.degree = br.regular ? bg.max_degree() : -1;
        br.multiple = bg.max_multiplicity() >= 2;

        if (br.positive && br.constant) br.tag = ListCase::c1_constant;
        else if (!br.positive && br.constant_symmetric) br.tag = ListCase::c2_symmetric;
        else if (!br.positive && br.balanced_split) br.tag = ListCase::c2_balanced;

        const bool c_ok = br.lists_match_degree && br.edge_relation && br.tag != ListCase::none && br.regular;
        if (!c_ok) r.block_lists = false;
        if (br.multiple && !(br.regular && br.degree >= 2 && br.degree % 2 == 0)) r.even_regular = false;
        r.blocks.push_back(std::move(br));
    }
    return r;
}

}  // namespace sgc
