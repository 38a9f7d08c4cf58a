#include "sgc/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgc/detail/search.hpp"

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void normalize(std::vector<int>& c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
}

}  // namespace

ColorSet::ColorSet(std::initializer_list<int> colors) : colors_(colors) { normalize(colors_); }
ColorSet::ColorSet(std::vector<int> colors) : colors_(std::move(colors)) { normalize(colors_); }

ColorSet ColorSet::z(int k) {
    if (k < 0) throw std::invalid_argument("Z_k needs k >= 0");
    std::vector<int> c;
    for (int i = 1; i <= k / 2; ++i) {
        c.push_back(i);
        c.push_back(-i);
    }
    if (k % 2 == 1) c.push_back(0);
    return ColorSet(std::move(c));
}

ColorSet ColorSet::range(int first, int count) {
    std::vector<int> c;
    for (int i = 0; i < count; ++i) c.push_back(first + i);
    return ColorSet(std::move(c));
}

bool ColorSet::contains(int c) const { return std::binary_search(colors_.begin(), colors_.end(), c); }

ColorSet ColorSet::negated() const {
    std::vector<int> c;
    c.reserve(colors_.size());
    for (int x : colors_) c.push_back(-x);
    return ColorSet(std::move(c));
}

ColorSet ColorSet::united(const ColorSet& other) const {
    std::vector<int> c;
    std::set_union(colors_.begin(), colors_.end(), other.colors_.begin(), other.colors_.end(), std::back_inserter(c));
    return ColorSet(std::move(c));
}

ColorSet ColorSet::intersected(const ColorSet& other) const {
    std::vector<int> c;
    std::set_intersection(colors_.begin(), colors_.end(), other.colors_.begin(), other.colors_.end(),
                          std::back_inserter(c));
    return ColorSet(std::move(c));
}

ColorSet ColorSet::without(int c) const {
    std::vector<int> out;
    for (int x : colors_)
        if (x != c) out.push_back(x);
    return ColorSet(std::move(out));
}

std::string ColorSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < colors_.size(); ++i) os << (i ? ", " : "") << colors_[i];
    os << '}';
    return os.str();
}

bool is_valid_coloring(const SignedGraph& g, const SignedColoring& phi) {
    if (static_cast<int>(phi.size()) != g.vertex_count())
        throw std::invalid_argument("coloring does not assign every vertex");
    for (const Edge& e : g.edges())
        if (phi[idx(e.u)] == value(e.sign) * phi[idx(e.v)]) return false;
    return true;
}

std::optional<SignedColoring> solve_with_colorset(const SignedGraph& g, const ColorSet& c) {
    if (c.size() <= detail::SmallPaletteSolver::kMaxColors && c == ColorSet::z(c.size()) &&
        detail::SmallPaletteSolver::fits(g)) {
        SignedColoring phi;
        if (detail::SmallPaletteSolver(g).solve(c.size(), &phi)) return phi;
        return std::nullopt;
    }
    std::vector<std::vector<int>> lists(idx(g.vertex_count()), c.colors());
    auto symmetry = c.is_symmetric() ? detail::PaletteSymmetry::signed_pairs : detail::PaletteSymmetry::none;
    return detail::find_coloring(g, lists, symmetry);
}

ChromaticResult signed_chromatic(const SignedGraph& g) {
    if (g.vertex_count() == 0) return {0, {}};
    const int limit = g.max_degree() + 1;
    if (detail::SmallPaletteSolver::fits(g)) {
        detail::SmallPaletteSolver solver(g);
        SignedColoring phi;
        for (int k = 1; k <= limit; ++k)
            if (solver.solve(k, &phi)) return {k, std::move(phi)};
    }
    for (int k = 1; k <= limit; ++k)
        if (auto phi = solve_with_colorset(g, ColorSet::z(k))) return {k, std::move(*phi)};
    throw std::logic_error("no coloring found within Z_{max degree + 1}");
}

int signed_chromatic_number(const SignedGraph& g) { return signed_chromatic(g).k; }

ColoringNumber coloring_number(const SignedGraph& g) {
    ColoringNumber out;
    int degeneracy = 0;
    out.elimination = detail::elimination_order(g, &degeneracy);
    out.ordering.assign(out.elimination.rbegin(), out.elimination.rend());
    out.col = g.vertex_count() == 0 ? 0 : degeneracy + 1;
    return out;
}

SignedColoring greedy_coloring(const SignedGraph& g, const std::vector<Vertex>& ordering, int k) {
    if (k < 0) throw std::invalid_argument("palette size must be nonnegative");
    const int n = g.vertex_count();
    std::vector<bool> seen(idx(n), false);
    if (static_cast<int>(ordering.size()) != n) throw std::invalid_argument("ordering is not a permutation of the vertices");
    for (Vertex v : ordering) {
        g.check_vertex(v);
        if (seen[idx(v)]) throw std::invalid_argument("ordering is not a permutation of the vertices");
        seen[idx(v)] = true;
    }
    SignedColoring phi(idx(n), 0);
    std::vector<bool> colored(idx(n), false);
    std::vector<int> forbidden;
    for (Vertex v : ordering) {
        forbidden.clear();
        for (EdgeId e : g.incident(v)) {
            const Edge& edge = g.edge(e);
            Vertex w = edge.other(v);
            if (colored[idx(w)]) forbidden.push_back(value(edge.sign) * phi[idx(w)]);
        }
        // 0, 1, -1, 2, -2, ... starting at 1 for an even palette
        for (int step = k > 0 && k % 2 == 0 ? 1 : 0;; ++step) {
            if (k > 0 && step >= k + (k % 2 == 0 ? 1 : 0))
                throw std::domain_error("no color of Z_" + std::to_string(k) + " left for vertex " + std::to_string(v));
            int c = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
            if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end()) {
                phi[idx(v)] = c;
                break;
            }
        }
        colored[idx(v)] = true;
    }
    return phi;
}

bool is_k_critical(const SignedGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("criticality needs k >= 1");
    const ColorSet fewer = ColorSet::z(k - 1);
    if (!solve_with_colorset(g, ColorSet::z(k))) return false;
    if (solve_with_colorset(g, fewer)) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!solve_with_colorset(delete_edge(g, e), fewer)) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!solve_with_colorset(delete_vertex(g, v).graph, fewer)) return false;
    return true;
}

int underlying_chromatic_number(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const SignedGraph support = simple_support(g);
    if (detail::SmallPaletteSolver::fits(support)) {
        detail::SmallPaletteSolver solver(support);
        for (int k = 1; k <= n; ++k)
            if (solver.solve(k)) return k;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> lists(idx(n), ColorSet::range(1, k).colors());
        if (detail::find_coloring(support, lists, detail::PaletteSymmetry::interchangeable)) return k;
    }
    throw std::logic_error("no proper coloring with n colors");
}

}  // namespace sgc
