#include "sgc/detail/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace sgc::detail {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

template <std::size_t W>
struct Mask {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[idx(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(int i) { w[idx(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    Mask operator&(const Mask& o) const {
        Mask r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    template <class F>
    bool each(F&& f) const {
        for (std::size_t i = 0; i < W; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                x &= x - 1;
                if (f(static_cast<int>(i * 64) + b)) return true;
            }
        }
        return false;
    }
};

struct Arc {
    Vertex to;
    bool same;     // a positive edge: forbids the same color
    bool negated;  // a negative edge: forbids the negated color
};

struct Problem {
    int n = 0;
    std::vector<int> values;    // color index -> color
    std::vector<int> negation;  // color index -> index of -color
    std::vector<int> klass;     // color index -> symmetry class, -1 if fixed
    std::vector<bool> opens;    // color may be the first use of its class
    std::vector<std::vector<Arc>> arcs;
    std::vector<Vertex> order;
    std::vector<int> position;
};

template <std::size_t W>
class Searcher {
public:
    Searcher(const Problem& p, std::span<const std::vector<int>> lists) : p_(p) {
        const int n = p.n;
        domains_.assign(idx(n + 1) * idx(n), {});
        for (Vertex v = 0; v < n; ++v)
            for (int c : lists[idx(v)]) {
                auto it = std::lower_bound(p.values.begin(), p.values.end(), c);
                domains_[idx(v)].set(static_cast<int>(it - p.values.begin()));
            }
        int classes = 0;
        for (int k : p.klass) classes = std::max(classes, k + 1);
        // allowed_[u]: colors usable once classes 0..u-1 are in use.
        allowed_.assign(idx(classes + 1), {});
        for (int u = 0; u <= classes; ++u)
            for (std::size_t c = 0; c < p.values.size(); ++c) {
                int k = p.klass[c];
                if (k < 0 || k < u || (k == u && p.opens[c])) allowed_[idx(u)].set(static_cast<int>(c));
            }
        symmetric_ = classes > 0;
        assignment_.assign(idx(n), -1);
    }

    bool run() {
        for (Vertex v = 0; v < p_.n; ++v)
            if (!domains_[idx(v)].any()) return false;
        return dfs(0, 0);
    }

    std::vector<int> coloring() const {
        std::vector<int> out(assignment_.size());
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = p_.values[idx(assignment_[v])];
        return out;
    }

private:
    Mask<W>* level(int d) { return domains_.data() + idx(d) * idx(p_.n); }

    bool dfs(int depth, int used) {
        if (depth == p_.n) return true;
        const Vertex v = p_.order[idx(depth)];
        Mask<W>* cur = level(depth);
        Mask<W> candidates = cur[v];
        if (symmetric_) candidates = candidates & allowed_[idx(std::min<int>(used, static_cast<int>(allowed_.size()) - 1))];
        return candidates.each([&](int c) {
            Mask<W>* next = level(depth + 1);
            std::copy(cur, cur + p_.n, next);
            for (const Arc& a : p_.arcs[idx(v)]) {
                if (p_.position[idx(a.to)] <= depth) continue;
                if (a.same) next[a.to].clear(c);
                if (a.negated && p_.negation[idx(c)] >= 0) next[a.to].clear(p_.negation[idx(c)]);
                if (!next[a.to].any()) return false;
            }
            assignment_[idx(v)] = c;
            const int k = p_.klass[idx(c)];
            return dfs(depth + 1, k == used ? used + 1 : used);
        });
    }

    const Problem& p_;
    std::vector<Mask<W>> domains_;
    std::vector<Mask<W>> allowed_;
    std::vector<int> assignment_;
    bool symmetric_ = false;
};

template <std::size_t W>
std::optional<std::vector<int>> run_search(const Problem& p, std::span<const std::vector<int>> lists) {
    Searcher<W> s(p, lists);
    if (!s.run()) return std::nullopt;
    return s.coloring();
}

}  // namespace

std::vector<Vertex> elimination_order(const SignedGraph& g, int* degeneracy) {
    const int n = g.vertex_count();
    std::vector<int> deg(idx(n));
    std::vector<bool> removed(idx(n), false);
    for (Vertex v = 0; v < n; ++v) deg[idx(v)] = g.degree(v);
    std::vector<Vertex> order;
    order.reserve(idx(n));
    int worst = 0;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[idx(v)] && (best < 0 || deg[idx(v)] < deg[idx(best)])) best = v;
        worst = std::max(worst, deg[idx(best)]);
        removed[idx(best)] = true;
        order.push_back(best);
        for (EdgeId e : g.incident(best)) {
            Vertex w = g.edges()[idx(e)].other(best);
            if (!removed[idx(w)]) --deg[idx(w)];
        }
    }
    if (degeneracy) *degeneracy = worst;
    return order;
}

SmallPaletteSolver::SmallPaletteSolver(const SignedGraph& g) {
    if (!fits(g)) throw std::length_error("graph too large for the small palette solver");
    n_ = g.vertex_count();
    std::array<int, kMaxVertices> slot;
    slot.fill(-1);
    for (Vertex v = 0; v < n_; ++v) {
        int& count = arc_count_[idx(v)];
        for (EdgeId e : g.incident(v)) {
            const Edge& edge = g.edges()[idx(e)];
            const Vertex w = edge.other(v);
            if (slot[idx(w)] < 0) {
                slot[idx(w)] = count;
                arcs_[idx(v)][idx(count++)] = {static_cast<std::int8_t>(w), false, false};
            }
            Arc& a = arcs_[idx(v)][idx(slot[idx(w)])];
            (edge.sign == Sign::positive ? a.same : a.negated) = true;
        }
        for (int i = 0; i < count; ++i) slot[idx(arcs_[idx(v)][idx(i)].to)] = -1;
    }
    std::vector<Vertex> order = elimination_order(g);
    for (int i = 0; i < n_; ++i) {
        order_[idx(i)] = order[idx(n_ - 1 - i)];
        position_[idx(order_[idx(i)])] = i;
    }
}

bool SmallPaletteSolver::solve(int k, std::vector<int>* coloring) {
    if (k < 0 || k > kMaxColors) throw std::invalid_argument("palette size out of range");
    if (n_ == 0) {
        if (coloring) coloring->clear();
        return true;
    }
    if (k == 0) return false;
    const int h = k / 2;
    std::uint64_t palette = (std::uint64_t{1} << (2 * h + 1)) - 1;
    if (k % 2 == 0) palette &= ~std::uint64_t{1};
    domains_[0].fill(palette);
    if (!dfs(0, 0)) return false;
    if (coloring) {
        coloring->assign(idx(n_), 0);
        for (int i = 0; i < n_; ++i) {
            const int b = chosen_[idx(i)];
            (*coloring)[idx(order_[idx(i)])] = b == 0 ? 0 : (b % 2 ? (b + 1) / 2 : -(b / 2));
        }
    }
    return true;
}

bool SmallPaletteSolver::dfs(int depth, int used) {
    if (depth == n_) return true;
    const int v = order_[idx(depth)];
    const auto& cur = domains_[idx(depth)];
    auto& next = domains_[idx(depth + 1)];
    // Magnitudes are opened in increasing order, each by its positive color.
    std::uint64_t candidates = cur[idx(v)];
    if (2 * used + 2 < 64) candidates &= (std::uint64_t{1} << (2 * used + 2)) - 1;
    while (candidates) {
        const int c = std::countr_zero(candidates);
        candidates &= candidates - 1;
        const int neg = c == 0 ? 0 : (c % 2 ? c + 1 : c - 1);
        next = cur;
        bool wiped = false;
        for (int i = 0; i < arc_count_[idx(v)] && !wiped; ++i) {
            const Arc& a = arcs_[idx(v)][idx(i)];
            if (position_[idx(a.to)] <= depth) continue;
            std::uint64_t& d = next[idx(a.to)];
            if (a.same) d &= ~(std::uint64_t{1} << c);
            if (a.negated) d &= ~(std::uint64_t{1} << neg);
            wiped = d == 0;
        }
        if (wiped) continue;
        chosen_[idx(depth)] = c;
        const int opened = c == 0 ? used : std::max(used, (c + 1) / 2);
        if (dfs(depth + 1, opened)) return true;
    }
    return false;
}

std::optional<std::vector<int>> find_coloring(const SignedGraph& g, std::span<const std::vector<int>> lists,
                                              PaletteSymmetry symmetry) {
    const int n = g.vertex_count();
    if (static_cast<int>(lists.size()) != n) throw std::invalid_argument("list assignment does not cover every vertex");
    if (n == 0) return std::vector<int>{};

    Problem p;
    p.n = n;
    for (const auto& l : lists)
        for (int c : l) {
            p.values.push_back(c);
            p.values.push_back(-c);
        }
    std::sort(p.values.begin(), p.values.end());
    p.values.erase(std::unique(p.values.begin(), p.values.end()), p.values.end());
    const std::size_t m = p.values.size();
    p.negation.resize(m);
    for (std::size_t c = 0; c < m; ++c)
        p.negation[c] = static_cast<int>(std::lower_bound(p.values.begin(), p.values.end(), -p.values[c]) - p.values.begin());

    p.klass.assign(m, -1);
    p.opens.assign(m, true);
    if (symmetry == PaletteSymmetry::signed_pairs) {
        // Classes by increasing magnitude; 0 stays fixed.
        std::vector<int> mags;
        for (int c : p.values)
            if (c > 0) mags.push_back(c);
        for (std::size_t c = 0; c < m; ++c)
            if (p.values[c] != 0) {
                p.klass[c] = static_cast<int>(std::lower_bound(mags.begin(), mags.end(), std::abs(p.values[c])) - mags.begin());
                p.opens[c] = p.values[c] > 0;
            }
    } else if (symmetry == PaletteSymmetry::interchangeable) {
        // Only the colors that actually appear in the lists form classes.
        int k = 0;
        for (std::size_t c = 0; c < m; ++c)
            if (std::find(lists[0].begin(), lists[0].end(), p.values[c]) != lists[0].end()) p.klass[c] = k++;
    }

    p.arcs.assign(idx(n), {});
    std::vector<int> slot(idx(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        auto& arcs = p.arcs[idx(v)];
        for (EdgeId e : g.incident(v)) {
            const Edge& edge = g.edges()[idx(e)];
            Vertex w = edge.other(v);
            if (slot[idx(w)] < 0) {
                slot[idx(w)] = static_cast<int>(arcs.size());
                arcs.push_back({w, false, false});
            }
            Arc& a = arcs[idx(slot[idx(w)])];
            (edge.sign == Sign::positive ? a.same : a.negated) = true;
        }
        for (const Arc& a : arcs) slot[idx(a.to)] = -1;
    }

    p.order = elimination_order(g);
    std::reverse(p.order.begin(), p.order.end());
    p.position.assign(idx(n), 0);
    for (int i = 0; i < n; ++i) p.position[idx(p.order[idx(i)])] = i;

    if (m <= 64) return run_search<1>(p, lists);
    if (m <= 256) return run_search<4>(p, lists);
    if (m <= 1024) return run_search<16>(p, lists);
    throw std::length_error("more than 1024 distinct colors in a list assignment");
}

}  // namespace sgc::detail
