#include "sgc/detail/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgc::detail {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

using Cells = std::array<int, kMaxShapeVertices>;

// Equitable-style refinement: a vertex's cell is refined by the multiset of
// (pair type, neighbor cell) over all other vertices. Cells are numbered by
// the rank of their signature, so the numbering is labeling-invariant.
Cells refine(const TypeMatrix& m) {
    const int n = m.n;
    Cells cell{};
    for (int v = 0; v < n; ++v) {
        int inv = 0;
        for (int w = 0; w < n; ++w)
            if (w != v) inv += 1 << (3 * m.at(v, w));
        cell[idx(v)] = inv;
    }
    int classes = 0;
    for (;;) {
        std::array<std::array<int, kMaxShapeVertices + 1>, kMaxShapeVertices> sig{};
        for (int v = 0; v < n; ++v) {
            auto& s = sig[idx(v)];
            s[0] = cell[idx(v)];
            int k = 1;
            for (int w = 0; w < n; ++w)
                if (w != v) s[idx(k++)] = m.at(v, w) * 64 + cell[idx(w)] % 64;
            std::sort(s.begin() + 1, s.begin() + k);
        }
        std::array<int, kMaxShapeVertices> order{};
        std::iota(order.begin(), order.begin() + n, 0);
        std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return sig[idx(a)] < sig[idx(b)]; });
        Cells next{};
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[idx(order[idx(i)])] != sig[idx(order[idx(i - 1)])]) ++rank;
            next[idx(order[idx(i)])] = rank;
        }
        cell = next;
        if (rank + 1 == classes) break;
        classes = rank + 1;
    }
    return cell;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const TypeMatrix& m) : m_(m), n_(m.n) {
        const Cells cell = refine(m);
        std::array<int, kMaxShapeVertices> order{};
        std::iota(order.begin(), order.begin() + n_, 0);
        std::sort(order.begin(), order.begin() + n_, [&](int a, int b) { return cell[idx(a)] < cell[idx(b)]; });
        for (int p = 0; p < n_; ++p) position_cell_[idx(p)] = cell[idx(order[idx(p)])];
        cell_ = cell;
    }

    CanonicalForm run() {
        dfs(0, false);
        CanonicalForm out;
        out.labeling = best_perm_;
        TypeMatrix c;
        c.n = n_;
        for (int b = 1; b < n_; ++b)
            for (int a = 0; a < b; ++a) c.set(a, b, best_[idx(pair_index(a, b))]);
        out.code = encode(c);
        return out;
    }

private:
    void dfs(int depth, bool less) {
        if (depth == n_) {
            if (less || !have_best_) {
                best_ = cur_;
                best_perm_ = perm_;
                have_best_ = true;
                ++generation_;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[idx(v)] || cell_[idx(v)] != position_cell_[idx(depth)]) continue;
            bool now_less = less || !have_best_;
            bool prune = false;
            const int base = pair_index(0, depth);
            for (int i = 0; i < depth; ++i) {
                const auto t = static_cast<std::uint8_t>(m_.at(perm_[idx(i)], v));
                cur_[idx(base + i)] = t;
                if (!now_less) {
                    const std::uint8_t b = best_[idx(base + i)];
                    if (t > b) {
                        prune = true;
                        break;
                    }
                    if (t < b) now_less = true;
                }
            }
            if (prune) continue;
            used_[idx(v)] = true;
            perm_[idx(depth)] = v;
            const unsigned before = generation_;
            dfs(depth + 1, now_less);
            used_[idx(v)] = false;
            // A new best came from this path, so its prefix now ties.
            if (generation_ != before) less = false;
        }
    }

    const TypeMatrix& m_;
    int n_;
    Cells cell_{};
    std::array<int, kMaxShapeVertices> position_cell_{};
    std::array<bool, kMaxShapeVertices> used_{};
    Permutation perm_{};
    Permutation best_perm_{};
    std::array<std::uint8_t, pair_count(kMaxShapeVertices)> cur_{};
    std::array<std::uint8_t, pair_count(kMaxShapeVertices)> best_{};
    bool have_best_ = false;
    unsigned generation_ = 0;
};

void check_order(int n) {
    if (n < 0 || n > kMaxShapeVertices)
        throw std::length_error("shape codes hold at most " + std::to_string(kMaxShapeVertices) + " vertices");
}

}  // namespace

std::uint64_t encode(const TypeMatrix& m) {
    check_order(m.n);
    std::uint64_t code = 0;
    for (int b = 1; b < m.n; ++b)
        for (int a = 0; a < b; ++a) code = code << 3 | static_cast<std::uint64_t>(m.at(a, b) & 7);
    return code;
}

TypeMatrix decode(int n, std::uint64_t code) {
    check_order(n);
    TypeMatrix m;
    m.n = n;
    for (int b = n - 1; b >= 1; --b)
        for (int a = b - 1; a >= 0; --a) {
            m.set(a, b, static_cast<int>(code & 7));
            code >>= 3;
        }
    return m;
}

CanonicalForm canonical_form(const TypeMatrix& m) {
    check_order(m.n);
    if (m.n == 0) return {};
    return CanonicalSearch(m).run();
}

std::vector<Permutation> automorphisms(const TypeMatrix& m) {
    check_order(m.n);
    const int n = m.n;
    const Cells cell = refine(m);
    std::vector<Permutation> out;
    Permutation p{};
    std::array<bool, kMaxShapeVertices> used{};
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            out.push_back(p);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[idx(v)] || cell[idx(v)] != cell[idx(depth)]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) ok = m.at(p[idx(i)], v) == m.at(i, depth);
            if (!ok) continue;
            used[idx(v)] = true;
            p[idx(depth)] = v;
            self(self, depth + 1);
            used[idx(v)] = false;
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace sgc::detail
