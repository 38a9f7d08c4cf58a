// Exhaustive list-assignment enumeration up to color relabeling.
//
// Colorability only sees equality and negation between colors, so applying a
// bijection rho with rho(-c) = -rho(c) to every list preserves it. Such a rho
// fixes 0 and permutes the pairs {c, -c}, possibly flipping them. An
// assignment is therefore determined, up to relabeling, by the set of
// vertices holding 0 and the multiset of "columns": for each pair {c, -c} in
// use, which vertices hold c, which hold -c (unordered under the flip).

#include <algorithm>
#include <numeric>

#include "sgc/list_coloring.hpp"

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct Column {
    std::vector<int> state;   // 0 none, 1 holds +c, 2 holds -c, 3 holds both
    std::vector<int> weight;  // list entries the column contributes per vertex
};

std::vector<Column> columns(int n) {
    std::vector<Column> out;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (int code = 1; code < total; ++code) {
        std::vector<int> s(idx(n));
        int swapped = 0, x = code, p = 1;
        for (int v = 0; v < n; ++v) {
            s[idx(v)] = x % 4;
            x /= 4;
            int t = s[idx(v)] == 1 ? 2 : s[idx(v)] == 2 ? 1 : s[idx(v)];
            swapped += t * p;
            p *= 4;
        }
        if (swapped < code) continue;  // keep one orientation per pair
        Column c{s, std::vector<int>(idx(n))};
        for (int v = 0; v < n; ++v) c.weight[idx(v)] = s[idx(v)] == 3 ? 2 : s[idx(v)] ? 1 : 0;
        out.push_back(std::move(c));
    }
    return out;
}

class AssignmentWalker {
public:
    AssignmentWalker(const std::vector<int>& f, const std::function<bool(const ListAssignment&)>& visit)
        : n_(static_cast<int>(f.size())), visit_(visit), columns_(columns(n_)) {}

    std::uint64_t run(const std::vector<int>& f) {
        for (int zero = 0; zero < (1 << n_); ++zero) {
            std::vector<int> residual = f;
            bool ok = true;
            for (int v = 0; v < n_; ++v)
                if (zero >> v & 1) {
                    if (--residual[idx(v)] < 0) ok = false;
                }
            if (!ok) continue;
            zero_ = zero;
            chosen_.clear();
            if (!extend(0, residual)) break;
        }
        return visited_;
    }

private:
    bool done(const std::vector<int>& r) const {
        return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
    }

    // Returns false once the visitor asked to stop.
    bool extend(std::size_t start, std::vector<int>& residual) {
        if (done(residual)) return emit();
        for (std::size_t i = start; i < columns_.size(); ++i) {
            const Column& c = columns_[i];
            bool fits = true;
            for (int v = 0; v < n_ && fits; ++v) fits = c.weight[idx(v)] <= residual[idx(v)];
            if (!fits) continue;
            for (int v = 0; v < n_; ++v) residual[idx(v)] -= c.weight[idx(v)];
            chosen_.push_back(i);
            bool keep_going = extend(i, residual);
            chosen_.pop_back();
            for (int v = 0; v < n_; ++v) residual[idx(v)] += c.weight[idx(v)];
            if (!keep_going) return false;
        }
        return true;
    }

    bool emit() {
        ++visited_;
        std::vector<std::vector<int>> raw(idx(n_));
        for (int v = 0; v < n_; ++v)
            if (zero_ >> v & 1) raw[idx(v)].push_back(0);
        for (std::size_t j = 0; j < chosen_.size(); ++j) {
            const int mag = static_cast<int>(j) + 1;
            const Column& c = columns_[chosen_[j]];
            for (int v = 0; v < n_; ++v) {
                int s = c.state[idx(v)];
                if (s == 1 || s == 3) raw[idx(v)].push_back(mag);
                if (s == 2 || s == 3) raw[idx(v)].push_back(-mag);
            }
        }
        ListAssignment l;
        l.reserve(raw.size());
        for (auto& r : raw) l.emplace_back(std::move(r));
        return visit_(l);
    }

    int n_;
    const std::function<bool(const ListAssignment&)>& visit_;
    std::vector<Column> columns_;
    std::vector<std::size_t> chosen_;
    int zero_ = 0;
    std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_assignment(const std::vector<int>& f, const std::function<bool(const ListAssignment&)>& visit) {
    if (f.size() > 8) throw BudgetExceeded("assignment enumeration supports at most 8 vertices");
    for (int x : f)
        if (x < 0) throw std::invalid_argument("list sizes must be nonnegative");
    AssignmentWalker walker(f, visit);
    return walker.run(f);
}

OracleResult f_choosable_oracle(const SignedGraph& g, const std::vector<int>& f, int budget) {
    if (static_cast<int>(f.size()) != g.vertex_count()) throw std::invalid_argument("f must give a size for every vertex");
    const int total = std::accumulate(f.begin(), f.end(), 0);
    if (total > budget)
        throw BudgetExceeded("total list size " + std::to_string(total) + " exceeds oracle budget " + std::to_string(budget));
    OracleResult out;
    out.assignments = for_each_assignment(f, [&](const ListAssignment& l) {
        if (is_list_colorable(g, l)) return true;
        out.colorable = false;
        out.counterexample = l;
        return false;
    });
    return out;
}

OracleResult degree_choosable_oracle(const SignedGraph& g, int budget) {
    if (g.vertex_count() == 0 || !g.is_connected()) throw std::domain_error("degree choosability needs a connected graph");
    std::vector<int> f(idx(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) f[idx(v)] = g.degree(v);
    return f_choosable_oracle(g, f, budget);
}

int signed_choice_number(const SignedGraph& g, int budget) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const int upper = coloring_number(g).col;
    for (int k = signed_chromatic_number(g); k <= upper; ++k) {
        if (static_cast<long>(n) * k > budget)
            throw BudgetExceeded("choice number test at k = " + std::to_string(k) + " exceeds oracle budget " +
                                 std::to_string(budget));
        if (f_choosable_oracle(g, std::vector<int>(idx(n), k), budget).colorable) return k;
    }
    throw std::logic_error("graph is not col(G)-choosable");
}

}  // namespace sgc
