#include "sgc/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <tuple>

namespace sgc {

using detail::pair_index;
using detail::TypeMatrix;

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr std::array<int, 6> kIsoMultiplicity{0, 1, 1, 2, 2, 2};
constexpr std::array<int, 4> kSwitchingMultiplicity{0, 1, 2, 2};

int type_multiplicity(int type, Equivalence e) {
    return e == Equivalence::isomorphism ? kIsoMultiplicity[idx(type)] : kSwitchingMultiplicity[idx(type)];
}

// Number of pair types available to the spec, including `none`.
int type_count(const EnumSpec& spec) {
    if (spec.modulo == Equivalence::isomorphism) return spec.max_multiplicity == 1 ? 3 : 6;
    return spec.max_multiplicity == 1 ? 2 : 4;
}

int max_order(const EnumSpec& spec) {
    if (spec.max_multiplicity == 1) return spec.modulo == Equivalence::isomorphism ? 6 : 7;
    return spec.modulo == Equivalence::isomorphism ? 5 : 6;
}

using CacheKey = std::tuple<int, int, bool, Equivalence, int>;

std::mutex cache_mutex;
std::map<CacheKey, std::vector<Shape>> cache;

std::uint32_t vertex_invariant(const TypeMatrix& m, int v) {
    std::uint32_t inv = 0;
    for (int w = 0; w < m.n; ++w)
        if (w != v) inv += 1u << (3 * m.at(v, w));
    return inv;
}

bool connected_without(const TypeMatrix& m, int gone) {
    const int n = m.n;
    const unsigned all = ((1u << n) - 1) & ~(1u << gone);
    if (all == 0) return true;
    unsigned reached = all & (~all + 1), frontier = reached;
    while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        for (int w = 0; w < n; ++w)
            if (m.at(v, w) != 0 && (all >> w & 1) && !(reached >> w & 1)) {
                reached |= 1u << w;
                frontier |= 1u << w;
            }
    }
    return reached == all;
}

// Every class arises from deleting a vertex of largest invariant among those
// whose removal leaves a member of the previous level, so other extensions
// can be dropped before canonicalization.
bool new_vertex_is_deletable_max(const TypeMatrix& m, bool connected_only) {
    const int last = m.n - 1;
    const std::uint32_t mine = vertex_invariant(m, last);
    for (int v = 0; v < last; ++v)
        if (vertex_invariant(m, v) > mine && (!connected_only || connected_without(m, v))) return false;
    return true;
}

std::vector<Shape> extend(const EnumSpec& spec, const std::vector<Shape>& base, int n) {
    const int types = type_count(spec);
    const int cap = spec.degree_cap.value_or(1 << 20);
    const int old = n - 1;
    int rows = 1;
    for (int i = 0; i < old; ++i) rows *= types;

    std::vector<std::uint64_t> codes;
    std::array<int, detail::kMaxShapeVertices> row{};
    for (const Shape& s : base) {
        std::array<int, detail::kMaxShapeVertices> deg{};
        for (int v = 0; v < old; ++v) deg[idx(v)] = s.degree(v, spec.modulo);
        TypeMatrix m = s.types;
        m.n = n;
        for (int r = spec.connected_only ? 1 : 0; r < rows; ++r) {
            int x = r, new_deg = 0;
            bool ok = true;
            for (int v = 0; v < old; ++v) {
                row[idx(v)] = x % types;
                x /= types;
                const int mu = type_multiplicity(row[idx(v)], spec.modulo);
                new_deg += mu;
                if (deg[idx(v)] + mu > cap) ok = false;
            }
            if (!ok || new_deg > cap) continue;
            for (int v = 0; v < old; ++v) m.set(v, old, row[idx(v)]);
            if (!new_vertex_is_deletable_max(m, spec.connected_only)) continue;
            codes.push_back(detail::canonical_form(m).code);
        }
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

    std::vector<Shape> out;
    out.reserve(codes.size());
    for (std::uint64_t c : codes) out.push_back(Shape{detail::decode(n, c), c});
    return out;
}

SignedGraph iso_graph(const Shape& shape) {
    const int n = shape.vertex_count();
    std::vector<Edge> edges;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) switch (shape.types.at(a, b)) {
                case pair_type::plus: edges.push_back({a, b, Sign::positive}); break;
                case pair_type::minus: edges.push_back({a, b, Sign::negative}); break;
                case pair_type::plus_plus:
                    edges.push_back({a, b, Sign::positive});
                    edges.push_back({a, b, Sign::positive});
                    break;
                case pair_type::minus_minus:
                    edges.push_back({a, b, Sign::negative});
                    edges.push_back({a, b, Sign::negative});
                    break;
                case pair_type::plus_minus:
                    edges.push_back({a, b, Sign::positive});
                    edges.push_back({a, b, Sign::negative});
                    break;
                default: break;
            }
    return SignedGraph(n, std::move(edges));
}

// Switching classes of signings of one shape. Pairs of type single or
// uniform_double carry a sign; a spanning forest of them is fixed positive and
// the remaining ("free") pairs are indexed by the bits of a mask. Each mask is
// a different switching class; a mask is emitted only when no automorphism of
// the shape maps it to a smaller one.
class SwitchingRealizer {
public:
    explicit SwitchingRealizer(const Shape& shape) : shape_(shape), n_(shape.vertex_count()) {
        const TypeMatrix& m = shape.types;
        auto signed_pair = [&](int a, int b) {
            const int t = m.at(a, b);
            return t == pair_type::single || t == pair_type::uniform_double;
        };
        std::array<bool, detail::kMaxShapeVertices> seen{};
        std::array<bool, detail::pair_count(detail::kMaxShapeVertices)> tree{};
        for (int root = 0; root < n_; ++root) {
            if (seen[idx(root)]) continue;
            seen[idx(root)] = true;
            bfs_.push_back({root, -1});
            for (std::size_t head = bfs_.size() - 1; head < bfs_.size(); ++head) {
                const int u = bfs_[head].first;
                for (int w = 0; w < n_; ++w)
                    if (w != u && !seen[idx(w)] && signed_pair(u, w)) {
                        seen[idx(w)] = true;
                        tree[idx(pair_index(std::min(u, w), std::max(u, w)))] = true;
                        bfs_.push_back({w, u});
                    }
            }
        }
        for (int b = 1; b < n_; ++b)
            for (int a = 0; a < b; ++a)
                if (signed_pair(a, b) && !tree[idx(pair_index(a, b))]) free_.push_back({a, b});
        if (free_.size() > 30) throw EnumerationBudgetExceeded("too many independent cycles in one shape");
        if (!free_.empty()) auts_ = detail::automorphisms(m);
    }

    bool run(const std::function<bool(const SignedGraph&)>& visit) {
        const std::uint32_t masks = 1u << free_.size();
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            if (!orbit_minimal(mask)) continue;
            if (!visit(build(mask))) return false;
        }
        return true;
    }

private:
    using SignTable = std::array<std::array<int, detail::kMaxShapeVertices>, detail::kMaxShapeVertices>;

    SignTable signs(std::uint32_t mask) const {
        SignTable s;
        for (auto& r : s) r.fill(1);
        for (std::size_t j = 0; j < free_.size(); ++j)
            if (mask >> j & 1u) {
                const auto [a, b] = free_[j];
                s[idx(a)][idx(b)] = s[idx(b)][idx(a)] = -1;
            }
        return s;
    }

    bool orbit_minimal(std::uint32_t mask) const {
        if (auts_.size() <= 1) return true;
        const SignTable s = signs(mask);
        for (std::size_t k = 1; k < auts_.size(); ++k) {
            const detail::Permutation& p = auts_[k];
            // Image signing: s2(p(a), p(b)) = s(a, b).
            SignTable s2;
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) s2[idx(p[idx(a)])][idx(p[idx(b)])] = s[idx(a)][idx(b)];
            std::array<int, detail::kMaxShapeVertices> pot{};
            for (const auto& [v, parent] : bfs_) pot[idx(v)] = parent < 0 ? 1 : pot[idx(parent)] * s2[idx(parent)][idx(v)];
            std::uint32_t image = 0;
            for (std::size_t j = 0; j < free_.size(); ++j) {
                const auto [a, b] = free_[j];
                if (pot[idx(a)] * s2[idx(a)][idx(b)] * pot[idx(b)] < 0) image |= 1u << j;
            }
            if (image < mask) return false;
        }
        return true;
    }

    SignedGraph build(std::uint32_t mask) const {
        const SignTable s = signs(mask);
        std::vector<Edge> edges;
        for (int b = 1; b < n_; ++b)
            for (int a = 0; a < b; ++a) {
                const Sign sg = s[idx(a)][idx(b)] > 0 ? Sign::positive : Sign::negative;
                switch (shape_.types.at(a, b)) {
                    case pair_type::single: edges.push_back({a, b, sg}); break;
                    case pair_type::uniform_double:
                        edges.push_back({a, b, sg});
                        edges.push_back({a, b, sg});
                        break;
                    case pair_type::mixed_double:
                        edges.push_back({a, b, Sign::positive});
                        edges.push_back({a, b, Sign::negative});
                        break;
                    default: break;
                }
            }
        return SignedGraph(n_, std::move(edges));
    }

    const Shape& shape_;
    int n_;
    std::vector<std::pair<int, int>> bfs_;   // (vertex, parent) in forest order
    std::vector<std::pair<int, int>> free_;  // signed pairs outside the forest
    std::vector<detail::Permutation> auts_;
};

}  // namespace

std::string to_string(Equivalence e) { return e == Equivalence::isomorphism ? "iso" : "switching"; }

Equivalence parse_equivalence(const std::string& s) {
    if (s == "iso") return Equivalence::isomorphism;
    if (s == "switching") return Equivalence::switching_isomorphism;
    throw std::invalid_argument("unknown equivalence '" + s + "' (expected iso or switching)");
}

void validate(const EnumSpec& spec) {
    if (spec.max_multiplicity != 1 && spec.max_multiplicity != 2)
        throw std::invalid_argument("max multiplicity must be 1 or 2");
    if (spec.min_vertices < 1 || spec.min_vertices > spec.max_vertices)
        throw std::invalid_argument("vertex range must satisfy 1 <= min <= max");
    if (spec.degree_cap && *spec.degree_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
    if (spec.max_vertices > max_order(spec))
        throw EnumerationBudgetExceeded("enumeration with multiplicity " + std::to_string(spec.max_multiplicity) +
                                        " modulo " + to_string(spec.modulo) + " supports at most " +
                                        std::to_string(max_order(spec)) + " vertices");
}

int Shape::multiplicity(int a, int b, Equivalence e) const { return a == b ? 0 : type_multiplicity(types.at(a, b), e); }

int Shape::degree(int v, Equivalence e) const {
    int d = 0;
    for (int w = 0; w < types.n; ++w) d += multiplicity(v, w, e);
    return d;
}

SignedGraph Shape::support() const {
    std::vector<Edge> edges;
    for (int b = 1; b < types.n; ++b)
        for (int a = 0; a < b; ++a)
            if (types.at(a, b) != pair_type::none) edges.push_back({a, b, Sign::positive});
    return SignedGraph(types.n, std::move(edges));
}

const std::vector<Shape>& shapes(const EnumSpec& spec, int n) {
    validate(spec);
    if (n < 1 || n > max_order(spec)) throw EnumerationBudgetExceeded("shape order out of range");
    const CacheKey key{n, spec.max_multiplicity, spec.connected_only, spec.modulo, spec.degree_cap.value_or(-1)};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<Shape> level;
    if (n == 1) {
        TypeMatrix m;
        m.n = 1;
        level.push_back(Shape{m, 0});
    } else {
        level = extend(spec, shapes(spec, n - 1), n);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(level)).first->second;
}

bool for_each_realization(const EnumSpec& spec, const Shape& shape,
                          const std::function<bool(const SignedGraph&)>& visit) {
    if (spec.modulo == Equivalence::isomorphism) return visit(iso_graph(shape));
    return SwitchingRealizer(shape).run(visit);
}

std::uint64_t enumerate(const EnumSpec& spec, const std::function<bool(const SignedGraph&)>& visit,
                        const std::function<bool(const Shape&)>& keep_shape) {
    validate(spec);
    std::uint64_t visited = 0;
    for (int n = spec.min_vertices; n <= spec.max_vertices; ++n)
        for (const Shape& s : shapes(spec, n)) {
            if (keep_shape && !keep_shape(s)) continue;
            const bool go_on = for_each_realization(spec, s, [&](const SignedGraph& g) {
                ++visited;
                return visit(g);
            });
            if (!go_on) return visited;
        }
    return visited;
}

std::vector<SignedGraph> enumerate_all(const EnumSpec& spec) {
    std::vector<SignedGraph> out;
    enumerate(spec, [&](const SignedGraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::uint64_t count(const EnumSpec& spec) {
    return enumerate(spec, [](const SignedGraph&) { return true; });
}

}  // namespace sgc
