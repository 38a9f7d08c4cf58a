#ifndef SGC_DETAIL_CANONICAL_HPP
#define SGC_DETAIL_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace sgc::detail {

constexpr int kMaxShapeVertices = 7;

/// Colex position of the pair {a, b}, a < b: (0,1), (0,2), (1,2), (0,3), ...
constexpr int pair_index(int a, int b) { return b * (b - 1) / 2 + a; }
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Complete graph with a small integer type on every vertex pair; 0 means no
/// edges. Types must fit in three bits.
struct TypeMatrix {
    int n = 0;
    std::array<std::array<std::uint8_t, kMaxShapeVertices>, kMaxShapeVertices> t{};

    int at(int a, int b) const { return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    void set(int a, int b, int type) {
        t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(type);
        t[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(type);
    }
};

using Permutation = std::array<int, kMaxShapeVertices>;

/// Pair types in colex order, three bits each, first pair most significant.
std::uint64_t encode(const TypeMatrix& m);
TypeMatrix decode(int n, std::uint64_t code);

struct CanonicalForm {
    std::uint64_t code = 0;
    Permutation labeling{};  // canonical position -> original vertex
};

/// Least code over all relabelings that respect the refined vertex partition.
CanonicalForm canonical_form(const TypeMatrix& m);

/// Every permutation p with m[p(a)][p(b)] == m[a][b]; the identity comes first.
std::vector<Permutation> automorphisms(const TypeMatrix& m);

}  // namespace sgc::detail

#endif  // SGC_DETAIL_CANONICAL_HPP
