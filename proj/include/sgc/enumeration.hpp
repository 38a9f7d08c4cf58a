#ifndef SGC_ENUMERATION_HPP
#define SGC_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgc/detail/canonical.hpp"
#include "sgc/graph.hpp"

namespace sgc {

enum class Equivalence {
    isomorphism,
    switching_isomorphism,
};

std::string to_string(Equivalence e);
/// "iso" or "switching"; throws std::invalid_argument otherwise.
Equivalence parse_equivalence(const std::string& s);

struct EnumSpec {
    int min_vertices = 1;
    int max_vertices = 4;
    int max_multiplicity = 2;  // 1 or 2
    bool connected_only = true;
    Equivalence modulo = Equivalence::switching_isomorphism;
    std::optional<int> degree_cap;
};

class EnumerationBudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Throws EnumerationBudgetExceeded when the spec is outside the sizes the
/// enumerator supports, std::invalid_argument when it is malformed.
void validate(const EnumSpec& spec);

/// Pair types. Under isomorphism the six sign multisets of at most two
/// parallel edges are distinct; under switching only the shape of the pair
/// survives and the signs are chosen separately.
namespace pair_type {
inline constexpr int none = 0;
// isomorphism
inline constexpr int plus = 1, minus = 2, plus_plus = 3, minus_minus = 4, plus_minus = 5;
// switching
inline constexpr int single = 1, uniform_double = 2, mixed_double = 3;
}  // namespace pair_type

/// An unsigned skeleton in canonical labeling.
struct Shape {
    detail::TypeMatrix types;
    std::uint64_t code = 0;

    int vertex_count() const { return types.n; }
    int multiplicity(int a, int b, Equivalence e) const;
    int degree(int v, Equivalence e) const;
    /// Simple positive graph on the adjacent pairs.
    SignedGraph support() const;
};

/// Canonical shapes with exactly n vertices, sorted by code. Results are
/// cached per (n, multiplicity, connectivity, equivalence, degree cap).
const std::vector<Shape>& shapes(const EnumSpec& spec, int n);

/// Graphs realizing one shape: the shape itself under isomorphism, one
/// representative per switching class orbit otherwise, by ascending sign mask.
/// The visitor returns false to stop; the return value is false when it did.
bool for_each_realization(const EnumSpec& spec, const Shape& shape,
                          const std::function<bool(const SignedGraph&)>& visit);

/// Streams every graph of the spec in the order (n, shape code, sign mask).
/// Shapes rejected by `keep_shape` are skipped whole. Returns the number of
/// graphs visited.
std::uint64_t enumerate(const EnumSpec& spec, const std::function<bool(const SignedGraph&)>& visit,
                        const std::function<bool(const Shape&)>& keep_shape = {});

std::vector<SignedGraph> enumerate_all(const EnumSpec& spec);
std::uint64_t count(const EnumSpec& spec);

}  // namespace sgc

#endif  // SGC_ENUMERATION_HPP
