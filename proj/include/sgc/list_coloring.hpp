#ifndef SGC_LIST_COLORING_HPP
#define SGC_LIST_COLORING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgc/coloring.hpp"
#include "sgc/graph.hpp"
#include "sgc/structure.hpp"

namespace sgc {

/// L: vertex id -> list of colors.
using ListAssignment = std::vector<ColorSet>;

/// Thrown when an exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// |L(v)| == f(v) for every v.
bool is_f_assignment(const ListAssignment& l, const std::vector<int>& f);
/// Lists negated on X (L/X), the list counterpart of switching.
ListAssignment switch_lists(const ListAssignment& l, const VertexSet& x);

/// An L-coloring or nullopt after exhaustive search. Throws
/// std::invalid_argument when L does not cover every vertex.
std::optional<SignedColoring> solve_list_coloring(const SignedGraph& g, const ListAssignment& l);
bool is_list_colorable(const SignedGraph& g, const ListAssignment& l);

struct UncolorablePair {
    SignedGraph graph;
    ListAssignment lists;
};

struct ReducedPair {
    SignedGraph graph;
    ListAssignment lists;
    std::vector<Vertex> new_to_old;
};

/// (G, L)/(v, c): deletes v and removes c from positive neighbors, -c from
/// negative neighbors and both from neighbors joined by edges of both signs.
/// Throws std::domain_error if v separates G, c is not in L(v) or |G| < 2.
ReducedPair reduce_pair(const SignedGraph& g, const ListAssignment& l, Vertex v, int c);

/// Lists of the bad assignment for one brick. Colors are nonzero and have
/// absolute value in (band_offset, band_offset + width], where width is the
/// brick degree (asymmetric classes) or half of it (symmetric classes).
ListAssignment brick_bad_lists(const SignedGraph& brick, int band_offset);
/// Number of magnitudes brick_bad_lists uses for this brick class.
int band_width(const BrickClass& c);

/// Uncolorable d_G-assignment for a connected graph whose blocks are all
/// bricks: disjoint bands per block, unions at cut vertices. Throws
/// std::domain_error when some block is not a brick.
ListAssignment build_uncolorable_assignment(const SignedGraph& g);

/// Per-block lists whose union at each vertex gives L, obtained by peeling
/// end-blocks (a cut vertex keeps in each side the colors that side cannot
/// extend). Lists are indexed by local block vertex ids.
std::vector<ListAssignment> split_block_lists(const SignedGraph& g, const ListAssignment& l,
                                              const BlockDecomposition& decomposition);

enum class ListCase { c1_constant, c2_symmetric, c2_balanced, none };

struct BlockListReport {
    int block = 0;
    ListAssignment lists;     // local ids
    bool lists_match_degree;  // |L_B(v)| == d_B(v)
    bool edge_relation;       // L_B(v) == sigma(e) L_B(w) on every edge
    bool positive;
    bool constant;            // one color set C on every vertex
    bool constant_symmetric;
    bool balanced_split;      // balanced with parts X, Y and L = C on X, -C on Y
    ColorSet c;
    std::vector<Vertex> x, y;  // parent ids, for balanced_split
    bool regular;
    int degree;  // uniform degree, or -1
    bool multiple;  // mu(B) >= 2
    ListCase tag = ListCase::none;
};

/// Statements (a)-(e) about an uncolorable pair, each evaluated directly.
struct PairStructureReport {
    bool lists_equal_degrees = false;  // (a)
    bool edge_shape = false;           // (b)
    bool block_lists = false;          // (c) on every block, with (c1)/(c2)
    bool even_regular = false;         // (d) on every block with mu >= 2
    bool blocks_are_bricks = false;    // (e)
    std::vector<BlockListReport> blocks;
    std::vector<BrickClass> brick_classes;

    bool all() const { return lists_equal_degrees && edge_shape && block_lists && even_regular && blocks_are_bricks; }
};

/// Throws std::domain_error unless (G, L) is connected, has |L(v)| >= d(v)
/// and is certified uncolorable by the solver.
PairStructureReport check_pair_structure(const UncolorablePair& pair);

struct DegreeChoosability {
    bool choosable = false;
    /// Choosable: index of the first block that is not a brick.
    std::optional<int> non_brick_block;
    std::string reason;
    /// Not choosable: a d_G-assignment with no L-coloring.
    std::optional<ListAssignment> bad_lists;
    bool bad_lists_verified = false;
};

/// Not degree choosable iff every block is a brick; the bad assignment in the
/// negative case is checked by the solver. Throws std::domain_error on
/// disconnected input.
DegreeChoosability is_degree_choosable(const SignedGraph& g);

/// Visits every f-assignment once up to relabelings rho of the integers with
/// rho(-c) = -rho(c). Colors are drawn from Z_{2S+1}, S = sum f. The visitor
/// returns false to stop. Returns the number of assignments visited.
std::uint64_t for_each_assignment(const std::vector<int>& f, const std::function<bool(const ListAssignment&)>& visit);

struct OracleResult {
    bool colorable = true;  // every enumerated assignment admits a coloring
    std::uint64_t assignments = 0;
    std::optional<ListAssignment> counterexample;
};

/// True iff the graph is f-list-colorable, by exhaustive enumeration.
/// Throws BudgetExceeded when sum f > budget.
OracleResult f_choosable_oracle(const SignedGraph& g, const std::vector<int>& f, int budget = 12);
/// f = d_G. Throws std::domain_error on disconnected input.
OracleResult degree_choosable_oracle(const SignedGraph& g, int budget = 12);

/// Least k such that every k-assignment is colorable. Throws BudgetExceeded
/// when some tested k has |V| k > budget.
int signed_choice_number(const SignedGraph& g, int budget = 12);

/// Not L-colorable while every G - e and G - v is.
bool is_list_critical(const SignedGraph& g, const ListAssignment& l);

}  // namespace sgc

#endif  // SGC_LIST_COLORING_HPP
