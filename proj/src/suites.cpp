#include "sgc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "sgc/bounds.hpp"
#include "sgc/coloring.hpp"
#include "sgc/structure.hpp"

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

using Check = std::function<std::optional<Counterexample>(const SignedGraph&)>;

Counterexample violation(const SignedGraph& g, std::string what, std::vector<std::string> details = {}) {
    return Counterexample{g, std::move(what), std::nullopt, std::move(details)};
}

std::string kv(const std::string& key, long long value) { return key + " = " + std::to_string(value); }

bool is_cycle(const SignedGraph& g) {
    const int n = g.vertex_count();
    return n >= 2 && g.edge_count() == n && g.is_connected() && g.is_regular() && g.max_degree() == 2;
}

std::string cycle_name(const SignedGraph& g) {
    const bool balanced = is_balanced(g).balanced;
    const std::string c = (balanced ? "balanced C_" : "unbalanced C_") + std::to_string(g.vertex_count());
    return g.vertex_count() == 2 && !balanced ? c + " (2K_2)" : c;
}

// Pair types that may sit inside a brick block, for the equivalence in use.
bool single_type(int t, Equivalence e) {
    return e == Equivalence::isomorphism ? (t == pair_type::plus || t == pair_type::minus) : t == pair_type::single;
}
bool mixed_type(int t, Equivalence e) {
    return e == Equivalence::isomorphism ? t == pair_type::plus_minus : t == pair_type::mixed_double;
}

// Necessary shape-level condition for every block to be a brick; the sign
// conditions are left to the per-graph check.
bool blocks_may_be_bricks(const Shape& shape, Equivalence e) {
    const SignedGraph support = shape.support();
    const BlockDecomposition dec = blocks(support);
    for (const Block& b : dec.blocks) {
        const int n = b.graph.vertex_count();
        if (n == 1) continue;
        bool all_single = true, all_mixed = true;
        for (EdgeId id : b.edges) {
            const Edge& edge = support.edge(id);
            const int t = shape.types.at(edge.u, edge.v);
            all_single = all_single && single_type(t, e);
            all_mixed = all_mixed && mixed_type(t, e);
        }
        const bool complete = b.graph.edge_count() == n * (n - 1) / 2;
        const bool cycle = n >= 3 && b.graph.is_regular() && b.graph.max_degree() == 2;
        if (all_single && (complete || cycle)) continue;
        if (all_mixed && (complete || (cycle && n % 2 == 1))) continue;
        return false;
    }
    return true;
}

struct Runner {
    const std::string& suite;
    const SuiteOptions& opt;
    VerificationReport& report;

    void run(const Check& check, const std::function<bool(const Shape&)>& keep_shape = {}) {
        report.instances = enumerate(
            opt.spec,
            [&](const SignedGraph& g) {
                if (auto bad = check(g)) {
                    report.counterexample = std::move(bad);
                    return false;
                }
                return true;
            },
            keep_shape);
    }
};

std::string budget_note(const VerificationReport& r) {
    return "budgeted clause checked on " + std::to_string(r.budget_checked) + " instances, over budget on " +
           std::to_string(r.budget_skipped);
}

void suite_chain(Runner& run) {
    VerificationReport& r = run.report;
    const int budget = run.opt.budget;
    run.run([&](const SignedGraph& g) -> std::optional<Counterexample> {
        const int chi = signed_chromatic_number(g);
        const ColoringNumber col = coloring_number(g);
        const int delta = g.max_degree();
        const std::vector<std::string> d{kv("chi_pm", chi), kv("col", col.col), kv("max_degree", delta)};
        if (chi > col.col) return violation(g, "chi_pm <= col fails", d);
        if (col.col > delta + 1) return violation(g, "col <= max_degree + 1 fails", d);
        const SignedColoring phi = greedy_coloring(g, col.ordering, col.col);
        const ColorSet palette = ColorSet::z(col.col);
        if (!is_valid_coloring(g, phi) ||
            !std::all_of(phi.begin(), phi.end(), [&](int c) { return palette.contains(c); }))
            return violation(g, "greedy coloring along the degeneracy order leaves Z_col", d);
        if (g.vertex_count() <= run.opt.list_max_vertices && static_cast<long>(g.vertex_count()) * col.col <= budget) {
            ++r.budget_checked;
            const int ch = signed_choice_number(g, budget);
            if (ch < chi || ch > col.col) {
                auto dd = d;
                dd.push_back(kv("choice_number", ch));
                return violation(g, "chi_pm <= choice number <= col fails", dd);
            }
        } else {
            ++r.budget_skipped;
        }
        return std::nullopt;
    });
    r.findings.push_back(budget_note(r));
}

void suite_antibalance(Runner& run) {
    run.run([](const SignedGraph& g) -> std::optional<Counterexample> {
        const int chi = signed_chromatic_number(g);
        const bool anti = is_antibalanced(g).balanced;
        if ((chi <= 2) != anti)
            return violation(g, "chi_pm <= 2 iff antibalanced fails",
                             {kv("chi_pm", chi), std::string("antibalanced = ") + (anti ? "true" : "false")});
        return std::nullopt;
    });
}

void suite_brooks(Runner& run) {
    VerificationReport& r = run.report;
    const SuiteOptions& opt = run.opt;
    run.run([&](const SignedGraph& g) -> std::optional<Counterexample> {
        if (is_brick(g)) return std::nullopt;
        const int chi = signed_chromatic_number(g);
        const int delta = g.max_degree();
        if (chi > delta) return violation(g, "non-brick with chi_pm > max_degree", {kv("chi_pm", chi), kv("max_degree", delta)});
        if (g.vertex_count() <= opt.list_max_vertices) {
            if (static_cast<long>(g.vertex_count()) * delta > opt.budget) {
                ++r.budget_skipped;
                return std::nullopt;
            }
            ++r.budget_checked;
            const OracleResult o = f_choosable_oracle(g, std::vector<int>(idx(g.vertex_count()), delta), opt.budget);
            if (!o.colorable) {
                Counterexample c = violation(g, "non-brick with an uncolorable max_degree-assignment", {kv("max_degree", delta)});
                c.lists = o.counterexample;
                return c;
            }
        }
        return std::nullopt;
    });
    r.findings.push_back(budget_note(r));
}

void suite_degree_choosability(Runner& run) {
    VerificationReport& r = run.report;
    const int budget = run.opt.budget;
    run.run([&](const SignedGraph& g) -> std::optional<Counterexample> {
        if (2 * g.edge_count() > budget) {
            ++r.budget_skipped;
            return std::nullopt;
        }
        ++r.budget_checked;
        const OracleResult o = degree_choosable_oracle(g, budget);
        const DegreeChoosability c = is_degree_choosable(g);
        if (o.colorable != c.choosable) {
            Counterexample bad = violation(g, "oracle disagrees with the block characterization",
                                           {std::string("oracle = ") + (o.colorable ? "choosable" : "not choosable"),
                                            std::string("characterization = ") + (c.choosable ? "choosable" : "not choosable")});
            bad.lists = o.counterexample;
            return bad;
        }
        if (!c.choosable && !c.bad_lists_verified) {
            Counterexample bad = violation(g, "constructed degree lists are colorable");
            bad.lists = c.bad_lists;
            return bad;
        }
        return std::nullopt;
    });
    r.findings.push_back("degree-choosability compared on " + std::to_string(r.budget_checked) +
                         " instances; total degree over budget on " + std::to_string(r.budget_skipped));
}

void suite_pair_structure(Runner& run) {
    VerificationReport& r = run.report;
    const Equivalence e = run.opt.spec.modulo;
    std::uint64_t pairs = 0;
    run.run(
        [&](const SignedGraph& g) -> std::optional<Counterexample> {
            if (!all_blocks_are_bricks(g).all_bricks) return std::nullopt;
            ++pairs;
            const ListAssignment l = build_uncolorable_assignment(g);
            auto fail = [&](std::string what) {
                Counterexample c = violation(g, std::move(what));
                c.lists = l;
                return c;
            };
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (l[idx(v)].size() != g.degree(v)) return fail("constructed list size differs from the degree");
            if (is_list_colorable(g, l)) return fail("constructed degree lists are colorable");
            const PairStructureReport p = check_pair_structure({g, l});
            if (!p.lists_equal_degrees) return fail("pair structure (a): list sizes");
            if (!p.edge_shape) return fail("pair structure (b): edge shape");
            if (!p.block_lists) return fail("pair structure (c): block lists");
            if (!p.even_regular) return fail("pair structure (d): multiple-edge blocks");
            if (!p.blocks_are_bricks) return fail("pair structure (e): bricks");
            return std::nullopt;
        },
        [&](const Shape& s) { return blocks_may_be_bricks(s, e); });
    r.findings.push_back("uncolorable pairs built and checked: " + std::to_string(pairs));
}

void suite_three_critical(Runner& run) {
    VerificationReport& r = run.report;
    run.run([&](const SignedGraph& g) -> std::optional<Counterexample> {
        const bool expected = is_cycle(g) && (is_balanced(g).balanced == (g.vertex_count() % 2 == 1));
        const bool critical = signed_chromatic_number(g) == 3 && is_k_critical(g, 3);
        if (critical) r.witnesses.push_back(g);
        if (critical != expected)
            return violation(g, critical ? "3-critical graph that is not a balanced odd or unbalanced even cycle"
                                         : "balanced odd or unbalanced even cycle that is not 3-critical");
        return std::nullopt;
    });
    for (const SignedGraph& g : r.witnesses) r.findings.push_back("3-critical: " + cycle_name(g));
}

void suite_gallai(Runner& run) {
    VerificationReport& r = run.report;
    const int k = run.opt.k;
    std::optional<Rational> least;
    std::vector<std::string> attained;
    std::uint64_t members = 0;
    run.run(
        [&](const SignedGraph& t) -> std::optional<Counterexample> {
            if (!gallai_class_member(t, k).member()) return std::nullopt;
            ++members;
            const Rational m = gallai_deficiency(t, k);
            if (m < Rational(2)) return violation(t, "m(T) >= 2 fails", {"m = " + m.str()});
            if (!least || m < *least) {
                least = m;
                attained.clear();
            }
            if (m == *least) attained.push_back(describe(t));
            return std::nullopt;
        },
        [&](const Shape& s) {
            for (int v = 0; v < s.vertex_count(); ++v)
                if (s.degree(v, run.opt.spec.modulo) > k - 1) return false;
            return true;
        });
    r.findings.push_back("members of the Gallai class: " + std::to_string(members));
    if (least) {
        r.findings.push_back("least m = " + least->str());
        for (const std::string& a : attained) r.findings.push_back("attained by " + a);
    }
}

void suite_edge_bound(Runner& run) {
    VerificationReport& r = run.report;
    const int k = run.opt.k;
    run.run([&](const SignedGraph& g) -> std::optional<Counterexample> {
        if (!g.is_simple()) return std::nullopt;
        if (signed_chromatic_number(g) != k || !is_k_critical(g, k)) return std::nullopt;
        const bool balanced_kk = g.vertex_count() == k && g.edge_count() == k * (k - 1) / 2 && is_balanced(g).balanced;
        if (balanced_kk) {
            r.findings.push_back("excluded: " + describe(g));
            return std::nullopt;
        }
        r.witnesses.push_back(g);
        const EdgeBound b = edge_bound_check(g, k);
        if (!b.holds) return violation(g, "edge bound fails", {kv("2|E|", b.lhs), "bound = " + b.rhs.str()});
        return std::nullopt;
    });
    r.findings.push_back(std::to_string(k) + "-critical simple graphs checked: " + std::to_string(r.witnesses.size()));
}

void suite_doubling(Runner& run) {
    VerificationReport& r = run.report;
    EnumSpec simple = run.opt.spec;
    simple.max_multiplicity = 1;
    validate(simple);
    std::uint64_t n = 0;
    for (int order = simple.min_vertices; order <= simple.max_vertices && !r.counterexample; ++order)
        for (const Shape& s : shapes(simple, order)) {
            const SignedGraph h = s.support();
            const SignedGraph d = double_graph(h);
            ++n;
            const int chi = underlying_chromatic_number(h);
            const int chi_pm = signed_chromatic_number(d);
            if (chi_pm != 2 * chi - 1) {
                r.counterexample = violation(d, "chi_pm(2H) = 2 chi(H) - 1 fails", {kv("chi(H)", chi), kv("chi_pm(2H)", chi_pm)});
                break;
            }
        }
    r.instances = n;
}

void suite_eq1(Runner& run) {
    int chi_under = 0;
    run.run(
        [&](const SignedGraph& g) -> std::optional<Counterexample> {
            const int chi = signed_chromatic_number(g);
            if (chi > 2 * chi_under - 1)
                return violation(g, "chi_pm <= 2 chi(underlying) - 1 fails", {kv("chi_pm", chi), kv("chi(underlying)", chi_under)});
            return std::nullopt;
        },
        [&](const Shape& s) {
            chi_under = underlying_chromatic_number(s.support());
            return true;
        });
}

void suite_line_graph(Runner& run) {
    VerificationReport& r = run.report;
    std::uint64_t simple = 0;
    run.run([&](const SignedGraph& g) -> std::optional<Counterexample> {
        const SignedGraph l = signed_line_graph(g);
        if (l.vertex_count() > 0) {
            const BalanceResult b = is_balanced(l);
            if (!b.balanced) return violation(g, "line graph is not balanced");
            const Sign first = g.edge(0).sign;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (b.parts->x.contains(e) != (g.edge(e).sign == first))
                    return violation(g, "line graph parts differ from the positive and negative edge sets");
        }
        if (g.is_simple()) {
            ++simple;
            const int chi = signed_chromatic_number(l);
            const int delta = g.max_degree();
            if (chi < delta || chi > delta + 1)
                return violation(g, "max_degree <= chi_pm(line graph) <= max_degree + 1 fails",
                                 {kv("chi_pm(L)", chi), kv("max_degree", delta)});
        }
        return std::nullopt;
    });
    r.findings.push_back("simple graphs with the edge-coloring check: " + std::to_string(simple));
}

struct SuiteInfo {
    std::string statement;
    void (*body)(Runner&);
};

const std::map<std::string, SuiteInfo>& registry() {
    static const std::map<std::string, SuiteInfo> r{
        {"S1", {"chi_pm <= col <= max_degree + 1; chi_pm <= choice number <= col within budget", suite_chain}},
        {"S2", {"chi_pm <= 2 iff antibalanced", suite_antibalance}},
        {"S3", {"connected non-bricks satisfy chi_pm <= max_degree; max_degree-assignments colorable within budget", suite_brooks}},
        {"S4", {"degree choosable iff some block is not a brick", suite_degree_choosability}},
        {"S5", {"constructed degree lists on all-brick graphs are uncolorable with the full pair structure", suite_pair_structure}},
        {"S6", {"3-critical iff balanced odd cycle or unbalanced even cycle", suite_three_critical}},
        {"S7", {"m(T) >= 2 on the Gallai class", suite_gallai}},
        {"S8", {"2|E| >= (k - 1 + (k - 3)/(k^2 - 3))|V| for simple k-critical graphs other than balanced K_k", suite_edge_bound}},
        {"S9", {"chi_pm(2H) = 2 chi(H) - 1 for simple H", suite_doubling}},
        {"S10", {"chi_pm <= 2 chi(underlying) - 1", suite_eq1}},
        {"S11", {"signed line graph is balanced with parts E+ and E-; edge-coloring bounds on simple graphs", suite_line_graph}},
    };
    return r;
}

}  // namespace

void check_suite_id(const std::string& suite) {
    if (!registry().count(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<std::string> suite_ids() {
    std::vector<std::string> ids;
    for (int i = 1; i <= static_cast<int>(registry().size()); ++i) ids.push_back("S" + std::to_string(i));
    return ids;
}

SuiteOptions default_options(const std::string& suite) {
    check_suite_id(suite);
    SuiteOptions o;
    o.spec.max_vertices = 6;
    o.spec.max_multiplicity = 2;
    if (suite == "S2" || suite == "S3" || suite == "S11") o.spec.max_vertices = 5;
    if (suite == "S4") o.spec.max_vertices = 4;
    if (suite == "S7") o.spec.max_multiplicity = 1;
    if (suite == "S8") {
        o.spec.max_vertices = 7;
        o.spec.max_multiplicity = 1;
    }
    if (suite == "S9") o.spec.max_multiplicity = 1;
    return o;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& options) {
    check_suite_id(suite);
    validate(options.spec);
    if (suite == "S7" || suite == "S8") {
        if (options.k < 4) throw std::invalid_argument("k must be at least 4");
    }
    const SuiteInfo& info = registry().at(suite);
    VerificationReport r;
    r.suite = suite;
    r.statement = info.statement;
    r.options = options;
    Runner runner{suite, options, r};
    const auto t0 = std::chrono::steady_clock::now();
    info.body(runner);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string describe(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (is_brick(g)) return classify_brick(g).name();
    if (is_cycle(g)) return cycle_name(g);
    int neg = 0;
    for (const Edge& e : g.edges()) neg += e.sign == Sign::negative;
    return "graph with " + std::to_string(n) + " vertices, " + std::to_string(g.edge_count()) + " edges (" +
           std::to_string(neg) + " negative)";
}

}  // namespace sgc
