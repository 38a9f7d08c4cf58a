// Acceptance battery: one PASS/FAIL line per criterion. Arguments select a
// subset by number; no arguments runs all twelve.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "sgc/bounds.hpp"
#include "sgc/coloring.hpp"
#include "sgc/enumeration.hpp"
#include "sgc/io.hpp"
#include "sgc/structure.hpp"
#include "sgc/suites.hpp"

using namespace sgc;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitDoubling = 1;
constexpr double kLimitBricks = 10;
constexpr double kLimitAntibalance = 120;
constexpr double kLimitBrooks = 120;
constexpr double kLimitBrooksList = 300;
constexpr double kLimitChoosability = 900;
constexpr double kLimitPairs = 300;
constexpr double kLimitCensus = 300;
constexpr double kLimitGallai = 300;
constexpr double kLimitEdgeBound = 1200;
constexpr double kLimitChain = 300;
constexpr double kLimitLineGraph = 120;
constexpr double kLimitDeterminism = 300;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
};

SignedGraph complete(int n) {
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.push_back({a, b, Sign::positive});
    return SignedGraph(n, es);
}

SignedGraph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, Sign::positive});
    return SignedGraph(n, es);
}

bool has_finding(const VerificationReport& r, const std::string& text) {
    return std::find(r.findings.begin(), r.findings.end(), text) != r.findings.end();
}

void suite_passes(Outcome& o, const std::string& id) {
    const VerificationReport r = run_suite(id);
    o.require(r.passed(), id + " found a counterexample: " +
                              (r.counterexample ? r.counterexample->violation : std::string()));
    o.notes.push_back(id + ": " + std::to_string(r.instances) + " instances");
    for (const std::string& f : r.findings) o.notes.push_back("  " + f);
}

Outcome doubling() {
    Outcome o;
    for (int n = 2; n <= 4; ++n)
        o.require(signed_chromatic_number(double_graph(complete(n))) == 2 * n - 1, "chi(2K_" + std::to_string(n) + ")");
    o.require(signed_chromatic_number(double_graph(cycle(5))) == 5, "chi(2C_5) = 5");
    return o;
}

Outcome brick_criticality() {
    Outcome o;
    EnumSpec spec;
    spec.max_vertices = 6;
    std::map<std::string, int> found;
    enumerate(
        spec,
        [&](const SignedGraph& g) {
            if (!is_brick(g)) return true;
            const int r = classify_brick(g).degree();
            const std::string name = classify_brick(g).name();
            ++found[name];
            o.require(signed_chromatic_number(g) == r + 1, "chi of " + name);
            o.require(is_k_critical(g, r + 1), name + " is critical");
            return true;
        },
        [](const Shape& s) {
            const int d = s.degree(0, Equivalence::switching_isomorphism);
            for (int v = 1; v < s.vertex_count(); ++v)
                if (s.degree(v, Equivalence::switching_isomorphism) != d) return false;
            return true;
        });
    const std::set<std::string> expected{"balanced K_1", "balanced K_2", "balanced K_3", "balanced K_4", "balanced K_5",
                                         "balanced K_6", "balanced C_5", "unbalanced C_4", "unbalanced C_6", "2K_2",
                                         "2K_3",         "2K_4",         "2K_5",         "2K_6",         "2C_5"};
    std::set<std::string> names;
    for (const auto& [name, count] : found) {
        names.insert(name);
        o.require(count == 1, name + " appears once");
    }
    o.require(names == expected, "brick catalog on at most 6 vertices");
    o.notes.push_back(std::to_string(names.size()) + " bricks, each with chi = degree + 1 and critical");
    return o;
}

Outcome antibalance() {
    Outcome o;
    suite_passes(o, "S2");
    return o;
}

Outcome brooks() {
    Outcome o;
    const VerificationReport r = run_suite("S3");
    o.require(r.passed(), "S3");
    o.require(r.options.list_max_vertices >= 3 && r.budget_checked > 0, "list clause ran on graphs with n <= 3");
    o.require(r.seconds <= kLimitBrooks, "S3 within its limit");
    o.notes.push_back("S3: " + std::to_string(r.instances) + " instances");
    for (const std::string& f : r.findings) o.notes.push_back("  " + f);
    return o;
}

Outcome choosability() {
    Outcome o;
    suite_passes(o, "S4");
    return o;
}

Outcome pairs() {
    Outcome o;
    suite_passes(o, "S5");
    return o;
}

Outcome census() {
    Outcome o;
    const VerificationReport r = run_suite("S6");
    o.require(r.passed(), "S6");
    std::set<std::string> names;
    for (const SignedGraph& g : r.witnesses) {
        const BrickClass c = classify_brick(g);
        const bool odd_balanced = c.kind == BrickKind::balanced_odd_cycle ||
                                  (c.kind == BrickKind::balanced_complete && c.order == 3);
        // 2K_2 is the unbalanced cycle of length two
        const bool even_unbalanced = c.kind == BrickKind::unbalanced_even_cycle ||
                                     (c.kind == BrickKind::doubled_complete && c.order == 2);
        o.require(odd_balanced || even_unbalanced, describe(g) + " is a cycle of the right parity and balance");
        names.insert(describe(g));
    }
    o.require(names == std::set<std::string>{"2K_2", "balanced K_3", "unbalanced C_4", "balanced C_5", "unbalanced C_6"},
              "3-critical set for n <= 6, multiplicity <= 2");

    SuiteOptions simple = default_options("S6");
    simple.spec.max_multiplicity = 1;
    const VerificationReport s = run_suite("S6", simple);
    std::set<std::string> simple_names;
    for (const SignedGraph& g : s.witnesses) simple_names.insert(describe(g));
    o.require(simple_names == std::set<std::string>{"balanced K_3", "unbalanced C_4", "balanced C_5", "unbalanced C_6"},
              "3-critical set for n <= 6, multiplicity 1");
    for (const std::string& f : r.findings) o.notes.push_back(f);
    return o;
}

Outcome gallai() {
    Outcome o;
    for (int k : {4, 5}) {
        SuiteOptions opt = default_options("S7");
        opt.k = k;
        const VerificationReport r = run_suite("S7", opt);
        const std::string kk = "balanced K_" + std::to_string(k - 1);
        o.require(r.passed(), "S7 with k = " + std::to_string(k));
        o.require(has_finding(r, "least m = 2"), "least m is 2 for k = " + std::to_string(k));
        o.require(has_finding(r, "attained by " + kk), "equality attained by " + kk);
        o.require(gallai_deficiency(complete(k - 1), k) == Rational(2), "m(" + kk + ") = 2");
        o.notes.push_back("k = " + std::to_string(k) + ":");
        for (const std::string& f : r.findings) o.notes.push_back("  " + f);
    }
    return o;
}

Outcome edge_bound() {
    Outcome o;
    suite_passes(o, "S8");
    std::vector<Edge> es = cycle(5).edges();
    for (int i = 0; i < 5; ++i) es.push_back({5, i, Sign::positive});
    const SignedGraph w5(6, es);
    o.require(is_k_critical(w5, 4), "W_5 is 4-critical");
    const EdgeBound b = edge_bound_check(w5, 4);
    o.require(b.holds && b.lhs == 20 && b.rhs == Rational(240, 13), "W_5: 20 >= 240/13");
    o.notes.push_back("W_5: 2|E| = " + std::to_string(b.lhs) + ", bound " + b.rhs.str());
    return o;
}

Outcome chain() {
    Outcome o;
    suite_passes(o, "S1");
    suite_passes(o, "S10");
    return o;
}

Outcome line_graph() {
    Outcome o;
    suite_passes(o, "S11");
    return o;
}

Outcome determinism() {
    Outcome o;
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(SGC_FIXTURE_DIR)) {
        if (entry.path().extension() != ".sg") continue;
        const std::string text = read_file(entry.path().string());
        o.require(write_graph(parse_graph(text)) == text, "round trip of " + entry.path().filename().string());
        ++files;
    }
    o.require(files > 0, "fixture corpus present");
    for (const std::string id : {"S2", "S6", "S8"}) {
        const VerificationReport a = run_suite(id), b = run_suite(id);
        o.require(report_text(a) == report_text(b), id + " text reports identical");
        o.require(report_json(a).dump() == report_json(b).dump(), id + " JSON reports identical");
    }
    o.notes.push_back(std::to_string(files) + " fixtures round-tripped; S2, S6, S8 reports repeated identically");
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "doubling identity", kLimitDoubling, doubling},
        {2, "brick criticality", kLimitBricks, brick_criticality},
        {3, "antibalance characterization", kLimitAntibalance, antibalance},
        {4, "Brooks bound and list version", kLimitBrooksList, brooks},
        {5, "degree choosability", kLimitChoosability, choosability},
        {6, "uncolorable pair calculus", kLimitPairs, pairs},
        {7, "3-critical census", kLimitCensus, census},
        {8, "Gallai bound", kLimitGallai, gallai},
        {9, "edge bound", kLimitEdgeBound, edge_bound},
        {10, "chain and doubling inequality", kLimitChain, chain},
        {11, "line graph", kLimitLineGraph, line_graph},
        {12, "determinism and round trip", kLimitDeterminism, determinism},
    };
    std::set<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));

    bool verbose = std::getenv("SGC_ACCEPTANCE_VERBOSE") != nullptr;
    int failed = 0;
    for (const Criterion& c : all) {
        if (!chosen.empty() && !chosen.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit) {
            o.ok = false;
            o.notes.push_back("failed: time limit");
        }
        failed += !o.ok;
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title << "  (" << std::fixed
             << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit << " s)";
        std::cout << line.str() << std::endl;
        for (const std::string& n : o.notes)
            if (verbose || !o.ok || n.rfind("failed", 0) == 0) std::cout << "      " << n << "\n";
    }
    return failed == 0 ? 0 : 1;
}
