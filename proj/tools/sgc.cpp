#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgc/bounds.hpp"
#include "sgc/coloring.hpp"
#include "sgc/enumeration.hpp"
#include "sgc/io.hpp"
#include "sgc/list_coloring.hpp"
#include "sgc/structure.hpp"
#include "sgc/suites.hpp"

using namespace sgc;
using nlohmann::json;

namespace {

struct Output {
    bool as_json = false;
    json j = json::object();
    std::ostringstream text;

    void emit() const {
        if (as_json) std::cout << j.dump(2) << "\n";
        else std::cout << text.str();
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + std::to_string(vs[i]);
    return s + "}";
}

std::string lists_text(const ListAssignment& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + l[i].str();
    return s + ")";
}

GraphDocument load(const std::string& path) { return parse_graph(read_file(path)); }

void analyze(const SignedGraph& g, Output& out) {
    const int n = g.vertex_count();
    const BalanceResult bal = is_balanced(g);
    const BalanceResult anti = is_antibalanced(g);
    const ColoringNumber col = coloring_number(g);
    json& j = out.j;
    j["vertices"] = n;
    j["edges"] = g.edge_count();
    j["max_degree"] = n ? g.max_degree() : 0;
    j["min_degree"] = n ? g.min_degree() : 0;
    j["max_multiplicity"] = g.max_multiplicity();
    j["connected"] = g.is_connected();
    j["balanced"] = bal.balanced;
    if (bal.parts) j["balance_parts"] = {bal.parts->x.members(), bal.parts->y.members()};
    if (bal.cycle) j["unbalanced_cycle"] = bal.cycle->vertices;
    j["antibalanced"] = anti.balanced;
    j["col"] = col.col;

    std::ostringstream& t = out.text;
    t << "vertices: " << n << "\nedges: " << g.edge_count() << "\n";
    t << "max_degree: " << j["max_degree"] << "\nmin_degree: " << j["min_degree"] << "\n";
    t << "max_multiplicity: " << g.max_multiplicity() << "\n";
    t << "connected: " << yes_no(g.is_connected()) << "\n";
    t << "balanced: " << yes_no(bal.balanced);
    if (bal.parts) t << " X=" << vertex_list(bal.parts->x.members()) << " Y=" << vertex_list(bal.parts->y.members());
    if (bal.cycle) t << " negative cycle " << vertex_list(bal.cycle->vertices);
    t << "\nantibalanced: " << yes_no(anti.balanced) << "\n";
    t << "col: " << col.col << "\n";

    if (n > 0 && g.is_connected()) {
        const BrickCheck check = all_blocks_are_bricks(g);
        json blocks = json::array();
        t << "cut vertices: " << vertex_list(check.decomposition.cut_vertices.members()) << "\n";
        for (std::size_t b = 0; b < check.classes.size(); ++b) {
            const Block& blk = check.decomposition.blocks[b];
            blocks.push_back({{"vertices", blk.vertices}, {"edges", blk.edges}, {"class", check.classes[b].name()},
                              {"brick", check.classes[b].is_brick()}});
            t << "block " << b << ": vertices " << vertex_list(blk.vertices) << ", " << check.classes[b].name() << "\n";
        }
        j["cut_vertices"] = check.decomposition.cut_vertices.members();
        j["blocks"] = blocks;
        j["all_blocks_bricks"] = check.all_bricks;
        j["brick"] = is_brick(g);
        t << "brick: " << yes_no(is_brick(g)) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed graph coloring toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string file, lists_file, suite;
    auto* a = app.add_subcommand("analyze", "Balance, blocks, bricks and degree data");
    a->add_option("file", file)->required();
    auto* c = app.add_subcommand("chromatic", "Signed chromatic number with a witness");
    c->add_option("file", file)->required();
    auto* lc = app.add_subcommand("listcolor", "Color from given lists");
    lc->add_option("file", file)->required();
    lc->add_option("--lists", lists_file)->required();
    auto* ch = app.add_subcommand("choosable", "Degree choosability with a certificate");
    ch->add_option("file", file)->required();
    auto* bl = app.add_subcommand("badlists", "Uncolorable degree lists for an all-brick graph");
    bl->add_option("file", file)->required();
    auto* lg = app.add_subcommand("linegraph", "Signed line graph");
    lg->add_option("file", file)->required();

    auto* v = app.add_subcommand("verify", "Run a verification suite over enumerated graphs");
    std::optional<int> max_n, min_n, mu, k, budget, list_n, degree_cap;
    std::string modulo;
    v->add_option("suite", suite)->required();
    v->add_option("--max-n", max_n);
    v->add_option("--min-n", min_n);
    v->add_option("--mu", mu);
    v->add_option("--k", k);
    v->add_option("--budget", budget);
    v->add_option("--list-max-n", list_n);
    v->add_option("--degree-cap", degree_cap);
    v->add_option("--modulo", modulo)->check(CLI::IsMember({"iso", "switching"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Output out;
    out.as_json = format == "json";
    int status = 0;
    try {
        if (*a) {
            const GraphDocument doc = load(file);
            if (doc.name) out.j["name"] = *doc.name;
            analyze(doc.graph, out);
        } else if (*c) {
            const SignedGraph g = load(file).graph;
            const ChromaticResult r = signed_chromatic(g);
            out.j = {{"chi_pm", r.k}, {"coloring", r.coloring}, {"palette", ColorSet::z(r.k).colors()}};
            out.text << "chi_pm = " << r.k << "\n" << write_coloring(r.coloring);
        } else if (*lc) {
            const SignedGraph g = load(file).graph;
            const ListAssignment l = parse_lists(read_file(lists_file), g);
            const auto phi = solve_list_coloring(g, l);
            out.j = {{"colorable", phi.has_value()}};
            out.text << (phi ? "colorable" : "NOT colorable") << "\n";
            if (phi) {
                out.j["coloring"] = *phi;
                out.text << write_coloring(*phi);
            }
        } else if (*ch) {
            const SignedGraph g = load(file).graph;
            const DegreeChoosability d = is_degree_choosable(g);
            out.j = {{"degree_choosable", d.choosable}};
            if (d.choosable) {
                out.j["non_brick_block"] = d.non_brick_block.value_or(-1);
                out.j["reason"] = d.reason;
                out.text << "degree-choosable\nblock " << d.non_brick_block.value_or(-1) << " is not a brick: " << d.reason << "\n";
            } else {
                out.j["lists"] = lists_json(*d.bad_lists);
                out.j["lists_verified_uncolorable"] = d.bad_lists_verified;
                out.text << "NOT degree-choosable\nlists " << lists_text(*d.bad_lists) << "\n" << write_lists(*d.bad_lists);
            }
        } else if (*bl) {
            const SignedGraph g = load(file).graph;
            const ListAssignment l = build_uncolorable_assignment(g);
            out.j = {{"lists", lists_json(l)}, {"uncolorable", !is_list_colorable(g, l)}};
            out.text << write_lists(l);
        } else if (*lg) {
            const SignedGraph h = signed_line_graph(load(file).graph);
            out.j = graph_json(h);
            out.text << write_graph(h);
        } else if (*v) {
            check_suite_id(suite);
            SuiteOptions o = default_options(suite);
            if (max_n) o.spec.max_vertices = *max_n;
            if (min_n) o.spec.min_vertices = *min_n;
            if (mu) o.spec.max_multiplicity = *mu;
            if (k) o.k = *k;
            if (budget) o.budget = *budget;
            if (list_n) o.list_max_vertices = *list_n;
            if (degree_cap) o.spec.degree_cap = *degree_cap;
            if (!modulo.empty()) o.spec.modulo = parse_equivalence(modulo);
            const VerificationReport r = run_suite(suite, o);
            out.j = report_json(r);
            out.text << report_text(r);
            std::cerr << "wall time: " << r.seconds << " s\n";
            status = r.passed() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    out.emit();
    return status;
}
