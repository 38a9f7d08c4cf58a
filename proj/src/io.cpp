#include "sgc/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace sgc {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::optional<std::string> comment;  // set for a full-line comment
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (raw[first] == '#') {
            std::string c = raw.substr(first + 1);
            if (!c.empty() && c.front() == ' ') c.erase(0, 1);
            out.push_back({number, {}, c});
            continue;
        }
        const auto hash = raw.find('#');
        std::istringstream words(raw.substr(0, hash));
        Line l{number, {}, std::nullopt};
        std::string w;
        while (words >> w) l.tokens.push_back(w);
        out.push_back(std::move(l));
    }
    return out;
}

std::optional<long long> to_integer(const std::string& s) {
    long long v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    if (b != e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e) return std::nullopt;
    return v;
}

int parse_int(const Line& l, const std::string& s, const std::string& what) {
    auto v = to_integer(s);
    if (!v || *v < INT32_MIN || *v > INT32_MAX) throw ParseError(l.number, what + " '" + s + "' is not an integer");
    return static_cast<int>(*v);
}

Sign parse_sign(const Line& l, const std::string& s) {
    if (s == "+" || s == "+1") return Sign::positive;
    if (s == "-" || s == "-1") return Sign::negative;
    throw ParseError(l.number, "bad sign token '" + s + "' (expected +, -, +1 or -1)");
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
    GraphDocument doc;
    std::optional<int> n;
    std::vector<Edge> edges;
    for (const Line& l : tokenize(text)) {
        if (l.comment) {
            doc.comments.push_back(*l.comment);
            continue;
        }
        const std::string& d = l.tokens.front();
        if (d == "name") {
            if (n) throw ParseError(l.number, "name must come before the header");
            if (doc.name) throw ParseError(l.number, "duplicate name");
            if (l.tokens.size() < 2) throw ParseError(l.number, "name needs a value");
            std::string name = l.tokens[1];
            for (std::size_t i = 2; i < l.tokens.size(); ++i) name += " " + l.tokens[i];
            doc.name = name;
        } else if (d == "n") {
            if (n) throw ParseError(l.number, "duplicate header");
            if (l.tokens.size() != 2) throw ParseError(l.number, "header must be 'n <vertex count>'");
            const int v = parse_int(l, l.tokens[1], "vertex count");
            if (v < 0) throw ParseError(l.number, "vertex count must be nonnegative");
            n = v;
        } else if (d == "e") {
            if (!n) throw ParseError(l.number, "edge before the 'n' header");
            if (l.tokens.size() != 4) throw ParseError(l.number, "edge must be 'e <u> <v> <sign>'");
            const int u = parse_int(l, l.tokens[1], "vertex");
            const int v = parse_int(l, l.tokens[2], "vertex");
            for (int x : {u, v})
                if (x < 0 || x >= *n)
                    throw ParseError(l.number, "vertex id " + std::to_string(x) + " out of range 0.." + std::to_string(*n - 1));
            if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
            edges.push_back({u, v, parse_sign(l, l.tokens[3])});
        } else if (d != "l") {
            throw ParseError(l.number, "unknown directive '" + d + "'");
        }
    }
    if (!n) throw ParseError(0, "missing 'n' header");
    doc.graph = SignedGraph(*n, std::move(edges));
    return doc;
}

std::string write_graph(const GraphDocument& doc) {
    std::ostringstream out;
    for (const std::string& c : doc.comments) out << "# " << c << "\n";
    if (doc.name) out << "name " << *doc.name << "\n";
    out << "n " << doc.graph.vertex_count() << "\n";
    for (const Edge& e : doc.graph.edges()) out << "e " << e.u << " " << e.v << " " << (e.sign == Sign::positive ? "+" : "-") << "\n";
    return out.str();
}

std::string write_graph(const SignedGraph& g) { return write_graph(GraphDocument{g, std::nullopt, {}}); }

ListAssignment parse_lists(const std::string& text, const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::optional<ColorSet>> seen(idx(n));
    for (const Line& l : tokenize(text)) {
        if (l.comment) continue;
        const std::string& d = l.tokens.front();
        if (d == "n" || d == "e" || d == "name") continue;
        if (d != "l") throw ParseError(l.number, "expected 'l <v> <colors...>'");
        if (l.tokens.size() < 2) throw ParseError(l.number, "list line needs a vertex");
        const int v = parse_int(l, l.tokens[1], "vertex");
        if (v < 0 || v >= n) throw ParseError(l.number, "vertex id " + std::to_string(v) + " out of range");
        if (seen[idx(v)]) throw ParseError(l.number, "duplicate list for vertex " + std::to_string(v));
        std::vector<int> colors;
        std::set<int> distinct;
        for (std::size_t i = 2; i < l.tokens.size(); ++i) {
            const int c = parse_int(l, l.tokens[i], "color");
            if (!distinct.insert(c).second) throw ParseError(l.number, "duplicate color " + std::to_string(c));
            colors.push_back(c);
        }
        seen[idx(v)] = ColorSet(std::move(colors));
    }
    ListAssignment out;
    for (Vertex v = 0; v < n; ++v) {
        if (!seen[idx(v)]) throw ParseError(0, "vertex " + std::to_string(v) + " uncovered");
        out.push_back(*seen[idx(v)]);
    }
    return out;
}

std::string write_lists(const ListAssignment& l) {
    std::ostringstream out;
    for (std::size_t v = 0; v < l.size(); ++v) {
        out << "l " << v;
        for (int c : l[v]) out << " " << c;
        out << "\n";
    }
    return out.str();
}

std::string write_coloring(const SignedColoring& phi) {
    std::ostringstream out;
    for (std::size_t v = 0; v < phi.size(); ++v) out << "c " << v << " " << phi[v] << "\n";
    return out.str();
}

std::string write_certificate(const Counterexample& c) {
    std::string out = write_graph(c.graph);
    out += "# violation: " + c.violation + "\n";
    for (const std::string& d : c.details) out += "# " + d + "\n";
    if (c.lists) out += write_lists(*c.lists);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

nlohmann::json graph_json(const SignedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, value(e.sign)});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

nlohmann::json lists_json(const ListAssignment& l) {
    nlohmann::json out = nlohmann::json::array();
    for (const ColorSet& c : l) out.push_back(c.colors());
    return out;
}

nlohmann::json report_json(const VerificationReport& r) {
    const EnumSpec& s = r.options.spec;
    nlohmann::json j{
        {"suite", r.suite},
        {"statement", r.statement},
        {"spec",
         {{"min_vertices", s.min_vertices},
          {"max_vertices", s.max_vertices},
          {"max_multiplicity", s.max_multiplicity},
          {"connected_only", s.connected_only},
          {"modulo", to_string(s.modulo)}}},
        {"instances", r.instances},
        {"status", r.passed() ? "pass" : "counterexample"},
        {"findings", r.findings},
    };
    if (s.degree_cap) j["spec"]["degree_cap"] = *s.degree_cap;
    if (r.suite == "S7" || r.suite == "S8") j["k"] = r.options.k;
    j["budget"] = r.options.budget;
    j["budget_checked"] = r.budget_checked;
    j["budget_skipped"] = r.budget_skipped;
    if (r.counterexample) {
        const Counterexample& c = *r.counterexample;
        j["counterexample"] = {{"graph", graph_json(c.graph)}, {"violation", c.violation}, {"details", c.details},
                               {"certificate", write_certificate(c)}};
        if (c.lists) j["counterexample"]["lists"] = lists_json(*c.lists);
    }
    return j;
}

std::string report_text(const VerificationReport& r) {
    const EnumSpec& s = r.options.spec;
    std::ostringstream out;
    out << "suite " << r.suite << ": " << r.statement << "\n";
    out << "universe: n " << s.min_vertices << ".." << s.max_vertices << ", multiplicity <= " << s.max_multiplicity
        << ", " << (s.connected_only ? "connected" : "all") << ", modulo " << to_string(s.modulo);
    if (s.degree_cap) out << ", degree <= " << *s.degree_cap;
    if (r.suite == "S7" || r.suite == "S8") out << ", k = " << r.options.k;
    out << "\n";
    out << "instances: " << r.instances << "\n";
    for (const std::string& f : r.findings) out << f << "\n";
    out << "status: " << (r.passed() ? "pass" : "counterexample") << "\n";
    if (r.counterexample) out << write_certificate(*r.counterexample);
    return out.str();
}

}  // namespace sgc
