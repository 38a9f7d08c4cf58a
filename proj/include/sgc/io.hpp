#ifndef SGC_IO_HPP
#define SGC_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgc/coloring.hpp"
#include "sgc/graph.hpp"
#include "sgc/list_coloring.hpp"
#include "sgc/structure.hpp"
#include "sgc/suites.hpp"

namespace sgc {

/// Text format, one directive per line:
///   # comment            (also allowed after a directive)
///   name <text>          optional, before the header
///   n <vertex count>     header, exactly once
///   e <u> <v> <sign>     sign is + - +1 or -1
/// List lines ("l ...") are skipped here and graph lines are skipped by
/// parse_lists, so a certificate file can be read by both.
struct GraphDocument {
    SignedGraph graph;
    std::optional<std::string> name;
    std::vector<std::string> comments;  // full-line comments, without the "# "
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

GraphDocument parse_graph(const std::string& text);
std::string write_graph(const GraphDocument& doc);
std::string write_graph(const SignedGraph& g);

/// Lines "l <v> <c1> <c2> ..." covering every vertex once.
ListAssignment parse_lists(const std::string& text, const SignedGraph& g);
std::string write_lists(const ListAssignment& l);

/// Lines "c <v> <color>".
std::string write_coloring(const SignedColoring& phi);

/// Graph text followed by "# violation: ...", detail comments and lists.
std::string write_certificate(const Counterexample& c);

/// Throws std::runtime_error when the file cannot be read.
std::string read_file(const std::string& path);

nlohmann::json graph_json(const SignedGraph& g);
nlohmann::json lists_json(const ListAssignment& l);
nlohmann::json report_json(const VerificationReport& r);

/// Deterministic text rendering of a report; wall time is left out.
std::string report_text(const VerificationReport& r);

}  // namespace sgc

#endif  // SGC_IO_HPP
