#ifndef SGC_SUITES_HPP
#define SGC_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgc/enumeration.hpp"
#include "sgc/list_coloring.hpp"

namespace sgc {

struct SuiteOptions {
    EnumSpec spec;
    int k = 4;             // S7, S8
    int budget = 12;       // list-oracle budget on the total list size
    int list_max_vertices = 3;  // S1 and S3 list clauses
};

/// "S1" .. "S11"; throws std::invalid_argument for anything else.
void check_suite_id(const std::string& suite);
std::vector<std::string> suite_ids();

/// The options each suite runs with when nothing is overridden.
SuiteOptions default_options(const std::string& suite);

struct Counterexample {
    SignedGraph graph;
    std::string violation;
    std::optional<ListAssignment> lists;
    std::vector<std::string> details;
};

struct VerificationReport {
    std::string suite;
    std::string statement;
    SuiteOptions options;
    std::uint64_t instances = 0;
    std::uint64_t budget_checked = 0;  // instances where a budgeted clause ran
    std::uint64_t budget_skipped = 0;  // instances where it was over budget
    std::optional<Counterexample> counterexample;
    std::vector<std::string> findings;  // suite-specific summary lines
    std::vector<SignedGraph> witnesses;  // e.g. the critical graphs of S6
    double seconds = 0;                  // wall time; not part of the reproducible output

    bool passed() const { return !counterexample.has_value(); }
};

VerificationReport run_suite(const std::string& suite, const SuiteOptions& options);
inline VerificationReport run_suite(const std::string& suite) { return run_suite(suite, default_options(suite)); }

/// Short human name for a cycle or other small graph, e.g. "balanced C_5".
std::string describe(const SignedGraph& g);

}  // namespace sgc

#endif  // SGC_SUITES_HPP
