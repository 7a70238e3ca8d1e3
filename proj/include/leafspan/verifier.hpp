#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leafspan/constructions.hpp"
#include "leafspan/cycles.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/invariants.hpp"
#include "leafspan/leaf_number.hpp"

namespace leafspan {

// Off-cycle part size beyond which longest-cycle structure checks are
// refused instead of risking an unbounded path search.
constexpr int cycle_properties_off_budget = 16;

// Memoized invariant bundle for one graph. Accessors compute on first use;
// budget-limited fields throw budget_error instead of guessing.
class InvariantReport {
public:
    explicit InvariantReport(Graph g);

    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }
    long size() const { return graph_.size(); }
    int min_degree();
    int max_degree();
    const std::vector<int>& sorted_degrees();
    bool connected();
    int kappa();
    bool two_connected();
    int alpha();
    std::optional<int> sigma3();          // absent when alpha < 3
    std::optional<int> leaf();            // absent for n = 1 or disconnected input
    int circumference();
    int path_order();
    bool hamiltonian();
    bool traceable();
    bool triangle_free();
    std::optional<int> regular();
    bool family_member();                 // throws budget_error above order 16
    bool cycle_properties_ok();           // throws budget_error on oversized off-cycle part

    const LeafNumberResult* leaf_result();
    const CircumferenceResult& circumference_result();
    const LongestPathResult& path_result();
    const ConnectivityResult& connectivity_result();
    const IndependenceResult& independence_result();
    const MembershipResult& membership_result();
    const LongestCycleProperties& cycle_properties();

    // Canonical graph6 line when the order permits, raw encoding otherwise.
    const std::string& graph6_id();

    // Overrides for testing rule logic with synthetic invariant values that
    // no real graph needs to realize.
    struct Perturb {
        std::optional<int> min_degree, max_degree, kappa, alpha, circumference, path_order;
        std::optional<std::optional<int>> sigma3, leaf, regular;
        std::optional<bool> connected, two_connected, hamiltonian, traceable, triangle_free;
        std::optional<bool> family_member, cycle_properties_ok;
        std::optional<std::vector<int>> sorted_degrees;
    };
    void perturb(const Perturb& p);

    // JSON object for this report; witnesses included on demand.
    // Budget-limited fields appear as {"error": reason}.
    std::string to_json(bool include_witnesses = false);

private:
    void fill_profile();

    Graph graph_;
    std::optional<int> min_degree_, max_degree_, kappa_, alpha_, circumference_, path_order_;
    std::optional<std::optional<int>> sigma3_, leaf_, regular_;
    std::optional<bool> connected_, two_connected_, hamiltonian_, traceable_, triangle_free_;
    std::optional<bool> family_member_, cycle_properties_ok_;
    std::optional<std::vector<int>> sorted_degrees_;
    std::optional<LeafNumberResult> leaf_result_;
    std::optional<CircumferenceResult> circ_result_;
    std::optional<LongestPathResult> path_result_;
    std::optional<ConnectivityResult> conn_result_;
    std::optional<IndependenceResult> indep_result_;
    std::optional<MembershipResult> membership_;
    std::optional<LongestCycleProperties> cycle_props_;
    std::optional<std::string> graph6_id_;
};

InvariantReport invariant_report(const Graph& g);

enum class RuleStatus { vacuous, pass, counterexample, budget_skipped };

const char* to_string(RuleStatus s);

struct Rule {
    std::string id;
    // Diagnostic rules are expected to find counterexamples and never affect
    // suite exit status.
    bool diagnostic = false;
    // Returns a reason when the statement explicitly excepts this graph.
    std::function<std::optional<std::string>(InvariantReport&)> exception;
    std::function<bool(InvariantReport&)> premise;
    std::function<bool(InvariantReport&)> conclusion;
    std::function<std::string(InvariantReport&)> detail;
};

// All rules in fixed order: thm1, thm2, thm3cor, thm4, relaxed-thm4, thm11,
// thm13, lem5..lem10, lem12, lem14, lem15, lem16a, lem16b, lem17.
const std::vector<Rule>& all_rules();

// Subset selection by comma-separated ids; "all" selects everything.
// Throws domain_error on unknown ids.
std::vector<Rule> select_rules(const std::string& spec);

struct RuleOutcome {
    std::string graph6;
    std::string rule_id;
    RuleStatus status = RuleStatus::vacuous;
    std::string detail;  // filled for counterexamples and budget skips
};

RuleOutcome evaluate_rule(InvariantReport& report, const Rule& rule);

struct Counterexample {
    std::string graph6;
    std::string detail;
};

struct RuleReport {
    std::string id;
    bool diagnostic = false;
    long vacuous = 0;
    long pass = 0;
    long budget_skipped = 0;
    std::vector<Counterexample> counterexamples;
};

struct SuiteReport {
    std::string corpus;
    std::vector<RuleReport> rules;
    long elapsed_ms = 0;

    // Counterexamples on any non-diagnostic rule.
    bool failed() const;
    long budget_skips() const;
    std::string to_json() const;
    std::string to_tsv() const;
};

// Pulls graphs from `next` until it returns nullopt and evaluates every rule
// on each graph. The report is identical for any worker count: counts merge
// commutatively and counterexamples are sorted by graph6 then detail.
SuiteReport run_suite(const std::function<std::optional<Graph>()>& next, const std::vector<Rule>& rules,
                      int jobs, const std::string& corpus_name);

SuiteReport run_suite(const std::vector<Graph>& corpus, const std::vector<Rule>& rules, int jobs,
                      const std::string& corpus_name);

}  // namespace leafspan
