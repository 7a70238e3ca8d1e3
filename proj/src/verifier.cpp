#include "leafspan/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "leafspan/enumeration.hpp"
#include "leafspan/errors.hpp"

namespace leafspan {

InvariantReport::InvariantReport(Graph g) : graph_(std::move(g)) {}

int InvariantReport::min_degree() {
    if (!min_degree_) fill_profile();
    return *min_degree_;
}

int InvariantReport::max_degree() {
    if (!max_degree_) fill_profile();
    return *max_degree_;
}

const std::vector<int>& InvariantReport::sorted_degrees() {
    if (!sorted_degrees_) fill_profile();
    return *sorted_degrees_;
}

bool InvariantReport::connected() {
    if (!connected_) fill_profile();
    return *connected_;
}

void InvariantReport::fill_profile() {
    const DegreeProfile p = degree_profile(graph_);
    if (!min_degree_) min_degree_ = p.min_degree;
    if (!max_degree_) max_degree_ = p.max_degree;
    if (!sorted_degrees_) sorted_degrees_ = p.sorted_degrees;
    if (!connected_) connected_ = p.connected;
}

const ConnectivityResult& InvariantReport::connectivity_result() {
    if (!conn_result_) conn_result_ = vertex_connectivity(graph_);
    return *conn_result_;
}

int InvariantReport::kappa() {
    if (!kappa_) kappa_ = connectivity_result().kappa;
    return *kappa_;
}

bool InvariantReport::two_connected() {
    if (!two_connected_) two_connected_ = order() >= 3 && kappa() >= 2;
    return *two_connected_;
}

const IndependenceResult& InvariantReport::independence_result() {
    if (!indep_result_) indep_result_ = independence(graph_);
    return *indep_result_;
}

int InvariantReport::alpha() {
    if (!alpha_) alpha_ = independence_result().alpha;
    return *alpha_;
}

std::optional<int> InvariantReport::sigma3() {
    if (!sigma3_) sigma3_ = independence_result().sigma_k(3);
    return *sigma3_;
}

const LeafNumberResult* InvariantReport::leaf_result() {
    if (!leaf().has_value()) return nullptr;
    return &*leaf_result_;
}

std::optional<int> InvariantReport::leaf() {
    if (!leaf_) {
        if (order() < 2 || !connected()) {
            leaf_ = std::optional<int>{};
        } else {
            leaf_result_ = leaf_number(graph_);
            leaf_ = leaf_result_->leaf_number;
        }
    }
    return *leaf_;
}

const CircumferenceResult& InvariantReport::circumference_result() {
    if (!circ_result_) circ_result_ = leafspan::circumference(graph_);
    return *circ_result_;
}

int InvariantReport::circumference() {
    if (!circumference_) circumference_ = circumference_result().length;
    return *circumference_;
}

const LongestPathResult& InvariantReport::path_result() {
    if (!path_result_) path_result_ = longest_path(graph_);
    return *path_result_;
}

int InvariantReport::path_order() {
    if (!path_order_) path_order_ = path_result().order;
    return *path_order_;
}

bool InvariantReport::hamiltonian() {
    if (!hamiltonian_) hamiltonian_ = order() >= 3 && circumference() == order();
    return *hamiltonian_;
}

bool InvariantReport::traceable() {
    if (!traceable_) traceable_ = path_order() == order();
    return *traceable_;
}

bool InvariantReport::triangle_free() {
    if (!triangle_free_) triangle_free_ = is_triangle_free(graph_);
    return *triangle_free_;
}

std::optional<int> InvariantReport::regular() {
    if (!regular_) regular_ = regularity(graph_);
    return *regular_;
}

const MembershipResult& InvariantReport::membership_result() {
    if (!membership_) membership_ = is_in_family_F(graph_);
    return *membership_;
}

bool InvariantReport::family_member() {
    if (!family_member_) family_member_ = membership_result().member;
    return *family_member_;
}

const LongestCycleProperties& InvariantReport::cycle_properties() {
    if (!cycle_props_) {
        const CircumferenceResult& c = circumference_result();
        if (c.acyclic()) throw domain_error("cycle properties need a cyclic graph");
        if (order() - c.length > cycle_properties_off_budget)
            throw budget_error("off-cycle part of " + std::to_string(order() - c.length) +
                               " vertices exceeds budget " + std::to_string(cycle_properties_off_budget));
        cycle_props_ = longest_cycle_properties(graph_, *c.witness);
    }
    return *cycle_props_;
}

bool InvariantReport::cycle_properties_ok() {
    if (!cycle_properties_ok_) cycle_properties_ok_ = cycle_properties().all();
    return *cycle_properties_ok_;
}

const std::string& InvariantReport::graph6_id() {
    if (!graph6_id_) {
        graph6_id_ = order() <= canonical_form_max_order ? canonical_form(graph_).bytes
                                                         : write_graph6(graph_);
    }
    return *graph6_id_;
}

void InvariantReport::perturb(const Perturb& p) {
    if (p.min_degree) min_degree_ = p.min_degree;
    if (p.max_degree) max_degree_ = p.max_degree;
    if (p.kappa) kappa_ = p.kappa;
    if (p.alpha) alpha_ = p.alpha;
    if (p.circumference) circumference_ = p.circumference;
    if (p.path_order) path_order_ = p.path_order;
    if (p.sigma3) sigma3_ = p.sigma3;
    if (p.leaf) leaf_ = p.leaf;
    if (p.regular) regular_ = p.regular;
    if (p.connected) connected_ = p.connected;
    if (p.two_connected) two_connected_ = p.two_connected;
    if (p.hamiltonian) hamiltonian_ = p.hamiltonian;
    if (p.traceable) traceable_ = p.traceable;
    if (p.triangle_free) triangle_free_ = p.triangle_free;
    if (p.family_member) family_member_ = p.family_member;
    if (p.cycle_properties_ok) cycle_properties_ok_ = p.cycle_properties_ok;
    if (p.sorted_degrees) sorted_degrees_ = p.sorted_degrees;
}

namespace {

nlohmann::json vertex_array(const VertexSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : s.to_vector()) a.push_back(v);
    return a;
}

}  // namespace

std::string InvariantReport::to_json(bool include_witnesses) {
    nlohmann::json j;
    j["graph6"] = write_graph6(graph_);
    j["n"] = order();
    j["size"] = size();
    j["min_degree"] = min_degree();
    j["max_degree"] = max_degree();
    j["connected"] = connected();
    j["kappa"] = kappa();
    j["two_connected"] = two_connected();
    j["alpha"] = alpha();
    if (sigma3())
        j["sigma3"] = *sigma3();
    else
        j["sigma3"] = nullptr;
    if (leaf())
        j["leaf"] = *leaf();
    else
        j["leaf"] = nullptr;
    j["circumference"] = circumference();
    j["path"] = path_order();
    j["hamiltonian"] = hamiltonian();
    j["traceable"] = traceable();
    j["triangle_free"] = triangle_free();
    if (regular())
        j["regular"] = *regular();
    else
        j["regular"] = nullptr;
    try {
        const MembershipResult& m = membership_result();
        j["family"]["member"] = m.member;
        if (m.subclass) j["family"]["subclass"] = to_string(*m.subclass);
    } catch (const budget_error& e) {
        j["family"]["error"] = e.what();
    }
    if (include_witnesses) {
        j["witness"]["min_cut"] = vertex_array(connectivity_result().min_cut);
        j["witness"]["independent_set"] = vertex_array(independence_result().witness);
        if (const LeafNumberResult* lr = leaf_result()) {
            j["witness"]["cds"] = vertex_array(lr->cds);
            j["witness"]["tree"]["root"] = lr->witness.root;
            j["witness"]["tree"]["parent"] = lr->witness.parent;
        }
        if (!circumference_result().acyclic())
            j["witness"]["cycle"] = circumference_result().witness->vertices;
        j["witness"]["path"] = path_result().witness.vertices;
    }
    return j.dump();
}

InvariantReport invariant_report(const Graph& g) { return InvariantReport(g); }

const char* to_string(RuleStatus s) {
    switch (s) {
        case RuleStatus::vacuous: return "vacuous";
        case RuleStatus::pass: return "pass";
        case RuleStatus::counterexample: return "counterexample";
        case RuleStatus::budget_skipped: return "budget-skipped";
    }
    return "?";
}

namespace {

bool base_premise(InvariantReport& r) { return r.order() >= 2 && r.connected(); }

int leaf_of(InvariantReport& r) { return *r.leaf(); }

std::string detail_common(InvariantReport& r) {
    std::ostringstream os;
    os << "n=" << r.order() << " delta=" << r.min_degree();
    if (r.leaf()) os << " L=" << *r.leaf();
    os << " c=" << r.circumference() << " p=" << r.path_order();
    return os.str();
}

std::vector<Rule> build_rules() {
    std::vector<Rule> rules;

    const auto common = [](InvariantReport& r) { return detail_common(r); };

    rules.push_back({"thm1", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && 2 * r.min_degree() >= leaf_of(r) + 2; },
                     [](InvariantReport& r) { return r.hamiltonian(); }, common});

    rules.push_back({"thm2", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && 2 * r.min_degree() >= leaf_of(r) + 1; },
                     [](InvariantReport& r) { return r.traceable(); }, common});

    rules.push_back({"thm3cor", false, nullptr,
                     [](InvariantReport& r) {
                         return base_premise(r) && r.triangle_free() && leaf_of(r) <= 2 * r.min_degree() - 2;
                     },
                     [](InvariantReport& r) { return r.hamiltonian(); }, common});

    rules.push_back({"thm4", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && leaf_of(r) <= 2 * r.min_degree() - 1; },
                     [](InvariantReport& r) { return r.circumference() >= r.order() - 1; }, common});

    rules.push_back({"relaxed-thm4", true, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && leaf_of(r) <= 2 * r.min_degree(); },
                     [](InvariantReport& r) { return r.circumference() >= r.order() - 1; }, common});

    rules.push_back({"thm11", false, nullptr,
                     [](InvariantReport& r) {
                         return base_premise(r) && r.order() <= 3 * r.min_degree() &&
                                leaf_of(r) <= 2 * r.min_degree() - 1;
                     },
                     [](InvariantReport& r) { return r.circumference() >= r.order() - 1; }, common});

    rules.push_back({"thm13", false, nullptr,
                     [](InvariantReport& r) {
                         return base_premise(r) && r.regular() && leaf_of(r) <= 2 * *r.regular() - 1;
                     },
                     [](InvariantReport& r) { return r.hamiltonian(); },
                     [](InvariantReport& r) {
                         std::ostringstream os;
                         os << "n=" << r.order() << " k=" << *r.regular() << " L=" << *r.leaf()
                            << " c=" << r.circumference();
                         return os.str();
                     }});

    rules.push_back({"lem5", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && leaf_of(r) <= 2 * r.min_degree() - 1; },
                     [](InvariantReport& r) {
                         return r.order() <= std::max(2 * r.min_degree() + 6, 3 * r.min_degree());
                     },
                     common});

    rules.push_back({"lem6", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && leaf_of(r) <= 2 * r.min_degree() - 1; },
                     [](InvariantReport& r) { return r.two_connected(); }, common});

    rules.push_back({"lem7", false,
                     [](InvariantReport& r) -> std::optional<std::string> {
                         if (r.order() == 2 && r.size() == 1) return "excepted: K2";
                         return std::nullopt;
                     },
                     [](InvariantReport& r) { return base_premise(r) && r.kappa() >= r.alpha(); },
                     [](InvariantReport& r) { return r.hamiltonian(); },
                     [](InvariantReport& r) {
                         std::ostringstream os;
                         os << "n=" << r.order() << " kappa=" << r.kappa() << " alpha=" << r.alpha()
                            << " c=" << r.circumference();
                         return os.str();
                     }});

    const auto sigma_detail = [](InvariantReport& r) {
        std::ostringstream os;
        os << "n=" << r.order() << " sigma3=" << (r.sigma3() ? std::to_string(*r.sigma3()) : "undef")
           << " c=" << r.circumference() << " p=" << r.path_order();
        return os.str();
    };

    rules.push_back({"lem8", false, nullptr,
                     [](InvariantReport& r) {
                         return base_premise(r) && r.two_connected() && r.sigma3() &&
                                *r.sigma3() >= r.order() + 2;
                     },
                     [](InvariantReport& r) { return r.circumference() >= r.path_order() - 1; }, sigma_detail});

    rules.push_back({"lem9", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && r.min_degree() == 2 && leaf_of(r) <= 3; },
                     [](InvariantReport& r) { return r.circumference() >= r.order() - 1; }, common});

    rules.push_back({"lem10", false, nullptr,
                     [](InvariantReport& r) {
                         return base_premise(r) && r.order() >= 3 && r.sigma3() && *r.sigma3() >= r.order();
                     },
                     [](InvariantReport& r) {
                         if (r.circumference() >= r.path_order() - 1) return true;
                         return r.family_member();
                     },
                     sigma_detail});

    rules.push_back({"lem12", false,
                     [](InvariantReport& r) -> std::optional<std::string> {
                         static const std::string p_form = canonical_form(petersen()).bytes;
                         static const std::string pt_form = canonical_form(petersen_triangle()).bytes;
                         if (r.order() == 10 && r.regular() == std::optional<int>{3} && r.graph6_id() == p_form)
                             return "excepted: Petersen";
                         if (r.order() == 12 && r.regular() == std::optional<int>{3} && r.graph6_id() == pt_form)
                             return "excepted: Petersen with a vertex replaced by a triangle";
                         return std::nullopt;
                     },
                     [](InvariantReport& r) {
                         return base_premise(r) && r.two_connected() && r.regular() && *r.regular() >= 3 &&
                                r.order() <= 3 * *r.regular() + 3;
                     },
                     [](InvariantReport& r) { return r.hamiltonian(); },
                     [](InvariantReport& r) {
                         std::ostringstream os;
                         os << "n=" << r.order() << " k=" << *r.regular() << " c=" << r.circumference();
                         return os.str();
                     }});

    rules.push_back({"lem14", false, nullptr,
                     [](InvariantReport& r) {
                         if (!base_premise(r) || r.min_degree() < 3) return false;
                         if (leaf_of(r) > 2 * r.min_degree() - 1) return false;
                         const auto& deg = r.sorted_degrees();
                         return std::find(deg.begin(), deg.end(), 2 * r.min_degree() - 1) != deg.end();
                     },
                     [](InvariantReport& r) { return r.order() <= 2 * r.min_degree() + 2; }, common});

    rules.push_back({"lem15", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && r.two_connected(); },
                     [](InvariantReport& r) {
                         return r.circumference() >= std::min(r.order(), 2 * r.min_degree());
                     },
                     common});

    rules.push_back({"lem16a", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && r.min_degree() >= 4; },
                     [](InvariantReport& r) { return 5 * leaf_of(r) >= 2 * r.order() + 8; }, common});

    rules.push_back({"lem16b", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && r.min_degree() >= 5; },
                     [](InvariantReport& r) { return 2 * leaf_of(r) >= r.order() + 4; }, common});

    rules.push_back({"lem17", false, nullptr,
                     [](InvariantReport& r) { return base_premise(r) && r.circumference() >= 3; },
                     [](InvariantReport& r) { return r.cycle_properties_ok(); },
                     [](InvariantReport& r) {
                         const LongestCycleProperties& p = r.cycle_properties();
                         std::ostringstream os;
                         os << "n=" << r.order() << " c=" << r.circumference()
                            << " consecutive=" << p.no_common_offcycle_neighbor
                            << " crossing=" << p.no_crossing_pair << " detour=" << p.detour_path_short;
                         return os.str();
                     }});

    return rules;
}

}  // namespace

const std::vector<Rule>& all_rules() {
    static const std::vector<Rule> rules = build_rules();
    return rules;
}

std::vector<Rule> select_rules(const std::string& spec) {
    if (spec == "all" || spec.empty()) return all_rules();
    std::vector<Rule> out;
    std::stringstream ss(spec);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (id.empty()) continue;
        const auto& rules = all_rules();
        const auto it = std::find_if(rules.begin(), rules.end(), [&id](const Rule& r) { return r.id == id; });
        if (it == rules.end()) throw domain_error("unknown rule id: " + id);
        out.push_back(*it);
    }
    if (out.empty()) throw domain_error("no rules selected");
    return out;
}

RuleOutcome evaluate_rule(InvariantReport& report, const Rule& rule) {
    RuleOutcome out;
    out.rule_id = rule.id;
    out.graph6 = report.graph6_id();
    try {
        if (rule.exception) {
            if (auto why = rule.exception(report)) {
                out.status = RuleStatus::vacuous;
                out.detail = *why;
                return out;
            }
        }
        if (!rule.premise(report)) {
            out.status = RuleStatus::vacuous;
            return out;
        }
        if (rule.conclusion(report)) {
            out.status = RuleStatus::pass;
            return out;
        }
        out.status = RuleStatus::counterexample;
        if (rule.detail) out.detail = rule.detail(report);
    } catch (const budget_error& e) {
        out.status = RuleStatus::budget_skipped;
        out.detail = e.what();
    }
    return out;
}

bool SuiteReport::failed() const {
    return std::any_of(rules.begin(), rules.end(),
                       [](const RuleReport& r) { return !r.diagnostic && !r.counterexamples.empty(); });
}

long SuiteReport::budget_skips() const {
    long total = 0;
    for (const RuleReport& r : rules) total += r.budget_skipped;
    return total;
}

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["corpus"] = corpus;
    j["elapsed_ms"] = elapsed_ms;
    j["rules"] = nlohmann::json::array();
    for (const RuleReport& r : rules) {
        nlohmann::json jr;
        jr["id"] = r.id;
        jr["diagnostic"] = r.diagnostic;
        jr["vacuous"] = r.vacuous;
        jr["pass"] = r.pass;
        jr["budget_skipped"] = r.budget_skipped;
        jr["counterexamples"] = nlohmann::json::array();
        for (const Counterexample& c : r.counterexamples)
            jr["counterexamples"].push_back({{"graph6", c.graph6}, {"detail", c.detail}});
        j["rules"].push_back(std::move(jr));
    }
    return j.dump(2);
}

std::string SuiteReport::to_tsv() const {
    std::ostringstream os;
    os << "rule\tvacuous\tpass\tcounterexamples\tbudget_skipped\n";
    for (const RuleReport& r : rules)
        os << r.id << '\t' << r.vacuous << '\t' << r.pass << '\t' << r.counterexamples.size() << '\t'
           << r.budget_skipped << '\n';
    return os.str();
}

SuiteReport run_suite(const std::function<std::optional<Graph>()>& next, const std::vector<Rule>& rules,
                      int jobs, const std::string& corpus_name) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.corpus = corpus_name;
    report.rules.resize(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
        report.rules[i].id = rules[i].id;
        report.rules[i].diagnostic = rules[i].diagnostic;
    }

    std::mutex source_mutex, merge_mutex;
    const int workers = std::max(1, jobs);

    const auto work = [&]() {
        std::vector<RuleReport> local(rules.size());
        while (true) {
            std::optional<Graph> g;
            {
                const std::lock_guard<std::mutex> lock(source_mutex);
                g = next();
            }
            if (!g) break;
            InvariantReport rep(*g);
            for (std::size_t i = 0; i < rules.size(); ++i) {
                const RuleOutcome out = evaluate_rule(rep, rules[i]);
                switch (out.status) {
                    case RuleStatus::vacuous: ++local[i].vacuous; break;
                    case RuleStatus::pass: ++local[i].pass; break;
                    case RuleStatus::budget_skipped: ++local[i].budget_skipped; break;
                    case RuleStatus::counterexample:
                        local[i].counterexamples.push_back({out.graph6, out.detail});
                        break;
                }
            }
        }
        const std::lock_guard<std::mutex> lock(merge_mutex);
        for (std::size_t i = 0; i < rules.size(); ++i) {
            report.rules[i].vacuous += local[i].vacuous;
            report.rules[i].pass += local[i].pass;
            report.rules[i].budget_skipped += local[i].budget_skipped;
            report.rules[i].counterexamples.insert(report.rules[i].counterexamples.end(),
                                                   local[i].counterexamples.begin(),
                                                   local[i].counterexamples.end());
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (RuleReport& r : report.rules)
        std::sort(r.counterexamples.begin(), r.counterexamples.end(),
                  [](const Counterexample& a, const Counterexample& b) {
                      return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.detail < b.detail;
                  });

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

SuiteReport run_suite(const std::vector<Graph>& corpus, const std::vector<Rule>& rules, int jobs,
                      const std::string& corpus_name) {
    std::size_t index = 0;
    return run_suite(
        [&corpus, &index]() -> std::optional<Graph> {
            if (index >= corpus.size()) return std::nullopt;
            return corpus[index++];
        },
        rules, jobs, corpus_name);
}

}  // namespace leafspan
