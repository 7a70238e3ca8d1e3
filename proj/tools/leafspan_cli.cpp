#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leafspan/constructions.hpp"
#include "leafspan/enumeration.hpp"
#include "leafspan/errors.hpp"
#include "leafspan/graph.hpp"
#include "leafspan/verifier.hpp"

namespace {

using namespace leafspan;

int effective_enumeration_cap() {
    const char* env = std::getenv("LEAFSPAN_BUDGET_N");
    if (env == nullptr || *env == '\0') return default_enumeration_cap;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > max_enumeration_cap)
        throw domain_error("LEAFSPAN_BUDGET_N must be an integer in [1, " +
                           std::to_string(max_enumeration_cap) + "]");
    return static_cast<int>(v);
}

Graph named_graph(const std::string& name, std::optional<int> n) {
    const auto need_n = [&](int min) {
        if (!n) throw domain_error("--named " + name + " needs --n >= " + std::to_string(min));
        if (*n < min) throw domain_error("--named " + name + " needs n >= " + std::to_string(min));
        return *n;
    };
    const auto no_n = [&]() {
        if (n) throw domain_error("--n does not apply to --named " + name);
    };
    if (name == "petersen") {
        no_n();
        return petersen();
    }
    if (name == "petersen-triangle") {
        no_n();
        return petersen_triangle();
    }
    if (name == "g1") return sharpness_g1(need_n(5));
    if (name == "g2") return sharpness_g2(need_n(8));
    if (name == "cycle") return Graph::cycle(need_n(3));
    if (name == "complete") return Graph::complete(need_n(1));
    if (name == "path") return Graph::path(need_n(1));
    throw domain_error("unknown named graph: " + name);
}

std::string opt_cell(std::optional<int> v) { return v ? std::to_string(*v) : "-"; }

std::string invariants_tsv_header() {
    return "graph6\tn\tsize\tmin_degree\tmax_degree\tconnected\tkappa\ttwo_connected\talpha\t"
           "sigma3\tleaf\tcircumference\tpath\thamiltonian\ttraceable\ttriangle_free\tregular\t"
           "family";
}

std::string invariants_tsv_row(InvariantReport& r) {
    std::ostringstream os;
    os << write_graph6(r.graph()) << '\t' << r.order() << '\t' << r.size() << '\t' << r.min_degree()
       << '\t' << r.max_degree() << '\t' << r.connected() << '\t' << r.kappa() << '\t'
       << r.two_connected() << '\t' << r.alpha() << '\t' << opt_cell(r.sigma3()) << '\t'
       << opt_cell(r.leaf()) << '\t' << r.circumference() << '\t' << r.path_order() << '\t'
       << r.hamiltonian() << '\t' << r.traceable() << '\t' << r.triangle_free() << '\t'
       << opt_cell(r.regular()) << '\t';
    try {
        os << r.family_member();
    } catch (const budget_error&) {
        os << '-';
    }
    return os.str();
}

struct InvariantsCfg {
    std::string g6, named, file, format = "json";
    std::optional<int> n;
    bool witness = false;
    bool strict = false;
};

int cmd_invariants(const InvariantsCfg& cfg) {
    std::vector<Graph> inline_graphs;
    if (!cfg.g6.empty()) inline_graphs.push_back(parse_graph6(cfg.g6));
    if (!cfg.named.empty()) inline_graphs.push_back(named_graph(cfg.named, cfg.n));

    bool wrote_header = false;
    const auto emit = [&](const Graph& g) {
        InvariantReport r(g);
        if (cfg.format == "tsv") {
            if (!wrote_header) {
                std::cout << invariants_tsv_header() << '\n';
                wrote_header = true;
            }
            std::cout << invariants_tsv_row(r) << '\n';
        } else {
            std::cout << r.to_json(cfg.witness) << '\n';
        }
    };

    if (!inline_graphs.empty()) {
        for (const Graph& g : inline_graphs) emit(g);
        return 0;
    }

    std::ifstream fin;
    std::istream* in = &std::cin;
    if (cfg.file != "-") {
        fin.open(cfg.file);
        if (!fin) throw domain_error("cannot open " + cfg.file);
        in = &fin;
    }
    CorpusReader reader(*in, cfg.strict);
    while (auto item = reader.next()) emit(item->graph);
    if (!reader.errors().empty())
        std::cerr << "skipped " << reader.errors().size() << " unparseable line(s)\n";
    return 0;
}

struct GenCfg {
    std::string named, family, part_a, part_b;
    std::optional<int> n, a, b, c, s;
};

Graph family_template(const GenCfg& cfg) {
    const auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw domain_error("--family " + cfg.family + " needs " + flag);
        return *v;
    };
    const auto need_part = [&](const std::string& text, const char* flag) {
        if (text.empty()) throw domain_error("--family " + cfg.family + " needs " + flag);
        return parse_graph6(text);
    };
    if (cfg.family == "f1") return compose_f1(need_part(cfg.part_a, "--part-a"), need_part(cfg.part_b, "--part-b"));
    if (cfg.family == "f2") return compose_f2(need_part(cfg.part_a, "--part-a"), need_part(cfg.part_b, "--part-b"));
    if (cfg.family == "f3") return family_f3(need(cfg.a, "--a"), need(cfg.b, "--b"), need(cfg.c, "--c"));
    if (cfg.family == "f4") return family_f4(need(cfg.a, "--a"), need(cfg.b, "--b"));
    if (cfg.family == "f5") return family_f5(need(cfg.s, "--s"));
    if (cfg.family == "f6") return family_f6(need(cfg.s, "--s"));
    throw domain_error("unknown family: " + cfg.family);
}

int cmd_gen(const GenCfg& cfg) {
    if (cfg.named.empty() == cfg.family.empty())
        throw domain_error("gen needs exactly one of --named or --family");
    const Graph g = cfg.named.empty() ? family_template(cfg) : named_graph(cfg.named, cfg.n);
    std::cout << write_graph6(g) << '\n';
    return 0;
}

int cmd_enumerate(int n) {
    const int cap = effective_enumeration_cap();
    if (n < 1 || n > cap)
        throw domain_error("enumeration order must be in [1, " + std::to_string(cap) +
                           "] (raise via LEAFSPAN_BUDGET_N up to " +
                           std::to_string(max_enumeration_cap) + ")");
    enumerate_connected(n, [](const Graph& g) { std::cout << write_graph6(g) << '\n'; });
    return 0;
}

struct CheckCfg {
    std::string rules = "all", g6_file, format = "json";
    std::optional<int> enumerate_n;
    int jobs = 1;
    bool strict = false;
    bool strict_budget = false;
};

int cmd_check(const CheckCfg& cfg) {
    const std::vector<Rule> rules = select_rules(cfg.rules);
    if (cfg.enumerate_n.has_value() == !cfg.g6_file.empty())
        throw domain_error("check needs exactly one of --enumerate or --g6-file");

    SuiteReport report;
    std::optional<std::string> corpus_failure;

    if (cfg.enumerate_n) {
        const int cap = effective_enumeration_cap();
        const int top = *cfg.enumerate_n;
        if (top < 1 || top > cap)
            throw domain_error("enumeration order must be in [1, " + std::to_string(cap) +
                               "] (raise via LEAFSPAN_BUDGET_N up to " +
                               std::to_string(max_enumeration_cap) + ")");
        std::vector<std::string> lines;
        for (int k = 1; k <= top; ++k)
            enumerate_connected(k, [&lines](const Graph& g) { lines.push_back(write_graph6(g)); });
        std::size_t index = 0;
        report = run_suite(
            [&lines, &index]() -> std::optional<Graph> {
                if (index >= lines.size()) return std::nullopt;
                return parse_graph6(lines[index++]);
            },
            rules, cfg.jobs, "connected<=" + std::to_string(top));
    } else {
        std::ifstream fin;
        std::istream* in = &std::cin;
        std::string corpus_name = "stdin";
        if (cfg.g6_file != "-") {
            fin.open(cfg.g6_file);
            if (!fin) throw domain_error("cannot open " + cfg.g6_file);
            in = &fin;
            corpus_name = cfg.g6_file;
        }
        CorpusReader reader(*in, cfg.strict);
        report = run_suite(
            [&reader, &corpus_failure]() -> std::optional<Graph> {
                if (corpus_failure) return std::nullopt;
                try {
                    if (auto item = reader.next()) return item->graph;
                } catch (const parse_error& e) {
                    corpus_failure = e.what();
                }
                return std::nullopt;
            },
            rules, cfg.jobs, corpus_name);
        if (!reader.errors().empty())
            std::cerr << "skipped " << reader.errors().size() << " unparseable line(s)\n";
    }

    std::cout << (cfg.format == "tsv" ? report.to_tsv() : report.to_json() + "\n");
    if (corpus_failure) {
        std::cerr << "error: " << *corpus_failure << '\n';
        return 2;
    }
    if (report.failed()) return 1;
    if (cfg.strict_budget && report.budget_skips() > 0) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, constructions, enumeration and statement checks for graphs of order <= 64"};
    app.require_subcommand(1);

    InvariantsCfg inv;
    CLI::App* inv_cmd = app.add_subcommand("invariants", "compute the invariant bundle per input graph");
    auto* inv_g6 = inv_cmd->add_option("--g6", inv.g6, "inline graph6 line");
    auto* inv_named = inv_cmd->add_option("--named", inv.named, "named graph (petersen, petersen-triangle, g1, g2, cycle, complete, path)");
    auto* inv_file = inv_cmd->add_option("--file", inv.file, "graph6 file, - for stdin")->default_val("-");
    inv_cmd->add_option("--n", inv.n, "order parameter for parameterized named graphs");
    inv_cmd->add_flag("--witness", inv.witness, "include certificates in JSON output");
    inv_cmd->add_flag("--strict", inv.strict, "fail on unparseable corpus lines instead of skipping");
    inv_cmd->add_option("--format", inv.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    inv_g6->excludes(inv_named)->excludes(inv_file);
    inv_named->excludes(inv_file);

    GenCfg gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a named graph or family template as graph6");
    gen_cmd->add_option("--named", gen.named, "named graph (petersen, petersen-triangle, g1, g2, cycle, complete, path)");
    gen_cmd->add_option("--family", gen.family, "family template (f1..f6)");
    gen_cmd->add_option("--n", gen.n, "order parameter for parameterized named graphs");
    gen_cmd->add_option("--a", gen.a, "first cell parameter (f3, f4)");
    gen_cmd->add_option("--b", gen.b, "second cell parameter (f3, f4)");
    gen_cmd->add_option("--c", gen.c, "third cell parameter (f3)");
    gen_cmd->add_option("--s", gen.s, "hub size parameter (f5, f6)");
    gen_cmd->add_option("--part-a", gen.part_a, "first block as graph6 (f1, f2)");
    gen_cmd->add_option("--part-b", gen.part_b, "second block as graph6 (f1, f2)");

    int enum_n = 0;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "stream all connected graphs of one order, one line per isomorphism class");
    enum_cmd->add_option("--n", enum_n, "graph order")->required();

    CheckCfg chk;
    CLI::App* chk_cmd = app.add_subcommand("check", "evaluate statement rules over a corpus and report counterexamples");
    auto* chk_enum = chk_cmd->add_option("--enumerate", chk.enumerate_n, "run over all connected graphs of order 1..N");
    auto* chk_file = chk_cmd->add_option("--g6-file", chk.g6_file, "graph6 corpus file, - for stdin");
    chk_cmd->add_option("--rules", chk.rules, "comma-separated rule ids, or all");
    chk_cmd->add_option("--jobs", chk.jobs, "worker threads")->check(CLI::Range(1, 256));
    chk_cmd->add_flag("--strict", chk.strict, "fail on unparseable corpus lines instead of skipping");
    chk_cmd->add_flag("--strict-budget", chk.strict_budget, "exit 3 when any rule was budget-skipped");
    chk_cmd->add_option("--format", chk.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    chk_enum->excludes(chk_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv_cmd->parsed()) return cmd_invariants(inv);
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (enum_cmd->parsed()) return cmd_enumerate(enum_n);
        return cmd_check(chk);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
