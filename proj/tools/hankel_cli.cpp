// hankel: command-line front end for the Hankel edge ideal library.
//
// Exit codes: 0 true/verified, 1 falsified, 2 usage or input error,
// 3 Groebner budget exhausted.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel/graphs.hpp"
#include "hankel/groebner.hpp"
#include "hankel/hankel.hpp"
#include "hankel/ideal_ops.hpp"
#include "hankel/verify.hpp"

namespace {

using hankel::LabeledGraph;
using Json = nlohmann::ordered_json;

enum Exit : int { exit_true = 0, exit_false = 1, exit_usage = 2, exit_budget = 3 };

struct Common {
    std::string graph_path;
    std::string builtin;
    std::string order = "revlex";
    bool json = false;
    std::optional<std::size_t> budget;
};

void add_common(CLI::App& cmd, Common& c, bool needs_graph = true) {
    if (needs_graph) {
        auto* g = cmd.add_option("--graph", c.graph_path, "graph file (n <count> / e <i> <j> lines)");
        auto* b = cmd.add_option("--builtin", c.builtin, "builtin fixture: fig1..fig4, lN, cN, kN, kN-e, t1-N, t2-N");
        g->excludes(b);
        b->excludes(g);
    }
    cmd.add_option("--order", c.order, "monomial order")->check(CLI::IsMember({"revlex", "lex"}));
    cmd.add_flag("--json", c.json, "machine-readable output");
    cmd.add_option("--budget", c.budget, "maximum S-pair reductions per Groebner basis")->check(CLI::PositiveNumber);
}

std::size_t resolve_budget(const Common& c) {
    if (c.budget) return *c.budget;
    if (const char* env = std::getenv("HANKEL_BUDGET")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw hankel::DomainError("HANKEL_BUDGET must be a positive integer");
    }
    return hankel::default_gb_budget;
}

LabeledGraph load_graph(const Common& c) {
    if (!c.graph_path.empty()) return hankel::read_graph_file(c.graph_path);
    if (!c.builtin.empty()) return hankel::builtin_graph(c.builtin);
    throw hankel::DomainError("one of --graph or --builtin is required");
}

hankel::MonomialOrder resolve_order(const Common& c) {
    return c.order == "lex" ? hankel::MonomialOrder::lex() : hankel::MonomialOrder::rev_lex();
}

Json edges_json(const LabeledGraph& g) {
    Json out = Json::array();
    for (const hankel::Edge& e : g.edges()) out.push_back({e.i, e.j});
    return out;
}

Json input_json(const LabeledGraph& g) { return Json{{"n", g.n()}, {"edges", edges_json(g)}}; }

Json strings_json(const std::vector<std::string>& items) {
    Json out = Json::array();
    for (const std::string& s : items) out.push_back(s);
    return out;
}

/// Prints either the JSON envelope or the text lines, returns `code`.
struct Output {
    Output(const Common& c, std::string cmd, Json in) : common(c), command(std::move(cmd)), input(std::move(in)) {}

    const Common& common;
    std::string command;
    Json input;
    std::string order = "revlex";
    Json result = Json::object();
    Json evidence = Json::object();
    std::vector<std::string> text;

    int emit(const hankel::GbStats& stats, int code) const {
        if (common.json) {
            Json ev = evidence;
            ev["gb_calls"] = stats.gb_calls;
            Json doc{{"command", command}, {"input", input},       {"order", order},
                     {"result", result},   {"evidence", ev},       {"budget_used", stats.pair_reductions}};
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const std::string& line : text) std::cout << line << "\n";
        }
        return code;
    }
};

hankel::GbOptions gb_options(const Common& c, hankel::GbStats& stats) {
    hankel::GbOptions opts;
    opts.budget = resolve_budget(c);
    opts.stats = &stats;
    return opts;
}

int cmd_gen(const Common& c) {
    const LabeledGraph g = load_graph(c);
    const hankel::HankelIdeal h = hankel::hankel_edge_ideal(g);
    Output out{c, "gen", input_json(g)};
    out.order = c.order;
    out.result = Json::array();
    for (const auto& [edge, poly] : h.generator_index) {
        out.result.push_back(hankel::to_string(poly));
        out.text.push_back(hankel::to_string(poly));
    }
    return out.emit({}, exit_true);
}

int cmd_gb(const Common& c) {
    const LabeledGraph g = load_graph(c);
    hankel::GbStats stats;
    const auto ord = resolve_order(c);
    const auto gb = hankel::buchberger(hankel::hankel_edge_ideal(g).ideal, ord, gb_options(c, stats));
    Output out{c, "gb", input_json(g)};
    out.order = ord.name();
    Json basis = Json::array();
    for (const auto& p : gb.elements) {
        basis.push_back(hankel::to_string(p, ord));
        out.text.push_back(hankel::to_string(p, ord));
    }
    out.result = Json{{"basis", basis}, {"size", gb.elements.size()}};
    return out.emit(stats, exit_true);
}

int cmd_initial(const Common& c) {
    const LabeledGraph g = load_graph(c);
    hankel::GbStats stats;
    const auto ord = resolve_order(c);
    const auto ideal = hankel::hankel_edge_ideal(g).ideal;
    const hankel::MonomialIdeal in = hankel::initial_ideal(ideal, ord, gb_options(c, stats));
    Output out{c, "initial", input_json(g)};
    out.order = ord.name();
    Json gens = Json::array();
    for (const auto& m : in.generators()) gens.push_back(hankel::format_monomial(m, ideal.context()));
    const bool ci = hankel::monomial_is_CI(in);
    out.result = Json{{"generators", gens}, {"complete_intersection", ci}};
    out.text.push_back(hankel::to_string(in, ideal.context()));
    out.text.push_back(std::string("monomial CI: ") + (ci ? "true" : "false"));
    return out.emit(stats, exit_true);
}

int cmd_height(const Common& c) {
    const LabeledGraph g = load_graph(c);
    hankel::GbStats stats;
    const auto ord = resolve_order(c);
    const auto ideal = hankel::hankel_edge_ideal(g).ideal;
    const std::size_t h = hankel::height(ideal, ord, gb_options(c, stats));
    Output out{c, "height", input_json(g)};
    out.order = ord.name();
    out.result = Json{{"height", h}, {"variables", ideal.context().size()}};
    out.text.push_back("height = " + std::to_string(h));
    return out.emit(stats, exit_true);
}

int cmd_classify(const Common& c) {
    const LabeledGraph g = load_graph(c);
    const hankel::LabelClass cls = hankel::classify_labeling(g);
    Output out{c, "classify", input_json(g)};
    out.order = c.order;
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    out.result = Json{{"labeled_hamiltonian", cls.labeled_hamiltonian},
                      {"labeled_semi_hamiltonian", cls.labeled_semi_hamiltonian},
                      {"closed_labeling", cls.closed_labeling},
                      {"connected", cls.connected},
                      {"tree", cls.tree},
                      {"path", cls.path},
                      {"rooted_labeling", nullptr}};
    out.text = {"labeled Hamiltonian: " + b(cls.labeled_hamiltonian),
                "labeled semi-Hamiltonian: " + b(cls.labeled_semi_hamiltonian),
                "closed labeling: " + b(cls.closed_labeling), "connected: " + b(cls.connected),
                "tree: " + b(cls.tree), "path: " + b(cls.path)};
    if (cls.tree) {
        const auto cert = hankel::is_rooted_labeling(g);
        out.result["rooted_labeling"] = cert.has_value();
        out.text.push_back("rooted labeling: " + b(cert.has_value()));
        if (cert) {
            Json parents = Json::object();
            std::string line = "parents:";
            for (int v = 2; v <= g.n(); ++v) {
                parents[std::to_string(v)] = cert->parent[v];
                line += " " + std::to_string(v) + "->" + std::to_string(cert->parent[v]);
            }
            out.evidence["parents"] = parents;
            out.text.push_back(line);
        }
    }
    return out.emit({}, exit_true);
}

int cmd_minprimes(const Common& c, const std::vector<std::string>& candidate_text) {
    const LabeledGraph g = load_graph(c);
    std::vector<hankel::StructuredPrime> candidates;
    bool supplied = !candidate_text.empty();
    if (supplied) {
        for (const std::string& s : candidate_text) {
            hankel::StructuredPrime p = hankel::parse_structured_prime(s);
            p.validate(g.n());
            candidates.push_back(std::move(p));
        }
    } else {
        candidates = hankel::minimal_prime_candidates(g);
    }
    hankel::GbStats stats;
    const auto report =
        hankel::verify_minimal_primes(hankel::hankel_edge_ideal(g), candidates, gb_options(c, stats));

    Output out{c, "minprimes", input_json(g)};
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
        verdicts.push_back(Json{{"prime", hankel::to_string(v.prime)},
                                {"contains_ideal", v.contains_ideal},
                                {"incomparable", v.incomparable_with_others}});
        out.text.push_back(hankel::to_string(v.prime) + ": contains I=" + (v.contains_ideal ? "yes" : "no") +
                           ", incomparable=" + (v.incomparable_with_others ? "yes" : "no"));
    }
    out.result = Json{{"ok", report.verified()},
                      {"candidates_source", supplied ? "command line" : "builtin list"},
                      {"verdicts", verdicts},
                      {"intersection_matches_radical", report.intersection_matches_radical}};
    out.evidence["checks"] = strings_json(report.evidence);
    out.text.push_back(std::string("minimal primes verified: ") + (report.verified() ? "true" : "false"));
    return out.emit(stats, report.verified() ? exit_true : exit_false);
}

int cmd_check(const Common& c, const std::string& property) {
    const LabeledGraph g = load_graph(c);
    hankel::GbStats stats;
    hankel::PropertyOptions po;
    po.gb = gb_options(c, stats);
    po.check_radical = property == "radical" || property == "all";
    const hankel::PropertyReport r = hankel::property_report(g, po);

    const std::string mh = "(mu=" + std::to_string(r.mu) + ", height=" + std::to_string(r.height) + ")";
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    const std::string radical = r.is_radical ? b(*r.is_radical) : "unknown";

    Output out{c, "check", input_json(g)};
    out.result = Json{{"property", property}, {"mu", r.mu}, {"height", r.height}};
    out.evidence["checks"] = strings_json(r.evidence);
    bool ok = true;
    if (property == "ci") {
        ok = r.is_CI;
        out.text.push_back("CI: " + b(ok) + " " + mh);
    } else if (property == "almost-ci") {
        ok = r.is_almost_CI;
        out.text.push_back("almost-CI: " + b(ok) + " " + mh);
    } else if (property == "radical") {
        ok = r.is_radical.value_or(false);
        out.text.push_back("radical: " + radical);
    } else {
        out.text = {"mu = " + std::to_string(r.mu), "height = " + std::to_string(r.height), "CI: " + b(r.is_CI),
                    "almost-CI: " + b(r.is_almost_CI), "radical: " + radical};
    }
    out.result["ok"] = ok;
    out.result["is_CI"] = r.is_CI;
    out.result["is_almost_CI"] = r.is_almost_CI;
    out.result["is_radical"] = r.is_radical ? Json(*r.is_radical) : Json(nullptr);
    out.result["mu_minimal"] = r.mu_minimal ? Json(*r.mu_minimal) : Json(nullptr);
    return out.emit(stats, ok ? exit_true : exit_false);
}

int cmd_verify(const Common& c, const std::string& tag, std::optional<int> min_n, int max_n, unsigned jobs,
               bool verbose) {
    const hankel::TheoremInfo& info = hankel::theorem_info(tag);
    hankel::GbStats stats;
    hankel::VerifyOptions vo;
    vo.jobs = jobs;
    vo.gb = gb_options(c, stats);
    const hankel::TheoremReport rep = hankel::verify_theorem(tag, min_n.value_or(info.lowest_n), max_n, vo);

    Output out{c, "verify", Json{{"n", nullptr}, {"edges", nullptr}, {"theorem", tag},
                                 {"min_n", rep.min_n}, {"max_n", rep.max_n}}};
    Json instances = Json::array();
    for (const auto& i : rep.instances)
        instances.push_back(Json{{"key", i.key}, {"n", i.n}, {"pass", i.pass}, {"detail", i.detail}});
    out.result = Json{{"ok", rep.ok()},
                      {"theorem", tag},
                      {"passed", rep.passed()},
                      {"failed", rep.failed()},
                      {"instances", instances}};
    out.evidence["summary"] = info.summary;

    out.text.push_back(tag + ": " + info.summary);
    for (int n = rep.min_n; n <= rep.max_n; ++n) {
        std::size_t total = 0, pass = 0;
        for (const auto& i : rep.instances) {
            if (i.n != n) continue;
            ++total;
            pass += i.pass ? 1 : 0;
            if (verbose || !i.pass) out.text.push_back(std::string(i.pass ? "  pass " : "  FAIL ") + i.key + ": " + i.detail);
        }
        out.text.push_back("n=" + std::to_string(n) + ": " + (pass == total ? "pass" : "FAIL") + " (" +
                           std::to_string(pass) + "/" + std::to_string(total) + ")");
    }
    out.text.push_back(std::string("result: ") + (rep.ok() ? "verified" : "falsified") + " (" +
                       std::to_string(rep.passed()) + "/" + std::to_string(rep.instances.size()) + " instances)");
    return out.emit(stats, rep.ok() ? exit_true : exit_false);
}

int cmd_enum_rooted(const Common& c) {
    const LabeledGraph g = load_graph(c);
    const auto labelings = hankel::enumerate_rooted_labelings(g);
    Output out{c, "enum-rooted", input_json(g)};
    out.order = c.order;
    Json list = Json::array();
    for (const LabeledGraph& t : labelings) {
        list.push_back(edges_json(t));
        out.text.push_back(hankel::edges_to_string(t));
    }
    out.result = Json{{"count", labelings.size()}, {"labelings", list}};
    out.text.push_back(std::to_string(labelings.size()) + " rooted labeling(s)");
    return out.emit({}, exit_true);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel edge ideals of labeled graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hankel 1.0");

    Common common;
    auto* gen = app.add_subcommand("gen", "print the generators g_ij of I_G");
    add_common(*gen, common);
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of I_G");
    add_common(*gb, common);
    auto* initial = app.add_subcommand("initial", "initial ideal of I_G");
    add_common(*initial, common);
    auto* height = app.add_subcommand("height", "height of I_G");
    add_common(*height, common);
    auto* classify = app.add_subcommand("classify", "labeling classes, closedness, rooted labeling");
    add_common(*classify, common);

    std::vector<std::string> candidates;
    auto* minprimes = app.add_subcommand("minprimes", "verify a minimal-prime candidate list");
    add_common(*minprimes, common);
    minprimes->add_option("--candidate", candidates, "structured prime, e.g. \"vars=1,2;minors=3..5\" (repeatable)");

    std::string property;
    auto* check = app.add_subcommand("check", "complete intersection, almost CI, radical");
    add_common(*check, common);
    check->add_option("property", property, "ci | almost-ci | radical | all")
        ->required()
        ->check(CLI::IsMember({"ci", "almost-ci", "radical", "all"}));

    std::string tag;
    std::optional<int> min_n;
    int max_n = 0;
    unsigned jobs = 1;
    bool verbose = false;
    auto* verify = app.add_subcommand("verify", "check a classification result on an instance family");
    add_common(*verify, common, false);
    std::string tags = "theorem tag, with supported n:";
    for (const auto& t : hankel::theorem_table())
        tags += "\n  " + t.tag + " (" + std::to_string(t.lowest_n) + ".." + std::to_string(t.highest_n) + ")";
    verify->add_option("--theorem", tag, tags)->required();
    verify->add_option("--min-n", min_n, "smallest n (default: the tag's lowest)");
    verify->add_option("--max-n", max_n, "largest n")->required();
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 64u));
    verify->add_flag("--verbose", verbose, "list every instance");

    auto* enum_rooted = app.add_subcommand("enum-rooted", "all rooted labelings of a tree");
    add_common(*enum_rooted, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_true : exit_usage;
    }

    try {
        if (*gen) return cmd_gen(common);
        if (*gb) return cmd_gb(common);
        if (*initial) return cmd_initial(common);
        if (*height) return cmd_height(common);
        if (*classify) return cmd_classify(common);
        if (*minprimes) return cmd_minprimes(common, candidates);
        if (*check) return cmd_check(common, property);
        if (*verify) return cmd_verify(common, tag, min_n, max_n, jobs, verbose);
        if (*enum_rooted) return cmd_enum_rooted(common);
    } catch (const hankel::BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const hankel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
