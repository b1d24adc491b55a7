#pragma once

// Instance-family checks of the classification results for Hankel edge ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hankel/error.hpp"
#include "hankel/graphs.hpp"
#include "hankel/groebner.hpp"
#include "hankel/hankel.hpp"
#include "hankel/ideal_ops.hpp"

namespace hankel {

struct InstanceResult {
    InstanceResult() = default;
    InstanceResult(std::string k, int size, bool ok = false, std::string why = {})
        : key(std::move(k)), n(size), pass(ok), detail(std::move(why)) {}

    std::string key;
    int n = 0;
    bool pass = false;
    std::string detail;
    std::size_t pair_reductions = 0;
};

struct TheoremReport {
    std::string tag;
    int min_n = 0;
    int max_n = 0;
    std::vector<InstanceResult> instances;

    std::size_t passed() const {
        return static_cast<std::size_t>(
            std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.pass; }));
    }
    std::size_t failed() const { return instances.size() - passed(); }
    bool ok() const { return !instances.empty() && failed() == 0; }
};

struct VerifyOptions {
    unsigned jobs = 1;
    GbOptions gb{};
};

struct TheoremInfo {
    std::string tag;
    int lowest_n;
    int highest_n;  // larger ranges are refused
    std::string summary;
};

inline const std::vector<TheoremInfo>& theorem_table() {
    static const std::vector<TheoremInfo> table{
        {"thm2.2", 2, 8, "labeled (semi-)Hamiltonian graphs: height n-1 and the known minimal primes verify"},
        {"cor2.3", 3, 7, "radical exactly for K_n / K_n-{1,n}; I_{K_n-{1,n}} = I_X ∩ (x2..xn)"},
        {"prop2.6", 3, 7, "almost complete intersection exactly for C_n / unicyclic L_n+{t,t+s}"},
        {"cor2.7", 3, 8, "closed graphs: almost complete intersection exactly for L_n+{t,t+2}"},
        {"thm3.1", 3, 9, "rooted labeled non-path trees have height <= n-2"},
        {"thm3.2", 3, 9, "rooted labeled trees: CI iff path rooted at a leaf or a leaf's neighbor"},
        {"prop3.5", 3, 12, "initial ideals of the rooted paths T1, T2 and L_n under revlex"},
        {"prop2.8-radical", 3, 8, "labeled semi-Hamiltonian G: rad(I_G) = rad(I_{L_n})"},
    };
    return table;
}

inline const TheoremInfo& theorem_info(const std::string& tag) {
    for (const TheoremInfo& t : theorem_table())
        if (t.tag == tag) return t;
    throw DomainError("unknown theorem tag '" + tag + "'");
}

namespace detail {

using Instance = std::function<InstanceResult(const GbOptions&)>;

/// Graphs `base` + S for subsets S of `chords`: every subset when there are at
/// most `limit` of them, otherwise the empty set, the full set and random
/// distinct subsets up to `limit` (fixed seed).
inline std::vector<LabeledGraph> chord_family(const LabeledGraph& base, const std::vector<Edge>& chords,
                                              std::size_t limit, std::uint32_t seed) {
    const std::size_t c = chords.size();
    std::vector<std::uint64_t> masks;
    if (c < 63 && (std::uint64_t{1} << c) <= limit) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << c); ++m) masks.push_back(m);
    } else {
        const std::uint64_t full = c >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
        std::set<std::uint64_t> chosen{0, full};
        std::mt19937_64 rng(seed);
        while (chosen.size() < limit) chosen.insert(rng() & full);
        masks.assign(chosen.begin(), chosen.end());
    }
    std::vector<LabeledGraph> out;
    for (std::uint64_t m : masks) {
        std::vector<Edge> e = base.edges();
        for (std::size_t k = 0; k < c; ++k)
            if (m >> k & 1) e.push_back(chords[k]);
        out.emplace_back(base.n(), std::move(e));
    }
    return out;
}

/// Chords of the standard path L_n, optionally including {1,n}.
inline std::vector<Edge> path_chords(int n, bool include_end_edge) {
    std::vector<Edge> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (include_end_edge || !(i == 1 && j == n)) out.push_back(Edge{i, j});
    return out;
}

inline std::vector<LabeledGraph> hamiltonian_family(int n, std::size_t limit) {
    auto chords = path_chords(n, false);
    return chord_family(cycle_graph(n), chords, limit, 0x5eed0000u + static_cast<std::uint32_t>(n));
}

inline std::vector<LabeledGraph> semi_hamiltonian_family(int n, std::size_t limit) {
    auto chords = path_chords(n, false);
    return chord_family(path_graph(n), chords, limit, 0x5eed1000u + static_cast<std::uint32_t>(n));
}

inline std::string graph_key(const std::string& name, const LabeledGraph& g) {
    return name + " n=" + std::to_string(g.n()) + " " + edges_to_string(g);
}

inline bool root_is_leaf_or_leaf_neighbor(const LabeledGraph& t) {
    if (t.is_leaf(1)) return true;
    for (int u : t.neighbors(1))
        if (t.is_leaf(u)) return true;
    return false;
}

/// Every rooted labeled tree on n vertices, deduplicated by edge set.
inline std::vector<LabeledGraph> all_rooted_labeled_trees(int n) {
    std::set<LabeledGraph> all;
    for (const LabeledGraph& shape : nonisomorphic_trees(n))
        for (LabeledGraph& t : enumerate_rooted_labelings(shape)) all.insert(std::move(t));
    return {all.begin(), all.end()};
}

inline MonomialIdeal monomials_of(const VariableContext& ctx, const std::vector<std::vector<std::pair<int, int>>>& gens) {
    std::vector<Monomial> out;
    for (const auto& factors : gens) {
        Monomial m(ctx.size());
        for (auto [var, power] : factors) m = m * Monomial::variable(ctx.size(), static_cast<std::size_t>(var - 1), power);
        out.push_back(m);
    }
    return MonomialIdeal(ctx.size(), std::move(out));
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Instance> theorem_instances(const std::string& tag, int n);

} // namespace detail

// Closed forms for the rooted paths and L_n under revlex.

inline MonomialIdeal expected_initial_t1(int n) {
    const VariableContext ctx = hankel_context(n);
    std::vector<std::vector<std::pair<int, int>>> g{{{2, 1}, {3, 1}}, {{1, 1}, {3, 2}}, {{2, 2}}};
    for (int i = 3; i <= n - 1; ++i) g.push_back({{i + 1, 2}});
    return detail::monomials_of(ctx, g);
}

inline MonomialIdeal expected_initial_t2(int n) {
    const VariableContext ctx = hankel_context(n);
    std::vector<std::vector<std::pair<int, int>>> g{
        {{2, 1}, {3, 1}}, {{3, 1}, {4, 1}}, {{1, 1}, {3, 2}}, {{1, 1}, {4, 2}}, {{2, 2}}};
    for (int i = 4; i <= n - 1; ++i) g.push_back({{i + 1, 2}});
    return detail::monomials_of(ctx, g);
}

inline MonomialIdeal expected_initial_path(int n) {
    const VariableContext ctx = hankel_context(n);
    std::vector<std::vector<std::pair<int, int>>> g;
    for (int i = 1; i <= n - 1; ++i) g.push_back({{i + 1, 2}});
    return detail::monomials_of(ctx, g);
}

/// f = x1x2x4 - x1x3^2, h = x1x3x5 - x1x4^2: the extra Groebner elements for T1 and T2.
inline Polynomial t1_extra_element(const VariableContext& ctx) {
    return x(ctx, 1) * x(ctx, 2) * x(ctx, 4) - x(ctx, 1) * x(ctx, 3) * x(ctx, 3);
}
inline Polynomial t2_extra_element(const VariableContext& ctx) {
    return x(ctx, 1) * x(ctx, 3) * x(ctx, 5) - x(ctx, 1) * x(ctx, 4) * x(ctx, 4);
}

/// {f, g12, g13, g_{i,i+1} : 3 <= i <= n-1}
inline std::vector<Polynomial> t1_groebner_set(int n) {
    const VariableContext ctx = hankel_context(n);
    std::vector<Polynomial> out{t1_extra_element(ctx), hankel_minor(ctx, 1, 2), hankel_minor(ctx, 1, 3)};
    for (int i = 3; i <= n - 1; ++i) out.push_back(hankel_minor(ctx, i, i + 1));
    return out;
}

/// {f, h, g12, g13, g24, g_{i,i+1} : 4 <= i <= n-1}
inline std::vector<Polynomial> t2_groebner_set(int n) {
    const VariableContext ctx = hankel_context(n);
    std::vector<Polynomial> out{t1_extra_element(ctx), t2_extra_element(ctx), hankel_minor(ctx, 1, 2),
                                hankel_minor(ctx, 1, 3), hankel_minor(ctx, 2, 4)};
    for (int i = 4; i <= n - 1; ++i) out.push_back(hankel_minor(ctx, i, i + 1));
    return out;
}

namespace detail {

inline InstanceResult check_min_primes_and_height(const std::string& name, const LabeledGraph& g,
                                                  const GbOptions& gb) {
    const HankelIdeal h = hankel_edge_ideal(g);
    const std::size_t ht = height(h.ideal, MonomialOrder::rev_lex(), gb);
    const MinPrimesReport mp = verify_minimal_primes(h, minimal_prime_candidates(g), gb);
    InstanceResult r{graph_key(name, g), g.n()};
    r.pass = ht == static_cast<std::size_t>(g.n() - 1) && mp.verified();
    r.detail = "height=" + std::to_string(ht) + " minimal primes verified=" + yes_no(mp.verified());
    return r;
}

inline std::vector<Instance> theorem_instances(const std::string& tag, int n) {
    std::vector<Instance> out;
    auto add = [&](Instance f) { out.push_back(std::move(f)); };

    if (tag == "thm2.2") {
        std::vector<std::pair<std::string, LabeledGraph>> fixtures{{"L_n", path_graph(n)}};
        if (n >= 3) {
            fixtures.emplace_back("C_n", cycle_graph(n));
            fixtures.emplace_back("K_n", complete_graph(n));
            fixtures.emplace_back("K_n-{1,n}", complete_minus_end_edge(n));
        }
        if (n == 5) fixtures.emplace_back("fig1", figure1_graph());
        if (n == 5) fixtures.emplace_back("fig3", figure3_graph());
        if (n == 6) fixtures.emplace_back("fig2", figure2_graph());
        for (auto& [name, g] : fixtures)
            add([name, g](const GbOptions& gb) { return check_min_primes_and_height(name, g, gb); });
    } else if (tag == "cor2.3") {
        add([n](const GbOptions& gb) {
            const bool eq = ideals_equal(hankel_edge_ideal(complete_graph(n)).ideal, hankel_full_ideal(n),
                                         MonomialOrder::rev_lex(), gb);
            return InstanceResult{"I_{K_n} = I_X n=" + std::to_string(n), n, eq, "equal=" + yes_no(eq)};
        });
        add([n](const GbOptions& gb) {
            const VariableContext ctx = hankel_context(n);
            const Ideal meet = intersect_ideals(
                hankel_full_ideal(n), expand_structured_prime(StructuredPrime::of_variables(range_vars(2, n)), ctx), gb);
            const bool eq =
                ideals_equal(hankel_edge_ideal(complete_minus_end_edge(n)).ideal, meet, MonomialOrder::rev_lex(), gb);
            return InstanceResult{"I_{K_n-{1,n}} = I_X ∩ (x2..xn) n=" + std::to_string(n), n, eq, "equal=" + yes_no(eq)};
        });
        const std::size_t limit = n <= 5 ? 64 : 24;
        for (const LabeledGraph& g : hamiltonian_family(n, limit))
            add([g, n](const GbOptions& gb) {
                PropertyOptions po;
                po.check_minimality = false;
                po.gb = gb;
                const PropertyReport pr = property_report(g, po);
                const bool expect = g == complete_graph(n);
                InstanceResult r{graph_key("hamiltonian", g), n};
                r.pass = pr.is_radical.has_value() && *pr.is_radical == expect;
                r.detail = "radical=" + (pr.is_radical ? yes_no(*pr.is_radical) : std::string("unknown")) +
                           " expected=" + yes_no(expect);
                return r;
            });
        for (const LabeledGraph& g : semi_hamiltonian_family(n, limit))
            add([g, n](const GbOptions& gb) {
                PropertyOptions po;
                po.check_minimality = false;
                po.gb = gb;
                const PropertyReport pr = property_report(g, po);
                const bool expect = g == complete_minus_end_edge(n);
                InstanceResult r{graph_key("semi-hamiltonian", g), n};
                r.pass = pr.is_radical.has_value() && *pr.is_radical == expect;
                r.detail = "radical=" + (pr.is_radical ? yes_no(*pr.is_radical) : std::string("unknown")) +
                           " expected=" + yes_no(expect);
                return r;
            });
    } else if (tag == "prop2.6" || tag == "cor2.7") {
        const bool closed_only = tag == "cor2.7";
        std::vector<std::pair<std::string, LabeledGraph>> family;
        const std::size_t limit = n <= 5 ? 64 : 128;
        if (!closed_only)
            for (const LabeledGraph& g : hamiltonian_family(n, limit)) family.emplace_back("hamiltonian", g);
        for (const LabeledGraph& g : semi_hamiltonian_family(n, limit)) family.emplace_back("semi-hamiltonian", g);
        if (closed_only) {
            family.erase(std::remove_if(family.begin(), family.end(),
                                        [](const auto& f) { return !is_closed_labeling(f.second); }),
                         family.end());
            family.emplace_back("hamiltonian", complete_graph(n));
        }
        for (auto& [name, g] : family)
            add([name, g, n, closed_only](const GbOptions& gb) {
                PropertyOptions po;
                po.check_radical = false;
                po.gb = gb;
                const PropertyReport pr = property_report(g, po);
                const LabelClass cls = classify_labeling(g);
                const bool unicyclic = g.edge_count() == static_cast<std::size_t>(n);
                bool expect = false;
                if (closed_only) {
                    for (int t = 1; t + 2 <= n && !expect; ++t)
                        expect = g == path_plus_edge(n, t, 2);
                } else {
                    expect = cls.labeled_hamiltonian ? g == cycle_graph(n) : unicyclic;
                }
                InstanceResult r{graph_key(name, g), n};
                r.pass = pr.is_almost_CI == expect;
                r.detail = "mu=" + std::to_string(pr.mu) + " height=" + std::to_string(pr.height) +
                           " almost_CI=" + yes_no(pr.is_almost_CI) + " expected=" + yes_no(expect);
                return r;
            });
        if (closed_only)
            for (int t = 1; t <= n - 2; ++t)
                for (int s = 2; t + s <= n; ++s) {
                    if (t == 1 && t + s == n) continue;
                    add([n, t, s](const GbOptions&) {
                        const bool closed = is_closed_labeling(path_plus_edge(n, t, s));
                        InstanceResult r{"closedness of L_n+{" + std::to_string(t) + "," + std::to_string(t + s) +
                                             "} n=" + std::to_string(n),
                                         n};
                        r.pass = closed == (s == 2);
                        r.detail = "closed=" + yes_no(closed);
                        return r;
                    });
                }
    } else if (tag == "thm3.1" || tag == "thm3.2") {
        const bool ci_check = tag == "thm3.2";
        for (const LabeledGraph& t : all_rooted_labeled_trees(n)) {
            if (!ci_check && t.is_path()) continue;
            add([t, n, ci_check](const GbOptions& gb) {
                InstanceResult r{graph_key(t.is_path() ? "rooted path" : "rooted tree", t), n};
                if (!ci_check) {
                    const std::size_t ht = height(hankel_edge_ideal(t).ideal, MonomialOrder::rev_lex(), gb);
                    r.pass = ht + 2 <= static_cast<std::size_t>(n);
                    r.detail = "height=" + std::to_string(ht);
                    return r;
                }
                PropertyOptions po;
                po.check_radical = false;
                po.gb = gb;
                const PropertyReport pr = property_report(t, po);
                const bool expect = t.is_path() && root_is_leaf_or_leaf_neighbor(t);
                r.pass = pr.is_CI == expect;
                r.detail = "mu=" + std::to_string(pr.mu) + " height=" + std::to_string(pr.height) +
                           " CI=" + yes_no(pr.is_CI) + " expected=" + yes_no(expect);
                return r;
            });
        }
    } else if (tag == "prop3.5") {
        auto initial_check = [](std::string name, LabeledGraph g, MonomialIdeal expected, bool expect_ci,
                                std::vector<Polynomial> gb_set) {
            return [=](const GbOptions& gb) {
                const Ideal ideal = hankel_edge_ideal(g).ideal;
                const MonomialIdeal in = initial_ideal(ideal, MonomialOrder::rev_lex(), gb);
                bool ok = in == expected && monomial_is_CI(in) == expect_ci;
                std::string detail = "in=" + to_string(in, ideal.context()) + " CI=" + yes_no(monomial_is_CI(in));
                if (!gb_set.empty()) {
                    const bool is_gb = is_groebner_basis(gb_set, MonomialOrder::rev_lex());
                    const bool same = ideals_equal(ideal, Ideal(ideal.context(), gb_set), MonomialOrder::rev_lex(), gb);
                    ok = ok && is_gb && same;
                    detail += " stated set is GB=" + yes_no(is_gb) + " generates I=" + yes_no(same);
                }
                return InstanceResult{graph_key(name, g), g.n(), ok, detail};
            };
        };
        add(initial_check("T1", t1_graph(n), expected_initial_t1(n), false, t1_groebner_set(n)));
        if (n >= 4) add(initial_check("T2", t2_graph(n), expected_initial_t2(n), false, t2_groebner_set(n)));
        add(initial_check("L_n", path_graph(n), expected_initial_path(n), true, {}));
    } else if (tag == "prop2.8-radical") {
        std::vector<LabeledGraph> family = semi_hamiltonian_family(n, n <= 5 ? 64 : 10);
        if (n == 6) family.push_back(figure2_graph());
        for (const LabeledGraph& g : family)
            add([g, n](const GbOptions& gb) {
                const bool eq = radicals_equal(hankel_edge_ideal(g).ideal, hankel_edge_ideal(path_graph(n)).ideal, gb);
                return InstanceResult{graph_key("semi-hamiltonian", g), n, eq, "rad(I_G)=rad(I_{L_n}): " + yes_no(eq)};
            });
    } else {
        throw DomainError("unknown theorem tag '" + tag + "'");
    }
    return out;
}

} // namespace detail

/// Runs the instance family of `tag` for every n in [min_n, max_n].
/// Instances may run on `jobs` threads; the report keeps generation order.
inline TheoremReport verify_theorem(const std::string& tag, int min_n, int max_n, const VerifyOptions& opts = {}) {
    const TheoremInfo& info = theorem_info(tag);
    if (min_n < info.lowest_n) min_n = info.lowest_n;
    if (max_n > info.highest_n)
        throw DomainError("range too large for " + tag + ": n <= " + std::to_string(info.highest_n) + " supported");
    if (min_n > max_n) throw DomainError("empty n range");

    std::vector<detail::Instance> instances;
    for (int n = min_n; n <= max_n; ++n)
        for (auto& inst : detail::theorem_instances(tag, n)) instances.push_back(std::move(inst));

    auto run = [&](std::size_t k) {
        GbStats stats;
        GbOptions gb = opts.gb;
        gb.stats = &stats;
        InstanceResult r = instances[k](gb);
        r.pair_reductions = stats.pair_reductions;
        return r;
    };

    TheoremReport report{tag, min_n, max_n, {}};
    report.instances.resize(instances.size());
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < instances.size(); ++k) report.instances[k] = run(k);
    } else {
        for (std::size_t start = 0; start < instances.size(); start += jobs) {
            std::vector<std::future<InstanceResult>> batch;
            for (std::size_t k = start; k < std::min(instances.size(), start + jobs); ++k)
                batch.push_back(std::async(std::launch::async, run, k));
            for (std::size_t k = 0; k < batch.size(); ++k) report.instances[start + k] = batch[k].get();
        }
    }
    if (opts.gb.stats)
        for (const InstanceResult& r : report.instances) opts.gb.stats->pair_reductions += r.pair_reductions;
    return report;
}

} // namespace hankel
