#pragma once

// Hankel edge ideals, structured prime certificates and property checks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hankel/error.hpp"
#include "hankel/graphs.hpp"
#include "hankel/groebner.hpp"
#include "hankel/ideal_ops.hpp"
#include "hankel/ring.hpp"

namespace hankel {

/// The ring k[x_1..x_{n+1}] for a graph on n vertices.
inline VariableContext hankel_context(int n) { return VariableContext(static_cast<std::size_t>(n) + 1); }

/// x_i (1-based) in ctx.
inline Polynomial x(const VariableContext& ctx, int i) {
    if (i < 1) throw DomainError("variable indices start at 1");
    return Polynomial::variable(ctx, static_cast<std::size_t>(i - 1));
}

/// g_ij = x_i x_{j+1} - x_j x_{i+1}, the 2-minor of columns i and j of the Hankel matrix.
inline Polynomial hankel_minor(const VariableContext& ctx, int i, int j) {
    return x(ctx, i) * x(ctx, j + 1) - x(ctx, j) * x(ctx, i + 1);
}

struct HankelIdeal {
    LabeledGraph graph;
    Ideal ideal;
    std::map<Edge, Polynomial> generator_index;
};

inline HankelIdeal hankel_edge_ideal(const LabeledGraph& g) {
    if (g.edge_count() == 0) throw DomainError("edgeless graph");
    const VariableContext ctx = hankel_context(g.n());
    std::vector<Polynomial> gens;
    std::map<Edge, Polynomial> index;
    for (const Edge& e : g.edges()) {
        gens.push_back(hankel_minor(ctx, e.i, e.j));
        index.emplace(e, gens.back());
    }
    return HankelIdeal{g, Ideal(ctx, std::move(gens)), std::move(index)};
}

/// Ideal of all 2-minors of the 2 x n Hankel matrix (the rational normal curve).
inline Ideal hankel_full_ideal(int n) {
    if (n < 2) throw DomainError("the Hankel matrix needs n >= 2 columns");
    return hankel_edge_ideal(complete_graph(n)).ideal;
}

// ---------------------------------------------------------------------------

/// (variables) + (all 2-minors g_ij, a <= i < j <= b) with the minors living
/// in variables x_a..x_{b+1} disjoint from the listed ones. Such ideals are
/// prime: a variable ideal plus the rational normal curve ideal in the
/// remaining disjoint block.
struct StructuredPrime {
    std::vector<int> variables;  // sorted, 1-based
    std::optional<std::pair<int, int>> minors;

    static StructuredPrime of_variables(std::vector<int> vars) {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return StructuredPrime{std::move(vars), std::nullopt};
    }

    /// Variables from `vars` plus minors on [a, b]; a degenerate range (a >= b) adds nothing.
    static StructuredPrime with_minors(std::vector<int> vars, int a, int b) {
        StructuredPrime p = of_variables(std::move(vars));
        if (a < b) p.minors = std::pair(a, b);
        return p;
    }

    /// The rational normal curve ideal for n columns.
    static StructuredPrime rational_normal_curve(int n) { return with_minors({}, 1, n); }

    void validate(int n) const {
        if (variables.empty() && !minors) throw DomainError("structured prime has no generators");
        for (int v : variables)
            if (v < 1 || v > n + 1) throw DomainError("structured prime variable x" + std::to_string(v) + " out of range");
        if (minors) {
            auto [a, b] = *minors;
            if (a < 1 || b > n || a >= b) throw DomainError("minor range must satisfy 1 <= a < b <= n");
            for (int v : variables)
                if (v >= a && v <= b + 1)
                    throw DomainError("structured prime variables overlap the minor block x" + std::to_string(a) +
                                      "..x" + std::to_string(b + 1));
        }
    }

    friend bool operator==(const StructuredPrime&, const StructuredPrime&) = default;
};

inline std::string to_string(const StructuredPrime& p) {
    std::string out;
    if (!p.variables.empty()) {
        out = "(";
        for (std::size_t k = 0; k < p.variables.size(); ++k) {
            if (k) out += ", ";
            out += "x" + std::to_string(p.variables[k]);
        }
        out += ")";
    }
    if (p.minors) {
        if (!out.empty()) out += " + ";
        out += "minors[" + std::to_string(p.minors->first) + ".." + std::to_string(p.minors->second) + "]";
    }
    return out;
}

/// Parses `vars=1,2;minors=3..5` (either part optional).
inline StructuredPrime parse_structured_prime(const std::string& text) {
    StructuredPrime p;
    std::istringstream in(text);
    std::string part;
    auto bad = [&] { return ParseError("malformed prime '" + text + "' (expected vars=1,2;minors=3..5)", 0); };
    while (std::getline(in, part, ';')) {
        part.erase(std::remove_if(part.begin(), part.end(), [](char c) { return c == ' '; }), part.end());
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw bad();
        const std::string key = part.substr(0, eq);
        const std::string value = part.substr(eq + 1);
        try {
            if (key == "vars") {
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ',')) {
                    if (!item.empty() && (item.front() == 'x')) item.erase(0, 1);
                    std::size_t used = 0;
                    p.variables.push_back(std::stoi(item, &used));
                    if (used != item.size()) throw bad();
                }
            } else if (key == "minors") {
                const auto dots = value.find("..");
                if (dots == std::string::npos) throw bad();
                p.minors = std::pair(std::stoi(value.substr(0, dots)), std::stoi(value.substr(dots + 2)));
            } else {
                throw bad();
            }
        } catch (const std::logic_error&) {
            throw bad();
        }
    }
    std::sort(p.variables.begin(), p.variables.end());
    p.variables.erase(std::unique(p.variables.begin(), p.variables.end()), p.variables.end());
    if (p.variables.empty() && !p.minors) throw bad();
    return p;
}

inline Ideal expand_structured_prime(const StructuredPrime& p, const VariableContext& ctx) {
    const int n = static_cast<int>(ctx.base_count()) - 1;
    p.validate(n);
    std::vector<Polynomial> gens;
    for (int v : p.variables) gens.push_back(x(ctx, v));
    if (p.minors)
        for (int i = p.minors->first; i <= p.minors->second; ++i)
            for (int j = i + 1; j <= p.minors->second; ++j) gens.push_back(hankel_minor(ctx, i, j));
    return Ideal(ctx, std::move(gens));
}

namespace detail {

inline std::vector<int> range_vars(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline void push_unique(std::vector<StructuredPrime>& list, StructuredPrime p) {
    if (std::find(list.begin(), list.end(), p) == list.end()) list.push_back(std::move(p));
}

} // namespace detail

/// Known minimal-prime lists: labeled Hamiltonian, labeled semi-Hamiltonian,
/// and the rooted paths T1(n) (leaf 2) and T2(n) (leaf 3).
inline std::vector<StructuredPrime> minimal_prime_candidates(const LabeledGraph& g) {
    using detail::concat;
    using detail::range_vars;
    const int n = g.n();
    const LabelClass cls = classify_labeling(g);
    const StructuredPrime curve = StructuredPrime::rational_normal_curve(n);

    if (cls.labeled_hamiltonian) return {curve};
    if (cls.labeled_semi_hamiltonian) return {curve, StructuredPrime::of_variables(range_vars(2, n))};

    if (n >= 3 && g == t1_graph(n)) {
        // At n = 3 the variable ideals (x1,x2,x4..) and (x1,x2)+minors coincide and
        // (x2,x3) misses g_13 = x1x4 - x2x3, leaving two components.
        if (n == 3) return {curve, StructuredPrime::of_variables({1, 2})};
        // At n = 4 the ideal (x1,x2,x4) misses g_34 = x3x5 - x4^2.
        if (n == 4)
            return {curve, StructuredPrime::of_variables(range_vars(2, n)), StructuredPrime::with_minors({1, 2}, 3, n)};
        return {curve, StructuredPrime::of_variables(concat({1, 2}, range_vars(4, n))),
                StructuredPrime::of_variables(range_vars(2, n)), StructuredPrime::with_minors({1, 2}, 3, n)};
    }
    if (n >= 4 && g == t2_graph(n)) {
        std::vector<StructuredPrime> out{curve, StructuredPrime::of_variables(concat({1, 2}, range_vars(4, n))),
                                         StructuredPrime::of_variables(range_vars(2, n))};
        detail::push_unique(out, StructuredPrime::with_minors({1, 2, 3}, 4, n));
        // For n = 5 the ideal (x1,x2,x3,x5) misses g_45 = x4x6 - x5^2.
        if (n != 5) detail::push_unique(out, StructuredPrime::of_variables(concat({1, 2, 3}, range_vars(5, n))));
        return out;
    }
    throw DomainError("no candidate list known");
}

// ---------------------------------------------------------------------------

struct CandidateVerdict {
    StructuredPrime prime;
    bool contains_ideal = false;
    bool incomparable_with_others = false;
};

struct MinPrimesReport {
    std::vector<CandidateVerdict> verdicts;
    /// I ⊆ ∩P and every generator of ∩P lies in rad(I).
    bool intersection_matches_radical = false;
    std::optional<Ideal> intersection;
    std::vector<std::string> evidence;

    bool verified() const {
        return intersection_matches_radical &&
               std::all_of(verdicts.begin(), verdicts.end(),
                           [](const CandidateVerdict& v) { return v.contains_ideal && v.incomparable_with_others; });
    }
};

/// Checks that the candidates are exactly the minimal primes of the ideal:
/// each contains it, they are pairwise incomparable, and their intersection
/// has the same radical. Primality comes from the StructuredPrime shape.
inline MinPrimesReport verify_minimal_primes(const HankelIdeal& h, const std::vector<StructuredPrime>& candidates,
                                             const GbOptions& opts = {}) {
    if (candidates.empty()) throw DomainError("empty candidate list");
    const VariableContext& ctx = h.ideal.context();
    const MonomialOrder ord = MonomialOrder::rev_lex();

    std::vector<Ideal> expanded;
    std::vector<ReducedGroebnerBasis> bases;
    for (const StructuredPrime& p : candidates) {
        expanded.push_back(expand_structured_prime(p, ctx));
        bases.push_back(buchberger(expanded.back(), ord, opts));
    }
    auto contained_in = [&](const Ideal& a, std::size_t k) {
        return std::all_of(a.generators().begin(), a.generators().end(),
                           [&](const Polynomial& g) { return normal_form(g, bases[k].elements, ord).is_zero(); });
    };

    MinPrimesReport report;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        CandidateVerdict v{candidates[k]};
        v.contains_ideal = contained_in(h.ideal, k);
        v.incomparable_with_others = true;
        for (std::size_t j = 0; j < candidates.size(); ++j)
            if (j != k && (contained_in(expanded[k], j) || contained_in(expanded[j], k)))
                v.incomparable_with_others = false;
        report.evidence.push_back(to_string(candidates[k]) + (v.contains_ideal ? " contains I" : " does not contain I") +
                                  (v.incomparable_with_others ? ", incomparable" : ", comparable to another candidate"));
        report.verdicts.push_back(std::move(v));
    }

    Ideal meet = expanded.front();
    for (std::size_t k = 1; k < expanded.size(); ++k) meet = intersect_ideals(meet, expanded[k], opts);

    const ReducedGroebnerBasis meet_gb = buchberger(meet, ord, opts);
    const bool inside = std::all_of(h.ideal.generators().begin(), h.ideal.generators().end(), [&](const Polynomial& g) {
        return normal_form(g, meet_gb.elements, ord).is_zero();
    });
    bool radical = inside;
    for (std::size_t k = 0; radical && k < meet.generators().size(); ++k)
        radical = radical_member(meet.generators()[k], h.ideal, opts);
    report.intersection_matches_radical = inside && radical;
    report.evidence.push_back(std::string("I ⊆ ∩P: ") + (inside ? "yes" : "no"));
    report.evidence.push_back(std::string("∩P ⊆ rad(I): ") + (radical ? "yes" : "no"));
    report.intersection = std::move(meet);
    return report;
}

// ---------------------------------------------------------------------------

struct PropertyOptions {
    bool check_minimality = true;
    bool check_radical = true;
    GbOptions gb{};
};

struct PropertyReport {
    std::size_t mu = 0;
    std::optional<bool> mu_minimal;  // empty when the check was skipped
    std::size_t height = 0;
    bool is_CI = false;
    bool is_almost_CI = false;
    std::optional<bool> is_radical;  // empty = unknown
    std::vector<std::string> evidence;
};

inline PropertyReport property_report(const LabeledGraph& g, const PropertyOptions& opts = {}) {
    if (g.edge_count() == 0) throw DomainError("edgeless graph");
    if (!g.is_connected()) throw DomainError("property reports need a connected graph");
    const HankelIdeal h = hankel_edge_ideal(g);
    const MonomialOrder ord = MonomialOrder::rev_lex();

    PropertyReport r;
    r.mu = g.edge_count();
    if (opts.check_minimality) {
        r.mu_minimal = is_minimal_generating_set(h.ideal, ord, opts.gb);
        r.evidence.push_back(std::string("generators minimal: ") + (*r.mu_minimal ? "yes" : "no"));
    } else {
        r.evidence.push_back("generators minimal: assumed (binomial 2-minors of distinct columns)");
    }
    r.height = height(h.ideal, ord, opts.gb);
    r.evidence.push_back("height from initial ideal: " + std::to_string(r.height));
    const bool minimal = r.mu_minimal.value_or(true);
    r.is_CI = minimal && r.mu == r.height;
    r.is_almost_CI = minimal && r.mu == r.height + 1;

    if (opts.check_radical) {
        std::vector<StructuredPrime> candidates;
        try {
            candidates = minimal_prime_candidates(g);
        } catch (const DomainError&) {
            r.evidence.push_back("radical: unknown (no candidate list for this graph)");
        }
        if (!candidates.empty()) {
            MinPrimesReport mp = verify_minimal_primes(h, candidates, opts.gb);
            if (mp.verified()) {
                r.is_radical = ideals_equal(h.ideal, *mp.intersection, ord, opts.gb);
                r.evidence.push_back(std::string("radical: I ") + (*r.is_radical ? "equals" : "differs from") +
                                     " the intersection of its verified minimal primes");
            } else {
                r.evidence.push_back("radical: unknown (candidate list failed verification)");
            }
        }
    } else {
        r.evidence.push_back("radical: not checked");
    }
    return r;
}

} // namespace hankel
