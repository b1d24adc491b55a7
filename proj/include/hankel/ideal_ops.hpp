#pragma once

// Intersections, radical membership, heights and generation tests.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hankel/error.hpp"
#include "hankel/groebner.hpp"
#include "hankel/ring.hpp"

namespace hankel {

/// I ∩ J via t·I + (1 - t)·J, eliminating the auxiliary t.
inline Ideal intersect_ideals(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
    if (!(a.context() == b.context())) throw ContextMismatch();
    const VariableContext base = a.context();
    const VariableContext ext = base.with_aux(AuxRole::elimination);
    const std::size_t t_index = ext.size() - 1;
    const Polynomial t = Polynomial::variable(ext, t_index);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.generators()) gens.push_back(t * f.in_context(ext));
    for (const Polynomial& g : b.generators()) gens.push_back(one_minus_t * g.in_context(ext));

    const ReducedGroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), MonomialOrder::block_elim(1), opts);
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb.elements)
        if (!g.uses_variable(t_index)) out.push_back(g.in_context(base));
    return Ideal(base, std::move(out));
}

/// Rabinowitsch: p ∈ rad(I) iff I + (1 - y·p) is the unit ideal.
inline bool radical_member(const Polynomial& p, const Ideal& ideal, const GbOptions& opts = {}) {
    if (!(p.context() == ideal.context())) throw ContextMismatch();
    if (p.is_zero()) return true;
    const VariableContext ext = ideal.context().with_aux(AuxRole::rabinowitsch);
    const Polynomial y = Polynomial::variable(ext, ext.size() - 1);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : ideal.generators()) gens.push_back(g.in_context(ext));
    gens.push_back(Polynomial::constant(ext, 1) - y * p.in_context(ext));
    return buchberger(Ideal(ext, std::move(gens)), MonomialOrder::rev_lex(), opts).is_unit();
}

/// Generator-wise check that each ideal lies in the other's radical.
inline bool radicals_equal(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
    if (!(a.context() == b.context())) throw ContextMismatch();
    for (const Polynomial& g : a.generators())
        if (!radical_member(g, b, opts)) return false;
    for (const Polynomial& g : b.generators())
        if (!radical_member(g, a, opts)) return false;
    return true;
}

inline constexpr std::size_t max_dimension_vars = 24;

/// Krull dimension of k[x_1..x_v]/M: the largest variable subset U such that
/// no minimal generator of M is supported inside U. Exhaustive over subsets.
inline std::size_t monomial_dim(const MonomialIdeal& m, std::size_t total_vars) {
    if (m.is_unit()) throw DomainError("dimension of the unit ideal is undefined");
    if (total_vars < m.nvars()) throw ContextMismatch();
    if (total_vars > max_dimension_vars) throw DomainError("too many variables for exhaustive subset search");

    std::vector<std::uint32_t> supports;
    for (const Monomial& g : m.generators()) {
        std::uint32_t mask = 0;
        for (std::size_t i : g.support()) mask |= std::uint32_t{1} << i;
        supports.push_back(mask);
    }
    std::size_t best = 0;
    const std::uint32_t limit = std::uint32_t{1} << total_vars;
    for (std::uint32_t u = 0; u < limit; ++u) {
        const auto size = static_cast<std::size_t>(std::popcount(u));
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t s : supports)
            if ((s & ~u) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

/// height I = #vars - dim S/in(I).
inline std::size_t height(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::rev_lex(),
                          const GbOptions& opts = {}) {
    const MonomialIdeal in = initial_ideal(ideal, ord, opts);
    if (in.is_unit()) throw DomainError("height of the unit ideal is undefined");
    const std::size_t vars = ideal.context().size();
    return vars - monomial_dim(in, vars);
}

/// True iff no generator lies in the ideal of the others.
inline bool is_minimal_generating_set(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::rev_lex(),
                                      const GbOptions& opts = {}) {
    const auto& gens = ideal.generators();
    if (gens.size() == 1) return true;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != k) others.push_back(gens[j]);
        if (ideal_member(gens[k], Ideal(ideal.context(), std::move(others)), ord, opts)) return false;
    }
    return true;
}

/// Pairwise coprime minimal generators.
inline bool monomial_is_CI(const MonomialIdeal& m) {
    const auto& g = m.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!coprime(g[i], g[j])) return false;
    return true;
}

} // namespace hankel
