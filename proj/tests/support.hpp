#pragma once

// Independent brute-force oracles and random generators shared by the tests.
// Nothing here calls the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hankel/graphs.hpp"
#include "hankel/ring.hpp"

namespace oracle {

using hankel::Monomial;

/// RevLex straight from the definition: degree first, then the last nonzero
/// entry of a - b decides (negative means a is larger). Returns -1, 0, 1.
inline int revlex(const Monomial& a, const Monomial& b) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = a.size(); k-- > 0;) {
        const long d = static_cast<long>(a[k]) - static_cast<long>(b[k]);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

/// Krull dimension of k[x]/M by trying every subset of variables and testing
/// support containment for every generator.
inline std::size_t monomial_dim(const std::vector<Monomial>& gens, std::size_t nvars) {
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool independent = true;
        for (const Monomial& g : gens) {
            bool inside = true;
            for (std::size_t v = 0; v < nvars; ++v)
                if (g[v] != 0 && !(mask >> v & 1)) inside = false;
            if (inside) independent = false;
        }
        if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

/// Rooted labelings by the procedure itself: the labeled vertex with the
/// smallest label hands the next labels to its unlabeled neighbors, and a
/// labeling qualifies when it can be produced that way. Checked here over all
/// n! relabelings of `t`.
inline bool produced_by_procedure(const hankel::LabeledGraph& t) {
    const int n = t.n();
    int next = 2;
    std::vector<bool> labeled(static_cast<std::size_t>(n) + 1, false);
    labeled[1] = true;
    for (int v = 1; v <= n; ++v) {
        if (!labeled[v]) return false;
        std::vector<int> fresh;
        for (int u : t.neighbors(v))
            if (!labeled[u]) fresh.push_back(u);
        std::sort(fresh.begin(), fresh.end());
        // The new neighbors must receive exactly the next consecutive labels.
        for (int u : fresh) {
            if (u != next) return false;
            labeled[u] = true;
            ++next;
        }
    }
    return next == n + 1;
}

inline std::set<hankel::LabeledGraph> rooted_labelings_by_filter(const hankel::LabeledGraph& t) {
    std::vector<int> perm(static_cast<std::size_t>(t.n()) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<hankel::LabeledGraph> out;
    do {
        hankel::LabeledGraph g = t.relabeled(perm);
        if (produced_by_procedure(g)) out.insert(g);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return out;
}

/// Every labeled tree on n vertices, from all Prüfer sequences.
inline std::vector<hankel::LabeledGraph> all_labeled_trees(int n) {
    std::vector<hankel::LabeledGraph> out;
    if (n == 2) return {hankel::LabeledGraph(2, {{1, 2}})};
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
    for (;;) {
        std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
        for (int s : seq) ++degree[s];
        std::vector<hankel::Edge> edges;
        for (int s : seq) {
            int leaf = 1;
            while (degree[leaf] != 1) ++leaf;
            edges.push_back({leaf, s});
            --degree[leaf];
            --degree[s];
        }
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (degree[v] == 1) rest.push_back(v);
        edges.push_back({rest[0], rest[1]});
        out.emplace_back(n, edges);
        std::size_t k = 0;
        while (k < seq.size() && seq[k] == n) seq[k++] = 1;
        if (k == seq.size()) break;
        ++seq[k];
    }
    return out;
}

/// True if two trees are isomorphic, by trying all relabelings.
inline bool isomorphic(const hankel::LabeledGraph& a, const hankel::LabeledGraph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.n()) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (a.relabeled(perm) == b) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

} // namespace oracle

namespace gen {

using hankel::Monomial;
using hankel::Polynomial;
using hankel::Rational;
using hankel::VariableContext;

inline Monomial monomial(std::mt19937& rng, std::size_t nvars, unsigned max_exp) {
    std::vector<hankel::Exponent> e(nvars);
    for (auto& x : e) x = static_cast<hankel::Exponent>(rng() % (max_exp + 1));
    return Monomial(std::move(e));
}

inline Polynomial polynomial(std::mt19937& rng, const VariableContext& ctx, std::size_t max_terms, unsigned max_exp) {
    std::vector<hankel::Term> terms;
    const std::size_t count = rng() % (max_terms + 1);
    for (std::size_t k = 0; k < count; ++k) {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 4) + 1;
        terms.push_back({Rational{mpz_class(num), mpz_class(den)}, monomial(rng, ctx.size(), max_exp)});
        terms.back().coeff.canonicalize();
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

} // namespace gen
