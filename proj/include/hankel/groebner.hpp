#pragma once

// Division, Buchberger's algorithm and the decision procedures built on
// reduced Groebner bases.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hankel/error.hpp"
#include "hankel/ring.hpp"

namespace hankel {

inline constexpr std::size_t default_gb_budget = 100000;

/// Running totals across Groebner basis computations.
struct GbStats {
    std::size_t gb_calls = 0;
    std::size_t pair_reductions = 0;
};

struct GbOptions {
    /// Maximum S-pair reductions for a single Buchberger run.
    std::size_t budget = default_gb_budget;
    /// Skip pairs whose leading monomials are coprime.
    bool coprime_criterion = true;
    /// Optional accumulator; callers must not share it across threads.
    GbStats* stats = nullptr;
};

/// A nonempty list of nonzero generators over one context.
class Ideal {
public:
    Ideal(VariableContext ctx, std::vector<Polynomial> generators) : ctx_(ctx), gens_(std::move(generators)) {
        if (gens_.empty()) throw DomainError("an ideal needs at least one generator");
        for (const Polynomial& g : gens_) {
            if (!(g.context() == ctx_)) throw ContextMismatch();
            if (g.is_zero()) throw DomainError("ideal generators must be nonzero");
        }
    }

    explicit Ideal(std::vector<Polynomial> generators)
        : Ideal(generators.empty() ? throw DomainError("an ideal needs at least one generator")
                                   : generators.front().context(),
                std::move(generators)) {}

    const VariableContext& context() const noexcept { return ctx_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }

    /// Same ideal with duplicate generators removed (first occurrence kept).
    Ideal normalized() const {
        std::vector<Polynomial> out;
        for (const Polynomial& g : gens_)
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        return Ideal(ctx_, std::move(out));
    }

private:
    VariableContext ctx_;
    std::vector<Polynomial> gens_;
};

/// Monomial ideal stored by its unique minimal generating set.
class MonomialIdeal {
public:
    MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
        for (const Monomial& m : generators)
            if (m.size() != nvars) throw ContextMismatch();
        std::sort(generators.begin(), generators.end(), canonical_less);
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (const Monomial& m : generators) {
            bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
            if (!redundant) gens_.push_back(m);
        }
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    bool is_unit() const { return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); }); }
    bool is_zero() const { return gens_.empty(); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    // Degree first, then lex descending; lower degrees first means a
    // generator is only ever divisible by an earlier one.
    static bool canonical_less(const Monomial& a, const Monomial& b) {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a > b;
    }

    std::size_t nvars_;
    std::vector<Monomial> gens_;
};

inline std::string to_string(const MonomialIdeal& m, const VariableContext& ctx) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.generators().size(); ++i) {
        if (i) out += ", ";
        out += format_monomial(m.generators()[i], ctx);
    }
    return out + ")";
}

struct ReducedGroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    Ideal source;

    bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
};

namespace detail {

using TermList = std::vector<Term>;

/// Terms sorted descending under `ord`.
inline TermList ordered_terms(const Polynomial& p, const MonomialOrder& ord) {
    TermList out = p.terms();
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return cmp_monomials(a.mono, b.mono, ord) > 0; });
    return out;
}

/// p - c * m * g for ordered p and g; the result stays ordered because every
/// monomial order is multiplicative.
inline TermList sub_scaled(const TermList& p, const Rational& c, const Monomial& m, const TermList& g,
                           const MonomialOrder& ord) {
    TermList out;
    out.reserve(p.size() + g.size());
    auto i = p.begin();
    auto j = g.begin();
    Monomial gm;
    bool have_gm = false;
    while (i != p.end() || j != g.end()) {
        if (j != g.end() && !have_gm) {
            gm = j->mono * m;
            have_gm = true;
        }
        if (j == g.end()) {
            out.push_back(*i++);
            continue;
        }
        if (i == p.end()) {
            out.push_back(Term{-(c * j->coeff), gm});
            ++j;
            have_gm = false;
            continue;
        }
        auto cmp = cmp_monomials(i->mono, gm, ord);
        if (cmp > 0) {
            out.push_back(*i++);
        } else if (cmp < 0) {
            out.push_back(Term{-(c * j->coeff), gm});
            ++j;
            have_gm = false;
        } else {
            Rational v = i->coeff - c * j->coeff;
            if (v != 0) out.push_back(Term{std::move(v), gm});
            ++i;
            ++j;
            have_gm = false;
        }
    }
    return out;
}

inline void make_monic(TermList& p) {
    if (p.empty() || p.front().coeff == 1) return;
    const Rational inv = 1 / p.front().coeff;
    for (Term& t : p) t.coeff *= inv;
}

/// Multivariate division against an ordered list of divisors.
class Reducer {
public:
    explicit Reducer(MonomialOrder ord) : ord_(ord) {}

    void add(TermList divisor) {
        if (divisor.empty()) throw DomainError("division by the zero polynomial");
        divisors_.push_back(std::move(divisor));
    }

    std::size_t size() const noexcept { return divisors_.size(); }
    const TermList& divisor(std::size_t i) const { return divisors_[i]; }

    /// Fully reduced remainder, ordered descending under the order.
    TermList reduce(TermList p, std::size_t skip = static_cast<std::size_t>(-1)) const {
        TermList rem;
        while (!p.empty()) {
            const Term& lead = p.front();
            const TermList* hit = nullptr;
            for (std::size_t k = 0; k < divisors_.size(); ++k) {
                if (k == skip) continue;
                if (divisors_[k].front().mono.divides(lead.mono)) {
                    hit = &divisors_[k];
                    break;
                }
            }
            if (hit == nullptr) {
                rem.push_back(lead);
                p.erase(p.begin());
                continue;
            }
            const Rational c = lead.coeff / hit->front().coeff;
            const Monomial m = lead.mono.quotient(hit->front().mono);
            p = sub_scaled(p, c, m, *hit, ord_);
        }
        return rem;
    }

private:
    MonomialOrder ord_;
    std::vector<TermList> divisors_;
};

inline Polynomial from_ordered(const VariableContext& ctx, TermList terms) {
    return Polynomial::from_terms(ctx, std::move(terms));
}

inline TermList s_poly_ordered(const TermList& f, const TermList& g, const MonomialOrder& ord) {
    const Monomial l = lcm(f.front().mono, g.front().mono);
    // (L / lt(f)) f - (L / lt(g)) g
    const Rational cf = 1 / f.front().coeff;
    const Rational cg = 1 / g.front().coeff;
    TermList scaled_f;
    scaled_f.reserve(f.size());
    const Monomial mf = l.quotient(f.front().mono);
    for (const Term& t : f) scaled_f.push_back(Term{t.coeff * cf, t.mono * mf});
    return sub_scaled(scaled_f, cg, l.quotient(g.front().mono), g, ord);
}

} // namespace detail

inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    detail::Reducer reducer(ord);
    for (const Polynomial& b : basis) {
        if (!(b.context() == p.context())) throw ContextMismatch();
        reducer.add(detail::ordered_terms(b, ord));
    }
    return detail::from_ordered(p.context(), reducer.reduce(detail::ordered_terms(p, ord)));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of the zero polynomial");
    if (!(f.context() == g.context())) throw ContextMismatch();
    return detail::from_ordered(f.context(),
                                detail::s_poly_ordered(detail::ordered_terms(f, ord), detail::ordered_terms(g, ord), ord));
}

/// Buchberger's criterion checked pair by pair, with no pair skipped.
inline bool is_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    if (gens.empty()) return true;
    detail::Reducer reducer(ord);
    for (const Polynomial& g : gens) {
        if (!(g.context() == gens.front().context())) throw ContextMismatch();
        reducer.add(detail::ordered_terms(g, ord));
    }
    for (std::size_t i = 0; i < reducer.size(); ++i)
        for (std::size_t j = i + 1; j < reducer.size(); ++j)
            if (!reducer.reduce(detail::s_poly_ordered(reducer.divisor(i), reducer.divisor(j), ord)).empty())
                return false;
    return true;
}

/// Canonical reduced Groebner basis: monic, interreduced, sorted ascending by
/// leading monomial. Pairs are taken by the normal strategy (smallest lcm).
inline ReducedGroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, const GbOptions& opts = {}) {
    const VariableContext& ctx = ideal.context();
    if (ord.kind == MonomialOrder::Kind::block_elim && ord.block > ctx.size()) throw ContextMismatch();
    if (opts.stats) ++opts.stats->gb_calls;

    auto unit_basis = [&] {
        return ReducedGroebnerBasis{{Polynomial::constant(ctx, 1)}, ord, ideal};
    };

    detail::Reducer basis(ord);
    for (const Polynomial& g : ideal.generators()) {
        detail::TermList t = detail::ordered_terms(g, ord);
        detail::make_monic(t);
        if (t.front().mono.is_one()) return unit_basis();
        basis.add(std::move(t));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial& a = basis.divisor(i).front().mono;
            const Monomial& b = basis.divisor(j).front().mono;
            if (opts.coprime_criterion && coprime(a, b)) continue;
            pairs.push_back(Pair{i, j, lcm(a, b)});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            auto c = cmp_monomials(pairs[k].lcm, pairs[best].lcm, ord);
            if (c < 0 || (c == 0 && std::pair(pairs[k].i, pairs[k].j) < std::pair(pairs[best].i, pairs[best].j)))
                best = k;
        }
        const Pair pr = pairs[best];
        pairs[best] = std::move(pairs.back());
        pairs.pop_back();

        if (processed == opts.budget) throw BudgetExhausted(processed);
        ++processed;
        if (opts.stats) ++opts.stats->pair_reductions;

        detail::TermList r =
            basis.reduce(detail::s_poly_ordered(basis.divisor(pr.i), basis.divisor(pr.j), ord));
        if (r.empty()) continue;
        detail::make_monic(r);
        if (r.front().mono.is_one()) return unit_basis();
        basis.add(std::move(r));
        add_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is a multiple of another's.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis.divisor(i).front().mono;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = basis.divisor(j).front().mono;
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }

    detail::Reducer minimal(ord);
    for (std::size_t i : keep) minimal.add(basis.divisor(i));

    std::vector<std::pair<Monomial, Polynomial>> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        const detail::TermList& g = minimal.divisor(k);
        detail::TermList tail(g.begin() + 1, g.end());
        detail::TermList out{g.front()};
        for (Term& t : minimal.reduce(std::move(tail), k)) out.push_back(std::move(t));
        detail::make_monic(out);
        Monomial lm = out.front().mono;
        reduced.emplace_back(std::move(lm), detail::from_ordered(ctx, std::move(out)));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const auto& a, const auto& b) { return cmp_monomials(a.first, b.first, ord) < 0; });

    ReducedGroebnerBasis gb{{}, ord, ideal};
    for (auto& [lm, p] : reduced) gb.elements.push_back(std::move(p));
    return gb;
}

inline bool ideal_member(const Polynomial& p, const Ideal& ideal, const MonomialOrder& ord, const GbOptions& opts = {}) {
    if (!(p.context() == ideal.context())) throw ContextMismatch();
    if (p.is_zero()) return true;
    return normal_form(p, buchberger(ideal, ord, opts).elements, ord).is_zero();
}

inline bool ideals_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord, const GbOptions& opts = {}) {
    if (!(a.context() == b.context())) throw ContextMismatch();
    return buchberger(a, ord, opts).elements == buchberger(b, ord, opts).elements;
}

inline MonomialIdeal initial_ideal_of(const ReducedGroebnerBasis& gb) {
    std::vector<Monomial> lms;
    for (const Polynomial& g : gb.elements) lms.push_back(leading_monomial(g, gb.order));
    return MonomialIdeal(gb.source.context().size(), std::move(lms));
}

inline MonomialIdeal initial_ideal(const Ideal& ideal, const MonomialOrder& ord, const GbOptions& opts = {}) {
    return initial_ideal_of(buchberger(ideal, ord, opts));
}

} // namespace hankel
