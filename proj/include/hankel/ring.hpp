#pragma once

// Exact sparse multivariate polynomials over the rationals.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hankel/error.hpp"

namespace hankel {

using Rational = mpq_class;
using Exponent = std::uint32_t;

enum class AuxRole : std::uint8_t { elimination, rabinowitsch };

/// Variables x_1..x_{base} followed by auxiliary variables t_1..t_k.
///
/// Base variables keep their indices when auxiliaries are appended, so a
/// polynomial over the base context embeds into any extension unchanged.
class VariableContext {
public:
    static constexpr std::size_t max_aux = 4;

    explicit VariableContext(std::size_t base_count) : base_(base_count) {
        if (base_count < 2) throw DomainError("variable context needs at least two base variables");
    }

    std::size_t base_count() const noexcept { return base_; }
    std::size_t aux_count() const noexcept { return aux_; }
    std::size_t size() const noexcept { return base_ + aux_; }

    AuxRole aux_role(std::size_t k) const {
        if (k >= aux_) throw DomainError("auxiliary index out of range");
        return roles_[k];
    }

    VariableContext with_aux(AuxRole role) const {
        if (aux_ == max_aux) throw DomainError("too many auxiliary variables");
        VariableContext out = *this;
        out.roles_[out.aux_++] = role;
        return out;
    }

    VariableContext base() const { return VariableContext(base_); }

    /// Display name of the 0-based variable `index`: x1..x{base}, then t1..tk.
    std::string name(std::size_t index) const {
        if (index < base_) return "x" + std::to_string(index + 1);
        if (index < size()) return "t" + std::to_string(index - base_ + 1);
        throw DomainError("variable index out of range");
    }

    friend bool operator==(const VariableContext&, const VariableContext&) = default;

private:
    std::size_t base_;
    std::size_t aux_ = 0;
    std::array<AuxRole, max_aux> roles_{};
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
        Monomial m(nvars);
        m.exps_.at(index) = power;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Indices of variables with a positive exponent.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0) out.push_back(i);
        return out;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
        return out;
    }

    /// this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const {
        Monomial out = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
        return out;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return out;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

    Monomial resized(std::size_t nvars) const {
        Monomial out = *this;
        out.exps_.resize(nvars, 0);
        return out;
    }

    // Plain lexicographic comparison of exponent vectors (x1 most significant).
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

/// Total order on monomials of a single context.
///
/// BlockElim(k) puts the last k variables in an elimination block: the block
/// is compared first (degree, then lex), ties fall back to RevLex on the rest.
struct MonomialOrder {
    enum class Kind { rev_lex, lex, block_elim };

    Kind kind = Kind::rev_lex;
    std::size_t block = 0;

    static constexpr MonomialOrder rev_lex() { return {Kind::rev_lex, 0}; }
    static constexpr MonomialOrder lex() { return {Kind::lex, 0}; }
    static constexpr MonomialOrder block_elim(std::size_t k) { return {Kind::block_elim, k}; }

    std::string name() const {
        switch (kind) {
        case Kind::rev_lex: return "revlex";
        case Kind::lex: return "lex";
        case Kind::block_elim: return "blockelim(" + std::to_string(block) + ")";
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline std::strong_ordering rev_lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

} // namespace detail

inline std::strong_ordering cmp_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.size() != b.size()) throw ContextMismatch();
    const std::size_t n = a.size();
    switch (ord.kind) {
    case MonomialOrder::Kind::rev_lex: return detail::rev_lex_range(a, b, 0, n);
    case MonomialOrder::Kind::lex: return detail::lex_range(a, b, 0, n);
    case MonomialOrder::Kind::block_elim: {
        if (ord.block > n) throw ContextMismatch();
        const std::size_t split = n - ord.block;
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = split; i < n; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da <=> db;
        if (auto c = detail::lex_range(a, b, split, n); c != 0) return c;
        return detail::rev_lex_range(a, b, 0, split);
    }
    }
    return std::strong_ordering::equal;
}

struct Term {
    Rational coeff;
    Monomial mono;

    friend bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.mono == b.mono; }
};

/// Sparse polynomial with terms kept in descending lex order of exponent
/// vectors, whatever order later operations use. Equality is structural.
class Polynomial {
public:
    explicit Polynomial(VariableContext ctx) : ctx_(ctx) {}

    /// Builds a polynomial from arbitrary terms: merges duplicates, drops zeros.
    static Polynomial from_terms(VariableContext ctx, std::vector<Term> terms) {
        for (const Term& t : terms)
            if (t.mono.size() != ctx.size()) throw ContextMismatch();
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
        Polynomial out(ctx);
        for (Term& t : terms) {
            if (!out.terms_.empty() && out.terms_.back().mono == t.mono)
                out.terms_.back().coeff += t.coeff;
            else
                out.terms_.push_back(std::move(t));
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        }
        return out;
    }

    static Polynomial constant(VariableContext ctx, const Rational& c) {
        return from_terms(ctx, {Term{c, Monomial(ctx.size())}});
    }

    /// The 0-based variable `index` of the context.
    static Polynomial variable(VariableContext ctx, std::size_t index) {
        if (index >= ctx.size()) throw DomainError("variable index out of range");
        return from_terms(ctx, {Term{Rational(1), Monomial::variable(ctx.size(), index)}});
    }

    static Polynomial monomial(VariableContext ctx, Monomial m, const Rational& c = 1) {
        return from_terms(ctx, {Term{c, std::move(m)}});
    }

    const VariableContext& context() const noexcept { return ctx_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

    bool is_homogeneous() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
    }

    bool uses_variable(std::size_t index) const {
        return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[index] != 0; });
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (Term& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) { return merge(p, q, false); }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return merge(p, q, true); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (!(p.ctx_ == q.ctx_)) throw ContextMismatch();
        Polynomial acc(p.ctx_);
        for (const Term& t : q.terms_) acc = acc + p.times_term(t);
        return acc;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        if (c == 0) return Polynomial(p.ctx_);
        Polynomial out = p;
        for (Term& t : out.terms_) t.coeff *= c;
        return out;
    }

    /// Multiplication by a single term; preserves the canonical order.
    Polynomial times_term(const Term& t) const {
        if (t.mono.size() != ctx_.size()) throw ContextMismatch();
        Polynomial out(ctx_);
        if (t.coeff == 0) return out;
        out.terms_.reserve(terms_.size());
        for (const Term& s : terms_) out.terms_.push_back(Term{s.coeff * t.coeff, s.mono * t.mono});
        return out;
    }

    /// Reinterprets the polynomial in `target`, which must agree on the base
    /// variables; variables missing from `target` must not occur.
    Polynomial in_context(VariableContext target) const {
        if (target.base_count() != ctx_.base_count()) throw ContextMismatch();
        Polynomial out(target);
        for (const Term& t : terms_) {
            for (std::size_t i = target.size(); i < ctx_.size(); ++i)
                if (t.mono[i] != 0) throw DomainError("polynomial uses a variable absent from the target context");
            out.terms_.push_back(Term{t.coeff, t.mono.resized(target.size())});
        }
        // Resizing only appends/removes trailing zero exponents, so lex order is kept.
        return out;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.ctx_ == q.ctx_ && p.terms_ == q.terms_;
    }

private:
    static Polynomial merge(const Polynomial& p, const Polynomial& q, bool subtract) {
        if (!(p.ctx_ == q.ctx_)) throw ContextMismatch();
        Polynomial out(p.ctx_);
        out.terms_.reserve(p.terms_.size() + q.terms_.size());
        auto i = p.terms_.begin();
        auto j = q.terms_.begin();
        while (i != p.terms_.end() || j != q.terms_.end()) {
            if (j == q.terms_.end() || (i != p.terms_.end() && i->mono > j->mono)) {
                out.terms_.push_back(*i++);
            } else if (i == p.terms_.end() || j->mono > i->mono) {
                out.terms_.push_back(Term{subtract ? Rational(-j->coeff) : j->coeff, j->mono});
                ++j;
            } else {
                Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
                if (c != 0) out.terms_.push_back(Term{std::move(c), i->mono});
                ++i;
                ++j;
            }
        }
        return out;
    }

    VariableContext ctx_;
    std::vector<Term> terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline const Term& leading_term(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw DomainError("leading term of zero");
    const Term* best = &p.terms().front();
    for (const Term& t : p.terms())
        if (cmp_monomials(t.mono, best->mono, ord) > 0) best = &t;
    return *best;
}

inline const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& ord) {
    return leading_term(p, ord).mono;
}

// ---------------------------------------------------------------------------
// Text form: `x1*x3 - x2^2`, `1/2*x1*t1^3 + 4`.

inline std::string format_monomial(const Monomial& m, const VariableContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ctx.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

/// Prints terms in descending order under `ord`.
inline std::string to_string(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<const Term*> order;
    for (const Term& t : p.terms()) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [&](const Term* a, const Term* b) { return cmp_monomials(a->mono, b->mono, ord) > 0; });
    std::string out;
    for (const Term* t : order) {
        const bool negative = sgn(t->coeff) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational mag = abs(t->coeff);
        if (t->mono.is_one())
            out += mag.get_str();
        else if (mag == 1)
            out += format_monomial(t->mono, p.context());
        else
            out += mag.get_str() + "*" + format_monomial(t->mono, p.context());
    }
    return out;
}

/// Descending lex, the storage order, so g_ij reads x_i*x_{j+1} - x_j*x_{i+1}.
inline std::string to_string(const Polynomial& p) { return to_string(p, MonomialOrder::lex()); }

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace detail {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, VariableContext ctx) : text_(text), ctx_(ctx) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = take() == '-';
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Term t = parse_term();
            if (negative) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            first = false;
            skip_ws();
        }
        return Polynomial::from_terms(ctx_, std::move(terms));
    }

private:
    Term parse_term() {
        Term t{Rational(1), Monomial(ctx_.size())};
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = parse_rational();
            skip_ws();
            need_factor = false;
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
                need_factor = true;
            } else if (!at_end() && (peek() == 'x' || peek() == 't')) {
                need_factor = true;
            }
        }
        if (!need_factor) return t;
        while (true) {
            std::size_t index = parse_variable();
            skip_ws();
            Exponent e = 1;
            if (!at_end() && peek() == '^') {
                take();
                skip_ws();
                e = static_cast<Exponent>(parse_unsigned());
                skip_ws();
            }
            std::vector<Exponent> exps(t.mono.exponents().begin(), t.mono.exponents().end());
            exps[index] += e;
            t.mono = Monomial(std::move(exps));
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
                continue;
            }
            break;
        }
        return t;
    }

    std::size_t parse_variable() {
        if (at_end()) fail("expected a variable");
        const char kind = take();
        if (kind != 'x' && kind != 't') fail(std::string("unexpected character '") + kind + "'");
        const unsigned long idx = parse_unsigned();
        if (idx == 0) fail("variable indices start at 1");
        if (kind == 'x') {
            if (idx > ctx_.base_count()) fail("variable x" + std::to_string(idx) + " outside the context");
            return idx - 1;
        }
        if (idx > ctx_.aux_count()) fail("variable t" + std::to_string(idx) + " outside the context");
        return ctx_.base_count() + idx - 1;
    }

    Rational parse_rational() {
        std::string num = digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            take();
            skip_ws();
            std::string den = digits();
            const mpz_class d(den);
            if (d == 0) fail("zero denominator");
            Rational q{mpz_class(num), d};
            q.canonicalize();
            return q;
        }
        return Rational(mpz_class(num));
    }

    unsigned long parse_unsigned() {
        std::string d = digits();
        if (d.size() > 9) fail("number too large");
        return std::stoul(d);
    }

    std::string digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += take();
        if (out.empty()) fail("expected a number");
        return out;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1), 0);
    }

    std::string_view text_;
    VariableContext ctx_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const VariableContext& ctx) {
    return detail::PolynomialParser(text, ctx).parse();
}

} // namespace hankel
