#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace ordcalc {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

inline const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::LT: return "LT";
        case Cmp::EQ: return "EQ";
        case Cmp::GT: return "GT";
    }
    return "?";
}

inline Cmp flip(Cmp c) { return static_cast<Cmp>(-static_cast<int>(c)); }

/// An ordinal below epsilon_0.
///
/// Stored in Cantor normal form (sum of w^e * c with strictly decreasing
/// exponents and positive coefficients). Naturals below 2^64 are kept inline.
/// The base-2 normal form sum 2^{a_1} + ... + 2^{a_n} is available through
/// exponents(); it is derived, since 2^w = w makes the hereditary base-2
/// form of w refer to itself.
///
/// Values are immutable; copies share storage.
class Ordinal {
public:
    struct Term;

    Ordinal() noexcept = default;
    explicit Ordinal(std::uint64_t n) noexcept : small_(n) {}

    static Ordinal from_integer(const Integer& n);
    static Ordinal omega();
    /// Terms in any order; equal exponents are merged, zero coefficients dropped.
    static Ordinal from_cnf(std::vector<Term> terms);

    bool is_zero() const noexcept { return !terms_ && small_ == 0; }
    bool is_finite() const noexcept;
    bool is_limit() const noexcept;
    bool is_successor() const noexcept { return !is_zero() && !is_limit(); }

    std::optional<std::uint64_t> as_small() const noexcept {
        if (terms_) return std::nullopt;
        return small_;
    }
    std::optional<Integer> as_natural() const;

    std::size_t term_count() const noexcept;
    Ordinal exponent(std::size_t i) const;
    Integer coefficient(std::size_t i) const;
    std::vector<Term> cnf() const;

    /// Nesting depth of the Cantor form: 0 for zero, 1 for nonzero naturals.
    int depth() const;

    friend Cmp compare(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::EQ; }
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
        Cmp c = compare(a, b);
        return c == Cmp::LT ? std::strong_ordering::less
             : c == Cmp::GT ? std::strong_ordering::greater
                            : std::strong_ordering::equal;
    }

    friend Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
    friend Ordinal nat_prod(const Ordinal& a, const Ordinal& b);
    friend Ordinal ord_sum(const Ordinal& a, const Ordinal& b);
    friend Ordinal ord_mul(const Ordinal& a, const Ordinal& b);

private:
    using Terms = std::vector<Term>;

    static Ordinal make(Terms&& terms);
    static const Terms& terms_of(const Ordinal& x, Terms& scratch);

    std::uint64_t small_ = 0;
    // Non-null exactly when the value is infinite or a natural >= 2^64.
    std::shared_ptr<const Terms> terms_;
};

struct Ordinal::Term {
    Ordinal exponent;
    Integer coeff;
};

/// Configuration standing in for the cardinal kappa: index bound and work caps.
struct Universe {
    std::optional<Ordinal> bound;
    int max_depth = 8;
    int exponent_cap = 24;
    std::uint64_t work_budget = std::uint64_t{1} << 24;
    std::uint64_t max_power_bits = std::uint64_t{1} << 20;
};

inline void check_depth(const Ordinal& a, const Universe& u) {
    if (a.depth() > u.max_depth)
        throw BudgetError("ordinal nesting depth " + std::to_string(a.depth()) + " exceeds " +
                          std::to_string(u.max_depth));
}

inline void check_bound(const Ordinal& a, const Universe& u);

// ---------------------------------------------------------------------------

inline Ordinal Ordinal::from_integer(const Integer& n) {
    if (n < 0) throw PreconditionError("ordinal from negative integer");
    if (n <= std::numeric_limits<std::uint64_t>::max()) return Ordinal(static_cast<std::uint64_t>(n));
    Terms t;
    t.push_back(Term{Ordinal(), n});
    Ordinal r;
    r.terms_ = std::make_shared<const Terms>(std::move(t));
    return r;
}

inline Ordinal Ordinal::omega() {
    Terms t;
    t.push_back(Term{Ordinal(1), Integer(1)});
    return make(std::move(t));
}

inline Ordinal Ordinal::make(Terms&& terms) {
    if (terms.empty()) return Ordinal();
    if (terms.size() == 1 && terms[0].exponent.is_zero()) return from_integer(terms[0].coeff);
    Ordinal r;
    r.terms_ = std::make_shared<const Terms>(std::move(terms));
    return r;
}

inline const Ordinal::Terms& Ordinal::terms_of(const Ordinal& x, Terms& scratch) {
    if (x.terms_) return *x.terms_;
    scratch.clear();
    if (x.small_ != 0) scratch.push_back(Term{Ordinal(), Integer(x.small_)});
    return scratch;
}

inline Ordinal Ordinal::from_cnf(std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.coeff < 0) throw PreconditionError("negative Cantor coefficient");
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return compare(x.exponent, y.exponent) == Cmp::GT; });
    Terms out;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.empty() && out.back().exponent == t.exponent)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    return make(std::move(out));
}

inline bool Ordinal::is_finite() const noexcept {
    if (!terms_) return true;
    return terms_->size() == 1 && (*terms_)[0].exponent.is_zero();
}

inline bool Ordinal::is_limit() const noexcept {
    if (!terms_) return false;
    return !terms_->back().exponent.is_zero();
}

inline std::optional<Integer> Ordinal::as_natural() const {
    if (!terms_) return Integer(small_);
    if (is_finite()) return (*terms_)[0].coeff;
    return std::nullopt;
}

inline std::size_t Ordinal::term_count() const noexcept {
    if (terms_) return terms_->size();
    return small_ == 0 ? 0 : 1;
}

inline Ordinal Ordinal::exponent(std::size_t i) const {
    if (terms_) return terms_->at(i).exponent;
    if (i != 0 || small_ == 0) throw std::out_of_range("ordinal term index");
    return Ordinal();
}

inline Integer Ordinal::coefficient(std::size_t i) const {
    if (terms_) return terms_->at(i).coeff;
    if (i != 0 || small_ == 0) throw std::out_of_range("ordinal term index");
    return Integer(small_);
}

inline std::vector<Ordinal::Term> Ordinal::cnf() const {
    Terms scratch;
    return terms_of(*this, scratch);
}

inline int Ordinal::depth() const {
    if (!terms_) return small_ == 0 ? 0 : 1;
    int d = 0;
    for (const auto& t : *terms_) d = std::max(d, t.exponent.depth());
    return d + 1;
}

inline Cmp compare(const Ordinal& a, const Ordinal& b) {
    if (!a.terms_ && !b.terms_)
        return a.small_ < b.small_ ? Cmp::LT : (a.small_ > b.small_ ? Cmp::GT : Cmp::EQ);
    if (!a.terms_) return Cmp::LT;
    if (!b.terms_) return Cmp::GT;
    if (a.terms_ == b.terms_) return Cmp::EQ;
    const auto& x = *a.terms_;
    const auto& y = *b.terms_;
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        Cmp c = compare(x[i].exponent, y[i].exponent);
        if (c != Cmp::EQ) return c;
        if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff ? Cmp::LT : Cmp::GT;
    }
    if (x.size() == y.size()) return Cmp::EQ;
    return x.size() < y.size() ? Cmp::LT : Cmp::GT;
}

/// Hessenberg natural sum: coefficientwise addition of Cantor forms, which is
/// binary addition of base-2 exponent multisets with carry 2^d + 2^d = 2^{d+1}.
inline Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
    if (!a.terms_ && !b.terms_) {
        std::uint64_t r;
        if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Ordinal(r);
        return Ordinal::from_integer(Integer(a.small_) + b.small_);
    }
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Ordinal::Terms sa, sb;
    const auto& x = Ordinal::terms_of(a, sa);
    const auto& y = Ordinal::terms_of(b, sb);
    Ordinal::Terms out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size()) {
            out.push_back(x[i++]);
        } else if (i == x.size()) {
            out.push_back(y[j++]);
        } else {
            Cmp c = compare(x[i].exponent, y[j].exponent);
            if (c == Cmp::GT) {
                out.push_back(x[i++]);
            } else if (c == Cmp::LT) {
                out.push_back(y[j++]);
            } else {
                out.push_back(Ordinal::Term{x[i].exponent, x[i].coeff + y[j].coeff});
                ++i;
                ++j;
            }
        }
    }
    return Ordinal::make(std::move(out));
}

/// Hessenberg natural product: bilinear extension of w^a (x) w^b = w^{a (+) b},
/// equivalently 2^d (x) 2^e = 2^{d (+) e} on base-2 terms.
inline Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
    if (!a.terms_ && !b.terms_) {
        std::uint64_t r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Ordinal(r);
        return Ordinal::from_integer(Integer(a.small_) * b.small_);
    }
    if (a.is_zero() || b.is_zero()) return Ordinal();
    Ordinal::Terms sa, sb;
    const auto& x = Ordinal::terms_of(a, sa);
    const auto& y = Ordinal::terms_of(b, sb);
    Ordinal::Terms prods;
    prods.reserve(x.size() * y.size());
    for (const auto& s : x)
        for (const auto& t : y) prods.push_back(Ordinal::Term{nat_sum(s.exponent, t.exponent), s.coeff * t.coeff});
    if (prods.size() == 1) return Ordinal::make(std::move(prods));
    std::sort(prods.begin(), prods.end(), [](const Ordinal::Term& p, const Ordinal::Term& q) {
        return compare(p.exponent, q.exponent) == Cmp::GT;
    });
    Ordinal::Terms out;
    out.reserve(prods.size());
    for (auto& p : prods) {
        if (!out.empty() && out.back().exponent == p.exponent)
            out.back().coeff += p.coeff;
        else
            out.push_back(std::move(p));
    }
    return Ordinal::make(std::move(out));
}

/// Ordinary ordinal addition. Terms of a below the leading exponent of b are absorbed.
inline Ordinal ord_sum(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    if (!a.terms_ && !b.terms_) return nat_sum(a, b);
    Ordinal::Terms sa, sb;
    const auto& x = Ordinal::terms_of(a, sa);
    const auto& y = Ordinal::terms_of(b, sb);
    const Ordinal& lead = y.front().exponent;
    Ordinal::Terms out;
    for (const auto& t : x) {
        Cmp c = compare(t.exponent, lead);
        if (c == Cmp::GT) {
            out.push_back(t);
        } else {
            if (c == Cmp::EQ) out.push_back(Ordinal::Term{lead, t.coeff});
            break;
        }
    }
    bool merge = !out.empty() && out.back().exponent == lead;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (j == 0 && merge)
            out.back().coeff += y[0].coeff;
        else
            out.push_back(y[j]);
    }
    return Ordinal::make(std::move(out));
}

/// Ordinary ordinal multiplication (left distributive over ordinary sums).
inline Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return Ordinal();
    if (!a.terms_ && !b.terms_) return nat_prod(a, b);
    Ordinal::Terms sa, sb;
    const auto& x = Ordinal::terms_of(a, sa);
    const auto& y = Ordinal::terms_of(b, sb);
    Ordinal result;
    for (const auto& t : y) {
        Ordinal::Terms piece;
        if (t.exponent.is_zero()) {
            piece = x;
            piece.front().coeff *= t.coeff;
        } else {
            piece.push_back(Ordinal::Term{ord_sum(x.front().exponent, t.exponent), t.coeff});
        }
        result = ord_sum(result, Ordinal::make(std::move(piece)));
    }
    return result;
}

/// The unique g with theta + g = e. Requires theta <= e.
inline Ordinal left_sub(const Ordinal& theta, const Ordinal& e) {
    Cmp c = compare(theta, e);
    if (c == Cmp::GT) throw PreconditionError("left_sub: theta exceeds e");
    if (c == Cmp::EQ) return Ordinal();
    if (auto ts = theta.as_small(), es = e.as_small(); ts && es) return Ordinal(*es - *ts);
    auto x = theta.cnf();
    auto y = e.cnf();
    std::size_t i = 0;
    while (i < x.size() && i < y.size() && x[i].exponent == y[i].exponent && x[i].coeff == y[i].coeff) ++i;
    std::vector<Ordinal::Term> g;
    if (i < x.size() && x[i].exponent == y[i].exponent) {
        g.push_back(Ordinal::Term{y[i].exponent, y[i].coeff - x[i].coeff});
        ++i;
    }
    for (; i < y.size(); ++i) g.push_back(y[i]);
    return Ordinal::from_cnf(std::move(g));
}

inline Ordinal successor(const Ordinal& a) { return ord_sum(a, Ordinal(1)); }

/// w * b, computed termwise: w * w^g = w^{1+g}.
inline Ordinal omega_times(const Ordinal& b) {
    std::vector<Ordinal::Term> out;
    for (auto& t : b.cnf()) {
        Ordinal g = t.exponent.is_finite() ? nat_sum(t.exponent, Ordinal(1)) : t.exponent;
        out.push_back(Ordinal::Term{std::move(g), std::move(t.coeff)});
    }
    return Ordinal::from_cnf(std::move(out));
}

/// Writes e = w*q + r with r finite.
inline std::pair<Ordinal, Integer> omega_divmod(const Ordinal& e) {
    Integer r = 0;
    std::vector<Ordinal::Term> q;
    for (auto& t : e.cnf()) {
        if (t.exponent.is_zero()) {
            r = t.coeff;
            continue;
        }
        Ordinal g = t.exponent;
        if (auto n = g.as_natural()) g = Ordinal::from_integer(*n - 1);
        q.push_back(Ordinal::Term{std::move(g), std::move(t.coeff)});
    }
    return {Ordinal::from_cnf(std::move(q)), r};
}

/// 2^a. For a = w*q + r this is w^q * 2^r; in particular pow2(w) = w.
inline Ordinal pow2(const Ordinal& a, const Universe& u = Universe{}) {
    auto [q, r] = omega_divmod(a);
    if (r > u.max_power_bits) throw BudgetError("2^" + r.str() + " exceeds the power budget");
    Integer c = pow2_int(static_cast<std::uint64_t>(r));
    if (q.is_zero()) return Ordinal::from_integer(c);
    std::vector<Ordinal::Term> t;
    t.push_back(Ordinal::Term{std::move(q), std::move(c)});
    Ordinal out = Ordinal::from_cnf(std::move(t));
    check_depth(out, u);
    return out;
}

/// The base-2 normal form exponents, strictly decreasing.
inline std::vector<Ordinal> exponents(const Ordinal& a) {
    std::vector<Ordinal> out;
    if (auto s = a.as_small()) {
        for (int b = 63; b >= 0; --b)
            if ((*s >> b) & 1u) out.emplace_back(static_cast<std::uint64_t>(b));
        return out;
    }
    for (const auto& t : a.cnf()) {
        Ordinal base = omega_times(t.exponent);
        if (t.coeff <= 0) continue;
        for (auto b = static_cast<long long>(boost::multiprecision::msb(t.coeff)); b >= 0; --b) {
            if (!boost::multiprecision::bit_test(t.coeff, static_cast<unsigned>(b))) continue;
            out.push_back(ord_sum(base, Ordinal(static_cast<std::uint64_t>(b))));
        }
    }
    return out;
}

/// Canonical ordinal with the given base-2 exponent multiset; duplicates carry.
inline Ordinal from_exponents(const std::vector<Ordinal>& es, const Universe& u = Universe{}) {
    for (const auto& e : es) check_depth(e, u);
    Ordinal acc;
    for (const auto& e : es) acc = nat_sum(acc, pow2(e, u));
    check_depth(acc, u);
    return acc;
}

/// 2^theta * g, i.e. the sum of 2^{theta + g_i} over the exponents of g.
inline Ordinal shift_mul(const Ordinal& theta, const Ordinal& g, const Universe& u = Universe{}) {
    std::vector<Ordinal> es;
    for (const auto& e : exponents(g)) es.push_back(ord_sum(theta, e));
    return from_exponents(es, u);
}

struct SplitResult {
    Ordinal quotient;   // gamma
    Ordinal remainder;  // delta < 2^theta
};

/// a = 2^theta * quotient + remainder with remainder < 2^theta.
inline SplitResult split(const Ordinal& a, const Ordinal& theta) {
    std::vector<Ordinal> hi, lo;
    for (auto& e : exponents(a)) {
        if (compare(e, theta) == Cmp::LT)
            lo.push_back(std::move(e));
        else
            hi.push_back(left_sub(theta, e));
    }
    return {from_exponents(hi), from_exponents(lo)};
}

/// a = lambda + k with lambda zero or a limit and k finite.
inline std::pair<Ordinal, Integer> limit_split(const Ordinal& a) {
    if (auto n = a.as_natural()) return {Ordinal(), *n};
    auto t = a.cnf();
    Integer k = 0;
    if (t.back().exponent.is_zero()) {
        k = t.back().coeff;
        t.pop_back();
    }
    return {Ordinal::from_cnf(std::move(t)), k};
}

inline void check_bound(const Ordinal& a, const Universe& u) {
    if (u.bound && compare(a, *u.bound) != Cmp::LT)
        throw BudgetError("index outside the configured universe bound");
}

std::string to_string(const Ordinal& a);

namespace detail {

inline bool atomic_ordinal(const Ordinal& a) {
    return a.is_finite() || a == Ordinal::omega();
}

}  // namespace detail

/// Canonical text: descending Cantor terms joined by " + ", e.g. "w^2 + w*2 + 3".
inline std::string to_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    if (auto n = a.as_natural()) return n->str();
    std::string out;
    for (const auto& t : a.cnf()) {
        if (!out.empty()) out += " + ";
        if (t.exponent.is_zero()) {
            out += t.coeff.str();
            continue;
        }
        if (t.exponent == Ordinal(1)) {
            out += "w";
        } else if (detail::atomic_ordinal(t.exponent)) {
            out += "w^" + to_string(t.exponent);
        } else {
            out += "w^(" + to_string(t.exponent) + ")";
        }
        if (t.coeff != 1) out += "*" + t.coeff.str();
    }
    return out;
}

}  // namespace ordcalc
