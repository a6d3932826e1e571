#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "ordinal.hpp"

namespace ordcalc {

/// A finite set of ordinals, kept sorted ascending without duplicates.
class FinOrdSet {
public:
    FinOrdSet() = default;
    explicit FinOrdSet(std::vector<Ordinal> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }
    FinOrdSet(std::initializer_list<Ordinal> elems) : FinOrdSet(std::vector<Ordinal>(elems)) {}

    const std::vector<Ordinal>& elems() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    bool contains(const Ordinal& a) const { return std::binary_search(elems_.begin(), elems_.end(), a); }
    bool subset_of(const FinOrdSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
    }
    /// Number of elements strictly below a.
    std::size_t count_below(const Ordinal& a) const {
        return static_cast<std::size_t>(std::lower_bound(elems_.begin(), elems_.end(), a) - elems_.begin());
    }

    friend bool operator==(const FinOrdSet&, const FinOrdSet&) = default;

private:
    std::vector<Ordinal> elems_;
};

inline FinOrdSet set_union(const FinOrdSet& a, const FinOrdSet& b) {
    std::vector<Ordinal> out;
    std::set_union(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(), std::back_inserter(out));
    return FinOrdSet(std::move(out));
}

inline FinOrdSet set_intersection(const FinOrdSet& a, const FinOrdSet& b) {
    std::vector<Ordinal> out;
    std::set_intersection(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(),
                          std::back_inserter(out));
    return FinOrdSet(std::move(out));
}

/// Descending, e.g. "{w, 3, 1}".
inline std::string to_string(const FinOrdSet& s) {
    std::string out = "{";
    for (auto it = s.elems().rbegin(); it != s.elems().rend(); ++it) {
        if (it != s.elems().rbegin()) out += ", ";
        out += to_string(*it);
    }
    return out + "}";
}

/// L_a: the exponent set of a.
inline FinOrdSet decode(const Ordinal& a) { return FinOrdSet(exponents(a)); }

inline Ordinal encode(const FinOrdSet& s, const Universe& u = Universe{}) { return from_exponents(s.elems(), u); }

/// a is formally included in b (non-strict).
inline bool formal_subset(const Ordinal& a, const Ordinal& b) {
    auto x = exponents(a);
    auto y = exponents(b);
    return std::includes(y.begin(), y.end(), x.begin(), x.end(), std::greater<>());
}

inline bool formal_proper_subset(const Ordinal& a, const Ordinal& b) { return a != b && formal_subset(a, b); }

/// a is a formal member of b, i.e. a is one of b's base-2 exponents.
inline bool formal_member(const Ordinal& a, const Ordinal& b) {
    auto y = exponents(b);
    return std::find(y.begin(), y.end(), a) != y.end();
}

inline Ordinal join(const Ordinal& a, const Ordinal& b) { return encode(set_union(decode(a), decode(b))); }
inline Ordinal meet(const Ordinal& a, const Ordinal& b) { return encode(set_intersection(decode(a), decode(b))); }

/// 2^{eta*2} * alpha + 2^eta * xi + xi.
inline Ordinal d_element(const Ordinal& eta, const Ordinal& alpha, const Ordinal& xi) {
    return ord_sum(ord_sum(shift_mul(ord_sum(eta, eta), alpha), shift_mul(eta, xi)), xi);
}

/// Whether the instance satisfies (2^theta*alpha + beta <= delta) <=> (2^theta*alpha <= delta and
/// beta <= delta), inclusions formal. Requires beta < 2^theta.
inline bool criterion_C(const Ordinal& theta, const Ordinal& alpha, const Ordinal& beta, const Ordinal& delta) {
    if (compare(beta, pow2(theta)) != Cmp::LT) throw PreconditionError("criterion C needs beta < 2^theta");
    Ordinal head = shift_mul(theta, alpha);
    bool lhs = formal_subset(ord_sum(head, beta), delta);
    bool rhs = formal_subset(head, delta) && formal_subset(beta, delta);
    return lhs == rhs;
}

/// With delta = d_element(eta, alpha, xi): whether (2^eta*gamma + beta <= delta) <=> (gamma <= delta
/// and beta <= delta). Requires beta, gamma, xi < 2^eta.
inline bool criterion_D(const Ordinal& eta, const Ordinal& alpha, const Ordinal& xi, const Ordinal& gamma,
                        const Ordinal& beta) {
    Ordinal cap = pow2(eta);
    if (compare(beta, cap) != Cmp::LT || compare(gamma, cap) != Cmp::LT || compare(xi, cap) != Cmp::LT)
        throw PreconditionError("criterion D needs beta, gamma, xi < 2^eta");
    Ordinal delta = d_element(eta, alpha, xi);
    bool lhs = formal_subset(ord_sum(shift_mul(eta, gamma), beta), delta);
    bool rhs = formal_subset(gamma, delta) && formal_subset(beta, delta);
    return lhs == rhs;
}

inline bool in_D(const Ordinal& eta, const Ordinal& delta) {
    auto outer = split(delta, ord_sum(eta, eta));
    auto inner = split(outer.remainder, eta);
    return inner.quotient == inner.remainder;
}

struct FilterBaseSet {
    enum class Kind { Cone, D, DCone };
    Kind kind = Kind::Cone;
    Ordinal theta;  // Cone, DCone
    Ordinal eta;    // D, DCone

    static FilterBaseSet cone(Ordinal theta) { return {Kind::Cone, std::move(theta), Ordinal()}; }
    static FilterBaseSet d(Ordinal eta) { return {Kind::D, Ordinal(), std::move(eta)}; }
    static FilterBaseSet dcone(Ordinal eta, Ordinal theta) { return {Kind::DCone, std::move(theta), std::move(eta)}; }
};

inline bool in_filter_base(const FilterBaseSet& s, const Ordinal& delta) {
    switch (s.kind) {
        case FilterBaseSet::Kind::Cone: return formal_subset(s.theta, delta);
        case FilterBaseSet::Kind::D: return in_D(s.eta, delta);
        case FilterBaseSet::Kind::DCone: return formal_subset(s.theta, delta) && in_D(s.eta, delta);
    }
    return false;
}

inline std::string to_string(const FilterBaseSet& s) {
    switch (s.kind) {
        case FilterBaseSet::Kind::Cone: return "C(" + to_string(s.theta) + ")";
        case FilterBaseSet::Kind::D: return "D(" + to_string(s.eta) + ")";
        case FilterBaseSet::Kind::DCone: return "D(" + to_string(s.eta) + ", " + to_string(s.theta) + ")";
    }
    return "?";
}

inline void check_enumeration(std::size_t n, const Universe& u) {
    if (n > static_cast<std::size_t>(u.exponent_cap) || n >= 63 || (std::uint64_t{1} << n) > u.work_budget)
        throw BudgetError("enumerating 2^" + std::to_string(n) + " codes exceeds the work budget");
}

/// Every ordinal whose decoded set lies in E, ascending. Index k holds the code of the
/// subset selected by the bits of k (bit i = i-th smallest element of E).
inline std::vector<Ordinal> enumerate_universe(const FinOrdSet& e, const Universe& u = Universe{}) {
    const std::size_t n = e.size();
    check_enumeration(n, u);
    for (const auto& x : e.elems()) check_bound(x, u);
    std::vector<Ordinal> powers;
    powers.reserve(n);
    for (const auto& x : e.elems()) powers.push_back(pow2(x, u));
    std::vector<Ordinal> out(std::size_t{1} << n);
    for (std::size_t k = 1; k < out.size(); ++k) {
        std::size_t high = 63 - static_cast<std::size_t>(__builtin_clzll(k));
        out[k] = nat_sum(out[k ^ (std::size_t{1} << high)], powers[high]);
    }
    return out;
}

/// The codes beta with beta formally included in delta, ascending.
inline std::vector<Ordinal> subsets_below(const Ordinal& delta, const Universe& u = Universe{}) {
    return enumerate_universe(decode(delta), u);
}

/// Bitmask of decode(a) relative to E, or nullopt when decode(a) is not inside E.
inline std::optional<std::uint64_t> mask_of(const Ordinal& a, const FinOrdSet& e) {
    std::uint64_t m = 0;
    for (const auto& x : exponents(a)) {
        auto it = std::lower_bound(e.elems().begin(), e.elems().end(), x);
        if (it == e.elems().end() || *it != x) return std::nullopt;
        m |= std::uint64_t{1} << (it - e.elems().begin());
    }
    return m;
}

/// Codes over E whose decoded set lies inside X.
inline std::vector<Ordinal> hat(const std::function<bool(const Ordinal&)>& in_x, const FinOrdSet& e,
                                const Universe& u = Universe{}) {
    std::vector<Ordinal> inside;
    for (const auto& x : e.elems())
        if (in_x(x)) inside.push_back(x);
    return enumerate_universe(FinOrdSet(std::move(inside)), u);
}

/// delta_0 < delta_1 < ... where delta_n decodes to the n smallest elements of E.
inline std::vector<Ordinal> cofinal_chain(const FinOrdSet& e, const Universe& u = Universe{}) {
    if (e.size() > static_cast<std::size_t>(u.work_budget)) throw BudgetError("chain longer than the work budget");
    std::vector<Ordinal> out{Ordinal()};
    for (const auto& x : e.elems()) out.push_back(nat_sum(out.back(), pow2(x, u)));
    return out;
}

}  // namespace ordcalc
