#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fincode.hpp"

namespace ordcalc {

/// An integer sequence indexed by ordinals, presented as constant pieces on half-open
/// intervals plus finitely many point overrides. Zero elsewhere.
class StepSequence {
public:
    struct Piece {
        Ordinal lo;
        Ordinal hi;
        Integer value;
        friend bool operator==(const Piece&, const Piece&) = default;
    };

    StepSequence() = default;
    StepSequence(std::vector<Piece> pieces, std::map<Ordinal, Integer> overrides = {})
        : pieces_(std::move(pieces)), overrides_(std::move(overrides)) {
        normalize();
    }

    static StepSequence indicator(const Ordinal& lo, const Ordinal& hi, Integer value = 1) {
        if (compare(lo, hi) != Cmp::LT) return {};
        return StepSequence({{lo, hi, std::move(value)}});
    }
    static StepSequence point(const Ordinal& a, Integer value = 1) { return StepSequence({}, {{a, std::move(value)}}); }

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    const std::map<Ordinal, Integer>& overrides() const noexcept { return overrides_; }
    bool is_zero() const noexcept { return pieces_.empty() && overrides_.empty(); }

    /// Value ignoring overrides.
    Integer piece_value(const Ordinal& a) const {
        auto it = std::upper_bound(pieces_.begin(), pieces_.end(), a,
                                   [](const Ordinal& x, const Piece& p) { return compare(x, p.lo) == Cmp::LT; });
        if (it == pieces_.begin()) return 0;
        --it;
        return compare(a, it->hi) == Cmp::LT ? it->value : Integer(0);
    }

    Integer value_at(const Ordinal& a) const {
        auto o = overrides_.find(a);
        return o != overrides_.end() ? o->second : piece_value(a);
    }

    /// Least ordinal above which the sequence vanishes.
    Ordinal support_bound() const {
        Ordinal b;
        if (!pieces_.empty()) b = pieces_.back().hi;
        for (const auto& [k, v] : overrides_)
            if (compare(k, b) != Cmp::LT) b = successor(k);
        return b;
    }

    friend bool operator==(const StepSequence&, const StepSequence&) = default;

private:
    void normalize() {
        std::sort(pieces_.begin(), pieces_.end(),
                  [](const Piece& a, const Piece& b) { return compare(a.lo, b.lo) == Cmp::LT; });
        std::vector<Piece> out;
        for (auto& p : pieces_) {
            if (compare(p.lo, p.hi) != Cmp::LT)
                throw PreconditionError("step piece needs lo < hi, got [" + to_string(p.lo) + ", " + to_string(p.hi) + ")");
            if (!out.empty() && compare(p.lo, out.back().hi) == Cmp::LT)
                throw PreconditionError("step pieces overlap at " + to_string(p.lo));
            if (p.value == 0) continue;
            if (!out.empty() && out.back().hi == p.lo && out.back().value == p.value)
                out.back().hi = p.hi;
            else
                out.push_back(std::move(p));
        }
        pieces_ = std::move(out);
        for (auto it = overrides_.begin(); it != overrides_.end();) {
            if (it->second == piece_value(it->first))
                it = overrides_.erase(it);
            else
                ++it;
        }
    }

    std::vector<Piece> pieces_;
    std::map<Ordinal, Integer> overrides_;
};

/// "[lo, hi):v + @a:v", or "0" for the zero sequence.
inline std::string to_string(const StepSequence& x) {
    if (x.is_zero()) return "0";
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += " + ";
    };
    for (const auto& p : x.pieces()) {
        sep();
        out += "[" + to_string(p.lo) + ", " + to_string(p.hi) + "):" + to_string(p.value);
    }
    for (const auto& [k, v] : x.overrides()) {
        sep();
        out += "@" + to_string(k) + ":" + to_string(v);
    }
    return out;
}

inline Integer value_at(const StepSequence& x, const Ordinal& a) { return x.value_at(a); }

/// Sum of x over every beta formally included in delta.
inline Integer counting(const StepSequence& x, const Ordinal& delta, const Universe& u = Universe{}) {
    Integer total = 0;
    for (const auto& b : subsets_below(delta, u)) total += x.value_at(b);
    return total;
}

/// Counting function on every code over E, indexed by mask.
inline std::vector<Integer> counting_table(const StepSequence& x, const FinOrdSet& e, const Universe& u = Universe{}) {
    auto codes = enumerate_universe(e, u);
    std::vector<Integer> t(codes.size());
    for (std::size_t k = 0; k < codes.size(); ++k) t[k] = x.value_at(codes[k]);
    for (std::size_t bit = 1; bit < t.size(); bit <<= 1)
        for (std::size_t m = 0; m < t.size(); ++m)
            if (m & bit) t[m] += t[m ^ bit];
    return t;
}

/// The sequence whose counting function is psi on the codes over E. Defined on the whole universe.
inline std::map<Ordinal, Integer> from_counting(const std::map<Ordinal, Integer>& psi, const FinOrdSet& e,
                                                const Universe& u = Universe{}) {
    auto codes = enumerate_universe(e, u);
    std::vector<Integer> t(codes.size());
    for (std::size_t k = 0; k < codes.size(); ++k) {
        auto it = psi.find(codes[k]);
        if (it == psi.end()) throw PreconditionError("counting function undefined at " + to_string(codes[k]));
        t[k] = it->second;
    }
    for (std::size_t bit = 1; bit < t.size(); bit <<= 1)
        for (std::size_t m = 0; m < t.size(); ++m)
            if (m & bit) t[m] -= t[m ^ bit];
    std::map<Ordinal, Integer> out;
    for (std::size_t k = 0; k < codes.size(); ++k) out.emplace(codes[k], std::move(t[k]));
    return out;
}

inline StepSequence linear_combo(const Integer& u, const StepSequence& x, const Integer& v, const StepSequence& y) {
    std::vector<Ordinal> cuts;
    for (const auto* s : {&x, &y})
        for (const auto& p : s->pieces()) {
            cuts.push_back(p.lo);
            cuts.push_back(p.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<StepSequence::Piece> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Integer val = u * x.piece_value(cuts[i]) + v * y.piece_value(cuts[i]);
        if (val != 0) pieces.push_back({cuts[i], cuts[i + 1], std::move(val)});
    }
    std::map<Ordinal, Integer> overrides;
    for (const auto* s : {&x, &y})
        for (const auto& [k, ignored] : s->overrides()) overrides[k] = u * x.value_at(k) + v * y.value_at(k);
    return StepSequence(std::move(pieces), std::move(overrides));
}

/// y with y_{2^eta*gamma + a} = x_a. x must vanish from 2^eta on.
inline StepSequence translate(const StepSequence& x, const Ordinal& eta, const Ordinal& gamma,
                              const Universe& u = Universe{}) {
    Ordinal cap = pow2(eta, u);
    if (compare(x.support_bound(), cap) == Cmp::GT)
        throw PreconditionError("translate needs the sequence to vanish from 2^" + to_string(eta) + " on");
    Ordinal base = shift_mul(eta, gamma, u);
    std::vector<StepSequence::Piece> pieces;
    for (const auto& p : x.pieces()) pieces.push_back({ord_sum(base, p.lo), ord_sum(base, p.hi), p.value});
    std::map<Ordinal, Integer> overrides;
    for (const auto& [k, v] : x.overrides()) overrides.emplace(ord_sum(base, k), v);
    return StepSequence(std::move(pieces), std::move(overrides));
}

/// Sum of x_a*y_b over pairs with a join b formally included in delta. Computed grouped by the
/// join and as a product of two counting sums; the two must agree.
inline Integer product_partial(const StepSequence& x, const StepSequence& y, const Ordinal& delta,
                               const Universe& u = Universe{}) {
    auto codes = subsets_below(delta, u);
    const std::size_t n = codes.size();
    if (n > 0 && (n > (std::uint64_t{1} << 31) || n * n > u.work_budget))
        throw BudgetError("pairwise sum over " + std::to_string(n) + " codes exceeds the work budget");
    std::vector<Integer> xs(n), ys(n), grouped(n);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = x.value_at(codes[k]);
        ys[k] = y.value_at(codes[k]);
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (xs[a] == 0) continue;
        for (std::size_t b = 0; b < n; ++b)
            if (ys[b] != 0) grouped[a | b] += xs[a] * ys[b];
    }
    Integer by_join = 0, sx = 0, sy = 0;
    for (std::size_t k = 0; k < n; ++k) {
        by_join += grouped[k];
        sx += xs[k];
        sy += ys[k];
    }
    if (by_join != sx * sy) throw std::logic_error("grouped and factored partial products disagree");
    return by_join;
}

}  // namespace ordcalc
