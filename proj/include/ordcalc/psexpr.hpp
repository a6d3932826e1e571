#pragma once

#include <memory>
#include <string>
#include <vector>

#include "numerosity.hpp"

namespace ordcalc {

/// Symbolic value known only through its exact partial sums at each delta.
class PartialSumExpr {
public:
    enum class Kind { Const, Euclid, CountIn, Add, Sub, Mul, Pow2, PowBase };

    static PartialSumExpr constant(Integer n) {
        PartialSumExpr e(Kind::Const);
        e.value_ = std::move(n);
        return e;
    }
    static PartialSumExpr euclid(EuclidInt z) {
        PartialSumExpr e(Kind::Euclid);
        e.eint_ = std::move(z);
        return e;
    }
    /// |X intersected with the codes below delta|.
    static PartialSumExpr count_in(PointSet x) {
        PartialSumExpr e(Kind::CountIn);
        e.set_ = std::move(x);
        return e;
    }
    static PartialSumExpr binary(Kind k, PartialSumExpr a, PartialSumExpr b) {
        PartialSumExpr e(k);
        e.a_ = std::make_shared<const PartialSumExpr>(std::move(a));
        e.b_ = std::make_shared<const PartialSumExpr>(std::move(b));
        return e;
    }
    static PartialSumExpr pow2(PartialSumExpr a) {
        PartialSumExpr e(Kind::Pow2);
        e.a_ = std::make_shared<const PartialSumExpr>(std::move(a));
        return e;
    }
    static PartialSumExpr pow_base(PartialSumExpr base, PartialSumExpr exp) {
        return binary(Kind::PowBase, std::move(base), std::move(exp));
    }

    Kind kind() const noexcept { return kind_; }
    const Integer& value() const noexcept { return value_; }
    const EuclidInt& eint() const noexcept { return eint_; }
    const PointSet& set() const noexcept { return set_; }
    const PartialSumExpr& lhs() const { return *a_; }
    const PartialSumExpr& rhs() const { return *b_; }

    friend bool operator==(const PartialSumExpr& x, const PartialSumExpr& y) {
        if (x.kind_ != y.kind_) return false;
        switch (x.kind_) {
            case Kind::Const: return x.value_ == y.value_;
            case Kind::Euclid: return x.eint_ == y.eint_;
            case Kind::CountIn: return x.set_ == y.set_;
            case Kind::Pow2: return *x.a_ == *y.a_;
            default: return *x.a_ == *y.a_ && *x.b_ == *y.b_;
        }
    }

private:
    explicit PartialSumExpr(Kind k) : kind_(k) {}

    Kind kind_;
    Integer value_;
    EuclidInt eint_;
    PointSet set_;
    std::shared_ptr<const PartialSumExpr> a_, b_;
};

inline PartialSumExpr operator+(PartialSumExpr a, PartialSumExpr b) {
    return PartialSumExpr::binary(PartialSumExpr::Kind::Add, std::move(a), std::move(b));
}
inline PartialSumExpr operator-(PartialSumExpr a, PartialSumExpr b) {
    return PartialSumExpr::binary(PartialSumExpr::Kind::Sub, std::move(a), std::move(b));
}
inline PartialSumExpr operator*(PartialSumExpr a, PartialSumExpr b) {
    return PartialSumExpr::binary(PartialSumExpr::Kind::Mul, std::move(a), std::move(b));
}

namespace detail {

inline std::uint64_t exponent_value(const Integer& e, const Universe& u) {
    if (e < 0) throw PreconditionError("negative exponent " + e.str());
    if (e > u.max_power_bits) throw BudgetError("exponent " + e.str() + " exceeds the power budget");
    return static_cast<std::uint64_t>(e);
}

inline Integer eval_at(const PartialSumExpr& e, const Ordinal& delta, const std::vector<Ordinal>& hat,
                       const Universe& u) {
    using K = PartialSumExpr::Kind;
    switch (e.kind()) {
        case K::Const: return e.value();
        case K::Euclid: return partial_sum(e.eint(), delta);
        case K::CountIn: {
            Integer total = 0;
            for (const auto& [n, boxes] : e.set().dims())
                for (const auto& b : boxes) {
                    Integer term = 1;
                    for (const auto& i : b)
                        term *= Integer(std::lower_bound(hat.begin(), hat.end(), i.hi) -
                                        std::lower_bound(hat.begin(), hat.end(), i.lo));
                    total += term;
                }
            return total;
        }
        case K::Add: return eval_at(e.lhs(), delta, hat, u) + eval_at(e.rhs(), delta, hat, u);
        case K::Sub: return eval_at(e.lhs(), delta, hat, u) - eval_at(e.rhs(), delta, hat, u);
        case K::Mul: return eval_at(e.lhs(), delta, hat, u) * eval_at(e.rhs(), delta, hat, u);
        case K::Pow2: return pow2_int(exponent_value(eval_at(e.lhs(), delta, hat, u), u));
        case K::PowBase: {
            Integer base = eval_at(e.lhs(), delta, hat, u);
            std::uint64_t k = exponent_value(eval_at(e.rhs(), delta, hat, u), u);
            if (k > 0 && abs(base) > 1 && bits_exceeding(abs(base)) * k > u.max_power_bits)
                throw BudgetError("power exceeds the power budget");
            return boost::multiprecision::pow(base, static_cast<unsigned>(k));
        }
    }
    return 0;
}

inline bool uses_sets(const PartialSumExpr& e) {
    using K = PartialSumExpr::Kind;
    switch (e.kind()) {
        case K::Const:
        case K::Euclid: return false;
        case K::CountIn: return true;
        case K::Pow2: return uses_sets(e.lhs());
        default: return uses_sets(e.lhs()) || uses_sets(e.rhs());
    }
}

}  // namespace detail

inline Integer expr_eval(const PartialSumExpr& e, const Ordinal& delta, const Universe& u = Universe{}) {
    std::vector<Ordinal> hat;
    if (detail::uses_sets(e)) hat = subsets_below(delta, u);
    return detail::eval_at(e, delta, hat, u);
}

/// Closed form of the numerosity of the finite subsets of X: 2^{|X below delta|}.
inline PartialSumExpr finset_num(const PointSet& x) { return PartialSumExpr::pow2(PartialSumExpr::count_in(x)); }

/// Closed form of the numerosity of the finite partial maps X -> Y: (1 + |Y below delta|)^{|X below delta|}.
inline PartialSumExpr finmap_num(const PointSet& x, const PointSet& y) {
    return PartialSumExpr::pow_base(PartialSumExpr::constant(1) + PartialSumExpr::count_in(y),
                                    PartialSumExpr::count_in(x));
}

enum class Verdict { LT = -1, EQ = 0, GT = 1, UNKNOWN = 2 };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::LT: return "LT";
        case Verdict::EQ: return "EQ";
        case Verdict::GT: return "GT";
        case Verdict::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

/// Sign of e1 - e2 along each chain. A chain votes only if its sign is constant on at least
/// its last half; the verdict is reported only when every chain votes the same way.
inline Verdict expr_compare_sampled(const PartialSumExpr& e1, const PartialSumExpr& e2,
                                    const std::vector<std::vector<Ordinal>>& chains, const Universe& u = Universe{}) {
    if (e1 == e2) return Verdict::EQ;
    std::optional<int> common;
    for (const auto& chain : chains) {
        if (chain.empty()) continue;
        std::vector<int> signs;
        for (const auto& d : chain) signs.push_back((expr_eval(e1, d, u) - expr_eval(e2, d, u)).sign());
        std::size_t stable = 1;
        while (stable < signs.size() && signs[signs.size() - 1 - stable] == signs.back()) ++stable;
        if (2 * stable < signs.size()) return Verdict::UNKNOWN;
        if (common && *common != signs.back()) return Verdict::UNKNOWN;
        common = signs.back();
    }
    return common ? static_cast<Verdict>(*common) : Verdict::UNKNOWN;
}

inline std::string to_string(const PartialSumExpr& e) {
    using K = PartialSumExpr::Kind;
    switch (e.kind()) {
        case K::Const: return e.value().str();
        case K::Euclid: return to_string(e.eint());
        case K::CountIn: return "#(" + to_string(e.set()) + ")";
        case K::Add: return "(" + to_string(e.lhs()) + " + " + to_string(e.rhs()) + ")";
        case K::Sub: return "(" + to_string(e.lhs()) + " - " + to_string(e.rhs()) + ")";
        case K::Mul: return "(" + to_string(e.lhs()) + " * " + to_string(e.rhs()) + ")";
        case K::Pow2: return "2^(" + to_string(e.lhs()) + ")";
        case K::PowBase: return "pow(" + to_string(e.lhs()) + ", " + to_string(e.rhs()) + ")";
    }
    return "?";
}

}  // namespace ordcalc
