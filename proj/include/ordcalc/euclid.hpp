#pragma once

#include <map>
#include <string>
#include <utility>

#include "sequence.hpp"

namespace ordcalc {

enum class Sign { NEG = -1, ZERO = 0, POS = 1 };

inline const char* to_string(Sign s) {
    switch (s) {
        case Sign::NEG: return "NEG";
        case Sign::ZERO: return "ZERO";
        case Sign::POS: return "POS";
    }
    return "?";
}

/// Finite integer combination of the basis values P(lambda), lambda zero or a limit.
/// P(0) is the integer unit.
class EuclidInt {
public:
    using Coeffs = std::map<Ordinal, Integer>;

    EuclidInt() = default;
    explicit EuclidInt(Integer n) {
        if (n != 0) coeffs_.emplace(Ordinal(), std::move(n));
    }
    /// c * P(theta); a finite offset in theta folds into the coefficient.
    static EuclidInt monomial(const Ordinal& theta, Integer c, const Universe& u = Universe{}) {
        auto [lambda, k] = limit_split(theta);
        if (k > u.max_power_bits) throw BudgetError("P(" + to_string(theta) + ") exceeds the power budget");
        EuclidInt z;
        z.add_term(lambda, c * pow2_int(static_cast<std::uint64_t>(k)));
        return z;
    }
    static EuclidInt from_coeffs(const Coeffs& c) {
        EuclidInt z;
        for (const auto& [k, v] : c) {
            if (!k.is_zero() && !k.is_limit()) throw PreconditionError("basis key " + to_string(k) + " is not a limit");
            z.add_term(k, v);
        }
        return z;
    }

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Integer coeff(const Ordinal& lambda) const {
        auto it = coeffs_.find(lambda);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    EuclidInt& operator+=(const EuclidInt& b) {
        for (const auto& [k, v] : b.coeffs_) add_term(k, v);
        return *this;
    }
    EuclidInt& operator-=(const EuclidInt& b) {
        for (const auto& [k, v] : b.coeffs_) add_term(k, -v);
        return *this;
    }
    friend EuclidInt operator+(EuclidInt a, const EuclidInt& b) { return a += b; }
    friend EuclidInt operator-(EuclidInt a, const EuclidInt& b) { return a -= b; }
    friend EuclidInt operator-(EuclidInt a) {
        for (auto& [k, v] : a.coeffs_) v = -v;
        return a;
    }
    friend EuclidInt operator*(const EuclidInt& a, const EuclidInt& b) {
        EuclidInt out;
        for (const auto& [ka, va] : a.coeffs_)
            for (const auto& [kb, vb] : b.coeffs_) out.add_term(nat_sum(ka, kb), va * vb);
        return out;
    }
    friend bool operator==(const EuclidInt&, const EuclidInt&) = default;

private:
    void add_term(const Ordinal& k, const Integer& v) {
        if (v == 0) return;
        auto [it, fresh] = coeffs_.try_emplace(k, v);
        if (fresh) return;
        it->second += v;
        if (it->second == 0) coeffs_.erase(it);
    }

    Coeffs coeffs_;
};

inline EuclidInt add(const EuclidInt& a, const EuclidInt& b) { return a + b; }
inline EuclidInt neg(const EuclidInt& a) { return -a; }
inline EuclidInt mul(const EuclidInt& a, const EuclidInt& b) { return a * b; }
inline EuclidInt unit() { return EuclidInt(1); }

/// Image of an ordinal: the term w^b * c contributes c * P(w*b).
inline EuclidInt psi(const Ordinal& a) {
    if (auto n = a.as_natural()) return EuclidInt(*n);
    EuclidInt::Coeffs c;
    for (auto& t : a.cnf()) c.emplace(omega_times(t.exponent), std::move(t.coeff));
    return EuclidInt::from_coeffs(c);
}

/// Beyond this code the partial sums of psi(a) count exactly the codes below a.
inline Ordinal psi_witness(const Ordinal& a, const Universe& u = Universe{}) {
    std::vector<Ordinal> es = exponents(a);
    const std::size_t own = es.size();
    for (std::size_t i = 0; i < own; ++i) {
        auto [lambda, k] = limit_split(es[i]);
        if (k > u.work_budget) throw BudgetError("fold witness too large");
        for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(k); ++j) es.push_back(ord_sum(lambda, Ordinal(j)));
    }
    return encode(FinOrdSet(std::move(es)), u);
}

/// Sum of c * 2^{|L_delta below lambda|} over the terms.
inline Integer partial_sum(const EuclidInt& z, const Ordinal& delta) {
    FinOrdSet l = decode(delta);
    Integer total = 0;
    for (const auto& [k, v] : z.coeffs()) total += v * pow2_int(l.count_below(k));
    return total;
}

struct SignResult {
    Sign sign = Sign::ZERO;
    Ordinal witness;  // every delta formally above this has a partial sum of this sign
};

inline SignResult sign(const EuclidInt& z, const Universe& u = Universe{}) {
    if (z.is_zero()) return {};
    auto top = z.coeffs().rbegin();
    Sign s = top->second > 0 ? Sign::POS : Sign::NEG;
    if (z.coeffs().size() == 1) return {s, Ordinal()};
    Integer rest = 0;
    for (auto it = std::next(top); it != z.coeffs().rend(); ++it) rest += abs(it->second);
    std::uint64_t b = bits_exceeding(rest);
    if (b > u.max_power_bits) throw BudgetError("sign witness exceeds the power budget");
    // Exponents lambda2 + j for j < b, lambda2 the second largest key: w^q * (2^b - 1).
    const Ordinal& lambda2 = std::next(top)->first;
    Integer c = pow2_int(b) - 1;
    if (lambda2.is_zero()) return {s, Ordinal::from_integer(c)};
    std::vector<Ordinal::Term> t;
    t.push_back(Ordinal::Term{omega_divmod(lambda2).first, std::move(c)});
    return {s, Ordinal::from_cnf(std::move(t))};
}

struct Comparison {
    Cmp result = Cmp::EQ;
    Ordinal witness;
};

inline Comparison compare(const EuclidInt& a, const EuclidInt& b, const Universe& u = Universe{}) {
    auto s = sign(a - b, u);
    return {static_cast<Cmp>(static_cast<int>(s.sign)), std::move(s.witness)};
}

inline EuclidInt from_step(const StepSequence& x) {
    EuclidInt z;
    for (const auto& p : x.pieces()) z += EuclidInt(p.value) * (psi(p.hi) - psi(p.lo));
    for (const auto& [k, v] : x.overrides()) z += EuclidInt(v - x.piece_value(k));
    return z;
}

/// Beyond this code counting(x, .) and partial_sum(from_step(x), .) agree.
inline Ordinal from_step_witness(const StepSequence& x, const Universe& u = Universe{}) {
    Ordinal w;
    for (const auto& p : x.pieces()) w = join(w, join(psi_witness(p.lo, u), psi_witness(p.hi, u)));
    for (const auto& [k, v] : x.overrides()) w = join(w, k);
    return w;
}

/// Descending terms, e.g. "2*P(w) - 3"; zero is "0".
inline std::string to_string(const EuclidInt& z) {
    if (z.is_zero()) return "0";
    std::string out;
    for (auto it = z.coeffs().rbegin(); it != z.coeffs().rend(); ++it) {
        const auto& [k, v] = *it;
        bool negative = v < 0;
        Integer mag = negative ? Integer(-v) : v;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k.is_zero()) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += "P(" + to_string(k) + ")";
    }
    return out;
}

}  // namespace ordcalc
