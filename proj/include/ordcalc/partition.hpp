#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numerosity.hpp"

namespace ordcalc {

/// Two-coloring of the formally increasing pairs of codes over a finite exponent set.
/// Codes are addressed by mask (bit i = i-th smallest exponent).
class Partition2 {
public:
    Partition2(FinOrdSet e, const std::function<int(std::uint64_t, std::uint64_t)>& color,
               const Universe& u = Universe{})
        : universe_(std::move(e)), codes_(enumerate_universe(universe_, u)) {
        const std::size_t n = codes_.size();
        if (n * n > u.work_budget) throw BudgetError("pair table exceeds the work budget");
        color_.assign(n * n, 1);
        for (std::uint64_t b = 0; b < n; ++b)
            for (std::uint64_t a = (b - 1) & b; a != b; a = (a - 1) & b) {
                color_[a * n + b] = color(a, b) ? 1 : 0;
                if (a == 0) break;
            }
    }

    const FinOrdSet& universe() const noexcept { return universe_; }
    const std::vector<Ordinal>& codes() const noexcept { return codes_; }
    std::size_t size() const noexcept { return codes_.size(); }

    /// Requires a to be a proper submask of b.
    int color(std::uint64_t a, std::uint64_t b) const {
        if ((a & ~b) != 0 || a == b) throw PreconditionError("color needs a formally increasing pair");
        return color_[a * codes_.size() + b];
    }
    int color(const Ordinal& a, const Ordinal& b) const { return color(mask(a), mask(b)); }

    std::uint64_t mask(const Ordinal& a) const {
        auto m = mask_of(a, universe_);
        if (!m) throw PreconditionError(to_string(a) + " is not coded over the universe");
        return *m;
    }

private:
    FinOrdSet universe_;
    std::vector<Ordinal> codes_;
    std::vector<char> color_;
};

/// Color 0 exactly when psi drops along the pair. psi is indexed by mask.
inline Partition2 g_psi(const std::vector<Integer>& psi, const FinOrdSet& e, const Universe& u = Universe{}) {
    if (e.size() >= 63 || psi.size() != (std::size_t{1} << e.size()))
        throw PreconditionError("psi must be defined on every code of the universe");
    return Partition2(e, [&](std::uint64_t a, std::uint64_t b) { return psi[a] > psi[b] ? 0 : 1; }, u);
}

inline Partition2 g_psi(const std::map<Ordinal, Integer>& psi, const FinOrdSet& e, const Universe& u = Universe{}) {
    auto codes = enumerate_universe(e, u);
    std::vector<Integer> byMask(codes.size());
    for (std::size_t k = 0; k < codes.size(); ++k) {
        auto it = psi.find(codes[k]);
        if (it == psi.end()) throw PreconditionError("psi undefined at " + to_string(codes[k]));
        byMask[k] = it->second;
    }
    return g_psi(byMask, e, u);
}

/// A formally increasing chain of maxlen codes whose consecutive pairs all have color 0,
/// or nothing if the universe has none.
inline std::optional<std::vector<Ordinal>> find_zero_chain(const Partition2& g, std::size_t maxlen) {
    if (maxlen == 0) return std::vector<Ordinal>{};
    const std::size_t n = g.size();
    std::vector<std::size_t> best(n, 1);
    std::vector<std::uint64_t> prev(n, UINT64_MAX);
    for (std::uint64_t b = 0; b < n; ++b) {
        if (b != 0)
            for (std::uint64_t a = (b - 1) & b;; a = (a - 1) & b) {
                if (g.color(a, b) == 0 && best[a] + 1 > best[b]) {
                    best[b] = best[a] + 1;
                    prev[b] = a;
                }
                if (a == 0) break;
            }
        if (best[b] >= maxlen) {
            std::vector<Ordinal> chain;
            for (std::uint64_t c = b; chain.size() < maxlen; c = prev[c]) chain.push_back(g.codes()[c]);
            std::reverse(chain.begin(), chain.end());
            return chain;
        }
    }
    return std::nullopt;
}

struct HomogeneousResult {
    bool found = false;
    int color = 1;
    std::vector<Ordinal> set;    // ascending, when found
    std::vector<Ordinal> chain;  // full-height 0-chain, when not found
};

/// Looks for a 0-chain through the full height of the universe first; without one, builds a
/// 1-homogeneous set greedily from the top code down. The top code makes it cofinal.
inline HomogeneousResult homogeneous_search(const Partition2& g) {
    HomogeneousResult r;
    if (auto chain = find_zero_chain(g, g.universe().size() + 1); chain && g.universe().size() > 0) {
        r.chain = std::move(*chain);
        return r;
    }
    std::vector<std::uint64_t> h;
    for (std::uint64_t c = g.size(); c-- > 0;) {
        bool ok = true;
        for (std::uint64_t x : h)
            if ((c & ~x) == 0 && g.color(c, x) == 0) {
                ok = false;
                break;
            }
        if (ok) h.push_back(c);
    }
    r.found = true;
    for (auto it = h.rbegin(); it != h.rend(); ++it) r.set.push_back(g.codes()[*it]);
    return r;
}

/// Color 1 exactly when every component has color 1.
inline Partition2 product_partition(const std::vector<Partition2>& gs, const Universe& u = Universe{}) {
    if (gs.empty()) throw PreconditionError("product of no partitions");
    for (const auto& g : gs)
        if (!(g.universe() == gs.front().universe())) throw PreconditionError("partitions over different universes");
    return Partition2(
        gs.front().universe(),
        [&](std::uint64_t a, std::uint64_t b) {
            for (const auto& g : gs)
                if (g.color(a, b) == 0) return 0;
            return 1;
        },
        u);
}

/// Partial count of A exceeds that of B at beta.
inline bool q_member(const PointSet& a, const PointSet& b, const Ordinal& beta, const Universe& u = Universe{}) {
    return partial_count(a, beta, u) > partial_count(b, beta, u);
}

using Family = std::function<bool(const Ordinal&)>;

/// Least code over E lying in every family; nothing means no common element at this scale.
inline std::optional<Ordinal> fip_check(const std::vector<Family>& families, const FinOrdSet& e,
                                        const Universe& u = Universe{}) {
    for (const auto& d : enumerate_universe(e, u)) {
        bool all = true;
        for (const auto& f : families)
            if (!f(d)) {
                all = false;
                break;
            }
        if (all) return d;
    }
    return std::nullopt;
}

/// An element of every listed filter base set, built from the join of the cone vertices.
/// Exact when all D constraints share one eta; otherwise only the cones are honoured.
inline Ordinal fip_construct(const std::vector<FilterBaseSet>& sets) {
    Ordinal t;
    std::optional<Ordinal> eta;
    bool single = true;
    for (const auto& s : sets) {
        if (s.kind != FilterBaseSet::Kind::D) t = join(t, s.theta);
        if (s.kind == FilterBaseSet::Kind::Cone) continue;
        if (eta && *eta != s.eta) single = false;
        eta = s.eta;
    }
    if (!eta || !single) return t;
    auto outer = split(t, ord_sum(*eta, *eta));
    auto inner = split(outer.remainder, *eta);
    return d_element(*eta, outer.quotient, join(inner.quotient, inner.remainder));
}

inline std::string to_string(const std::vector<Ordinal>& chain, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) out += (i ? sep : "") + to_string(chain[i]);
    return out;
}

}  // namespace ordcalc
