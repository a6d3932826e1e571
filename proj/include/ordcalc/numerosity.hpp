#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "euclid.hpp"

namespace ordcalc {

/// Half-open [lo, hi).
struct Interval {
    Ordinal lo;
    Ordinal hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

using Box = std::vector<Interval>;
using Tuple = std::vector<Ordinal>;

inline bool is_unit(const Interval& i) { return successor(i.lo) == i.hi; }
inline bool is_unit(const Box& b) { return std::all_of(b.begin(), b.end(), [](const Interval& i) { return is_unit(i); }); }

class PointSet;
PointSet normalize(std::map<std::size_t, std::vector<Box>> dims, const Universe& u = Universe{});

/// Finite-dimensional set of ordinal tuples, stored as disjoint boxes per dimension in a
/// canonical form. Single tuples are unit boxes.
class PointSet {
public:
    using Dims = std::map<std::size_t, std::vector<Box>>;

    PointSet() = default;

    static PointSet interval(const Ordinal& lo, const Ordinal& hi) { return box({Interval{lo, hi}}); }
    static PointSet box(Box b) {
        if (b.empty()) throw PreconditionError("a box needs at least one side");
        for (const auto& i : b)
            if (compare(i.lo, i.hi) != Cmp::LT) return {};
        Dims d;
        d[b.size()].push_back(std::move(b));
        return normalize(std::move(d));
    }
    static PointSet tuples(const std::vector<Tuple>& ts) {
        Dims d;
        for (const auto& t : ts) {
            if (t.empty()) throw PreconditionError("tuples need at least one coordinate");
            Box b;
            for (const auto& x : t) b.push_back({x, successor(x)});
            d[t.size()].push_back(std::move(b));
        }
        return normalize(std::move(d));
    }

    const Dims& dims() const noexcept { return dims_; }
    bool empty() const noexcept { return dims_.empty(); }

    /// Boxes that are not single tuples.
    std::vector<Box> proper_boxes(std::size_t n) const {
        std::vector<Box> out;
        if (auto it = dims_.find(n); it != dims_.end())
            for (const auto& b : it->second)
                if (!is_unit(b)) out.push_back(b);
        return out;
    }
    std::vector<Tuple> tuple_list(std::size_t n) const {
        std::vector<Tuple> out;
        if (auto it = dims_.find(n); it != dims_.end())
            for (const auto& b : it->second)
                if (is_unit(b)) {
                    Tuple t;
                    for (const auto& i : b) t.push_back(i.lo);
                    out.push_back(std::move(t));
                }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool contains(const Tuple& t) const {
        auto it = dims_.find(t.size());
        if (it == dims_.end()) return false;
        for (const auto& b : it->second) {
            bool in = true;
            for (std::size_t i = 0; i < t.size() && in; ++i)
                in = compare(b[i].lo, t[i]) != Cmp::GT && compare(t[i], b[i].hi) == Cmp::LT;
            if (in) return true;
        }
        return false;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    friend PointSet detail_make_canonical(Dims d);
    Dims dims_;
};

inline PointSet detail_make_canonical(PointSet::Dims d) {
    PointSet p;
    p.dims_ = std::move(d);
    return p;
}

namespace detail {

/// Cells of the product grid spanned by per-dimension cut lists, row-major.
struct Grid {
    std::vector<std::vector<Ordinal>> cuts;
    std::vector<char> cell;

    std::size_t dims() const { return cuts.size(); }
    std::size_t extent(std::size_t i) const { return cuts[i].size() - 1; }
    std::size_t stride(std::size_t i) const {
        std::size_t s = 1;
        for (std::size_t j = i + 1; j < dims(); ++j) s *= extent(j);
        return s;
    }

    /// Remove slab s of dimension i together with cut c (c = s for a leading slab or a merge
    /// into slab s - 1, c = s + 1 for a trailing slab).
    void drop(std::size_t i, std::size_t s, std::size_t c) {
        const std::size_t st = stride(i), ext = extent(i);
        std::vector<char> out;
        out.reserve(cell.size() / ext * (ext - 1));
        for (std::size_t f = 0; f < cell.size(); ++f)
            if ((f / st) % ext != s) out.push_back(cell[f]);
        cell = std::move(out);
        cuts[i].erase(cuts[i].begin() + static_cast<std::ptrdiff_t>(c));
    }

    bool slab_equal(std::size_t i, std::size_t a, std::size_t b) const {
        const std::size_t st = stride(i), ext = extent(i);
        for (std::size_t f = 0; f < cell.size(); ++f)
            if ((f / st) % ext == a && cell[f] != cell[f + (b - a) * st]) return false;
        return true;
    }
    bool slab_empty(std::size_t i, std::size_t a) const {
        const std::size_t st = stride(i), ext = extent(i);
        for (std::size_t f = 0; f < cell.size(); ++f)
            if ((f / st) % ext == a && cell[f]) return false;
        return true;
    }

    /// Drops every cut across which membership never changes.
    void coarsen() {
        bool changed = true;
        while (changed && !cell.empty()) {
            changed = false;
            for (std::size_t i = 0; i < dims() && !cell.empty(); ++i) {
                if (slab_empty(i, 0)) {
                    if (extent(i) == 1) {
                        cell.clear();
                        break;
                    }
                    drop(i, 0, 0);
                    changed = true;
                    continue;
                }
                if (slab_empty(i, extent(i) - 1)) {
                    drop(i, extent(i) - 1, extent(i));
                    changed = true;
                    continue;
                }
                for (std::size_t s = 1; s < extent(i); ++s)
                    if (slab_equal(i, s - 1, s)) {
                        drop(i, s, s);
                        changed = true;
                        break;
                    }
            }
        }
    }

    /// Deterministic cover of the member cells by disjoint boxes, extending the last
    /// dimension first.
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        if (cell.empty()) return out;
        const std::size_t n = dims();
        std::vector<std::size_t> st(n), ext(n);
        for (std::size_t i = 0; i < n; ++i) {
            st[i] = stride(i);
            ext[i] = extent(i);
        }
        std::vector<char> covered(cell.size(), 0);
        auto block_ok = [&](const std::vector<std::size_t>& s, const std::vector<std::size_t>& e) {
            std::vector<std::size_t> idx = s;
            while (true) {
                std::size_t f = 0;
                for (std::size_t i = 0; i < n; ++i) f += idx[i] * st[i];
                if (!cell[f] || covered[f]) return false;
                std::size_t d = n;
                while (d > 0) {
                    --d;
                    if (++idx[d] < e[d]) break;
                    idx[d] = s[d];
                    if (d == 0) return true;
                }
                if (n == 0) return true;
            }
        };
        for (std::size_t f = 0; f < cell.size(); ++f) {
            if (!cell[f] || covered[f]) continue;
            std::vector<std::size_t> s(n), e(n);
            for (std::size_t i = 0; i < n; ++i) {
                s[i] = (f / st[i]) % ext[i];
                e[i] = s[i] + 1;
            }
            for (std::size_t d = n; d-- > 0;) {
                while (e[d] < ext[d]) {
                    auto s2 = s, e2 = e;
                    s2[d] = e[d];
                    e2[d] = e[d] + 1;
                    if (!block_ok(s2, e2)) break;
                    ++e[d];
                }
            }
            std::vector<std::size_t> idx = s;
            while (true) {
                std::size_t g = 0;
                for (std::size_t i = 0; i < n; ++i) g += idx[i] * st[i];
                covered[g] = 1;
                std::size_t d = n;
                bool done = false;
                while (d > 0) {
                    --d;
                    if (++idx[d] < e[d]) break;
                    idx[d] = s[d];
                    if (d == 0) done = true;
                }
                if (done) break;
            }
            Box b;
            for (std::size_t i = 0; i < n; ++i) b.push_back({cuts[i][s[i]], cuts[i][e[i]]});
            out.push_back(std::move(b));
        }
        return out;
    }
};

/// Canonical boxes of the n-dimensional set {x : keep(membership of x in each group)}.
inline std::vector<Box> combine(std::size_t n, const std::vector<const std::vector<Box>*>& groups,
                                const std::function<bool(const std::vector<char>&)>& keep, const Universe& u) {
    Grid g;
    g.cuts.resize(n);
    for (const auto* grp : groups)
        for (const auto& b : *grp)
            for (std::size_t i = 0; i < n; ++i) {
                g.cuts[i].push_back(b[i].lo);
                g.cuts[i].push_back(b[i].hi);
            }
    std::uint64_t cells = 1;
    for (auto& c : g.cuts) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.size() < 2) return {};
        cells *= c.size() - 1;
        if (cells > u.work_budget) throw BudgetError("box grid exceeds the work budget");
    }
    std::vector<std::vector<char>> painted(groups.size(), std::vector<char>(cells, 0));
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (const auto& b : *groups[gi]) {
            std::vector<std::size_t> s(n), e(n);
            for (std::size_t i = 0; i < n; ++i) {
                s[i] = static_cast<std::size_t>(std::lower_bound(g.cuts[i].begin(), g.cuts[i].end(), b[i].lo) - g.cuts[i].begin());
                e[i] = static_cast<std::size_t>(std::lower_bound(g.cuts[i].begin(), g.cuts[i].end(), b[i].hi) - g.cuts[i].begin());
                if (s[i] >= e[i]) goto next_box;
            }
            {
                std::vector<std::size_t> idx = s;
                while (true) {
                    std::size_t f = 0;
                    for (std::size_t i = 0; i < n; ++i) f = f * (g.cuts[i].size() - 1) + idx[i];
                    painted[gi][f] = 1;
                    std::size_t d = n;
                    bool done = false;
                    while (d > 0) {
                        --d;
                        if (++idx[d] < e[d]) break;
                        idx[d] = s[d];
                        if (d == 0) done = true;
                    }
                    if (done) break;
                }
            }
        next_box:;
        }
    g.cell.assign(cells, 0);
    std::vector<char> member(groups.size());
    for (std::size_t f = 0; f < cells; ++f) {
        for (std::size_t gi = 0; gi < groups.size(); ++gi) member[gi] = painted[gi][f];
        g.cell[f] = keep(member) ? 1 : 0;
    }
    g.coarsen();
    return g.boxes();
}

inline PointSet combine_sets(const PointSet& a, const PointSet& b, const std::function<bool(bool, bool)>& op,
                             const Universe& u) {
    PointSet::Dims out;
    static const std::vector<Box> none;
    std::vector<std::size_t> ns;
    for (const auto& [n, bx] : a.dims()) ns.push_back(n);
    for (const auto& [n, bx] : b.dims()) ns.push_back(n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (std::size_t n : ns) {
        auto ia = a.dims().find(n);
        auto ib = b.dims().find(n);
        const auto* ga = ia == a.dims().end() ? &none : &ia->second;
        const auto* gb = ib == b.dims().end() ? &none : &ib->second;
        auto boxes = combine(n, {ga, gb}, [&](const std::vector<char>& m) { return op(m[0] != 0, m[1] != 0); }, u);
        if (!boxes.empty()) out.emplace(n, std::move(boxes));
    }
    return detail_make_canonical(std::move(out));
}

}  // namespace detail

inline PointSet normalize(std::map<std::size_t, std::vector<Box>> dims, const Universe& u) {
    PointSet::Dims out;
    for (auto& [n, boxes] : dims) {
        for (const auto& b : boxes)
            if (b.size() != n) throw PreconditionError("box dimension mismatch");
        auto c = detail::combine(n, {&boxes}, [](const std::vector<char>& m) { return m[0] != 0; }, u);
        if (!c.empty()) out.emplace(n, std::move(c));
    }
    return detail_make_canonical(std::move(out));
}

inline PointSet unite(const PointSet& a, const PointSet& b, const Universe& u = Universe{}) {
    return detail::combine_sets(a, b, [](bool x, bool y) { return x || y; }, u);
}
inline PointSet intersect(const PointSet& a, const PointSet& b, const Universe& u = Universe{}) {
    return detail::combine_sets(a, b, [](bool x, bool y) { return x && y; }, u);
}
inline PointSet difference(const PointSet& a, const PointSet& b, const Universe& u = Universe{}) {
    return detail::combine_sets(a, b, [](bool x, bool y) { return x && !y; }, u);
}
inline PointSet operator|(const PointSet& a, const PointSet& b) { return unite(a, b); }
inline PointSet operator&(const PointSet& a, const PointSet& b) { return intersect(a, b); }
inline PointSet operator-(const PointSet& a, const PointSet& b) { return difference(a, b); }

/// Cartesian product; dimensions add.
inline PointSet product(const PointSet& a, const PointSet& b, const Universe& u = Universe{}) {
    PointSet::Dims out;
    for (const auto& [n, ba] : a.dims())
        for (const auto& [m, bb] : b.dims())
            for (const auto& x : ba)
                for (const auto& y : bb) {
                    Box z = x;
                    z.insert(z.end(), y.begin(), y.end());
                    out[n + m].push_back(std::move(z));
                }
    return normalize(std::move(out), u);
}

inline bool subset_of(const PointSet& a, const PointSet& b) { return difference(a, b).empty(); }

inline EuclidInt num(const PointSet& a) {
    EuclidInt total;
    for (const auto& [n, boxes] : a.dims())
        for (const auto& b : boxes) {
            EuclidInt term(1);
            for (const auto& i : b) term = term * (psi(i.hi) - psi(i.lo));
            total += term;
        }
    return total;
}

/// |{x in A : every coordinate of x is formally included in delta}|.
inline Integer partial_count(const PointSet& a, const Ordinal& delta, const Universe& u = Universe{}) {
    auto hat = subsets_below(delta, u);
    auto count = [&](const Interval& i) {
        auto lo = std::lower_bound(hat.begin(), hat.end(), i.lo);
        auto hi = std::lower_bound(hat.begin(), hat.end(), i.hi);
        return Integer(hi - lo);
    };
    Integer total = 0;
    for (const auto& [n, boxes] : a.dims())
        for (const auto& b : boxes) {
            Integer term = 1;
            for (const auto& i : b) term *= count(i);
            total += term;
        }
    return total;
}

namespace detail {

/// c * 2^lambda as an ordinal, lambda zero or a limit.
inline Ordinal scaled_power(const Ordinal& lambda, const Integer& c) {
    if (lambda.is_zero()) return Ordinal::from_integer(c);
    std::vector<Ordinal::Term> t;
    t.push_back(Ordinal::Term{omega_divmod(lambda).first, c});
    return Ordinal::from_cnf(std::move(t));
}

}  // namespace detail

/// A 1-dimensional set with numerosity z. Requires z >= 0.
inline PointSet realize(const EuclidInt& z, const Universe& u = Universe{}) {
    if (sign(z, u).sign == Sign::NEG) throw PreconditionError("cannot realize a negative value");
    std::vector<Interval> blocks;
    Ordinal cursor;
    for (auto it = z.coeffs().rbegin(); it != z.coeffs().rend(); ++it) {
        const auto& [lambda, c] = *it;
        if (c > 0) {
            Ordinal end = ord_sum(cursor, detail::scaled_power(lambda, c));
            blocks.push_back({cursor, end});
            cursor = end;
            continue;
        }
        Interval& last = blocks.back();
        Ordinal front = ord_sum(last.lo, detail::scaled_power(lambda, -c));
        if (compare(front, last.hi) != Cmp::LT) throw std::logic_error("realize: carve exceeds its block");
        last.lo = front;
    }
    PointSet::Dims d;
    if (!blocks.empty()) d[1] = std::vector<Box>(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) d[1][i] = {blocks[i]};
    return normalize(std::move(d), u);
}

namespace detail {

inline void max_exponent(const PointSet& a, Ordinal& m) {
    for (const auto& [n, boxes] : a.dims())
        for (const auto& b : boxes)
            for (const auto& i : b)
                for (const auto* e : {&i.lo, &i.hi})
                    if (!e->is_zero()) {
                        Ordinal top = exponents(*e).front();
                        if (compare(top, m) == Cmp::GT) m = top;
                    }
}

}  // namespace detail

/// C disjoint from A and B with num(A) + num(C) = num(B). Requires num(A) < num(B).
inline PointSet diff_witness(const PointSet& a, const PointSet& b, const Universe& u = Universe{}) {
    if (compare(num(a), num(b), u).result != Cmp::LT) throw PreconditionError("diff needs num(A) < num(B)");
    PointSet c = realize(num(b) - num(a), u);
    Ordinal m;
    detail::max_exponent(a, m);
    detail::max_exponent(b, m);
    detail::max_exponent(c, m);
    Ordinal shift = pow2(successor(m), u);
    PointSet::Dims d;
    for (const auto& [n, boxes] : c.dims())
        for (auto bx : boxes) {
            for (auto& i : bx) i = {ord_sum(shift, i.lo), ord_sum(shift, i.hi)};
            d[n].push_back(std::move(bx));
        }
    return normalize(std::move(d), u);
}

/// Permutes the coordinates of every n-dimensional box by perms[n] (identity where absent).
inline PointSet permute(const PointSet& a, const std::map<std::size_t, std::vector<std::size_t>>& perms,
                        const Universe& u = Universe{}) {
    PointSet::Dims d;
    for (const auto& [n, boxes] : a.dims()) {
        auto it = perms.find(n);
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        if (it != perms.end()) {
            p = it->second;
            auto sorted = p;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < n; ++i)
                if (sorted.size() != n || sorted[i] != i) throw PreconditionError("not a coordinate permutation");
        }
        for (const auto& b : boxes) {
            Box q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = b[p[i]];
            d[n].push_back(std::move(q));
        }
    }
    return normalize(std::move(d), u);
}

/// Compares num of the permuted set with num(A); EQ is expected.
inline Cmp congruence_check(const PointSet& a, const std::map<std::size_t, std::vector<std::size_t>>& perms,
                            const Universe& u = Universe{}) {
    return compare(num(permute(a, perms, u)), num(a), u).result;
}

/// Boxes as "[a, b) >< [c, d)", tuples grouped as "{0, 1}" or "{(1, 2)}", parts joined by " | ".
inline std::string to_string(const PointSet& a) {
    if (a.empty()) return "{}";
    std::string out;
    auto part = [&](const std::string& s) {
        if (!out.empty()) out += " | ";
        out += s;
    };
    for (const auto& [n, boxes] : a.dims()) {
        for (const auto& b : a.proper_boxes(n)) {
            std::string s;
            for (const auto& i : b) {
                if (!s.empty()) s += " >< ";
                s += "[" + to_string(i.lo) + ", " + to_string(i.hi) + ")";
            }
            part(s);
        }
        auto ts = a.tuple_list(n);
        if (ts.empty()) continue;
        std::string s = "{";
        for (std::size_t k = 0; k < ts.size(); ++k) {
            if (k) s += ", ";
            if (n == 1) {
                s += to_string(ts[k][0]);
                continue;
            }
            s += "(";
            for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + to_string(ts[k][i]);
            s += ")";
        }
        part(s + "}");
    }
    return out;
}

}  // namespace ordcalc
