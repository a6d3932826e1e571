// Numerosity laws on random box unions with endpoints below w*2 + 1. At the indices
// w*xi + xi (xi above 3) of D(w), counting below w*2 is additive, so partial sums of num
// agree with direct point counts; that agreement is the oracle.
#include <random>
#include <vector>

#include "common.hpp"

namespace acceptance {

namespace {

constexpr int kInclusions = 1000, kPairs = 1000, kProducts = 500;

const std::vector<Ordinal>& endpoints() {
    const Ordinal& w = omega();
    static const std::vector<Ordinal> pts{nat(0), nat(1), nat(2), nat(3), w, ord_sum(w, nat(1)), ord_sum(w, nat(2)), ord_mul(w, nat(2))};
    return pts;
}

PointSet random_set(std::mt19937_64& rng, std::size_t dim) {
    const auto& pts = endpoints();
    PointSet s;
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
        Box b;
        for (std::size_t k = 0; k < dim; ++k) {
            std::size_t lo = rng() % (pts.size() - 1);
            std::size_t hi = lo + 1 + rng() % (pts.size() - 1 - lo);
            b.push_back({pts[lo], pts[hi]});
        }
        s = unite(s, PointSet::box(b));
    }
    if (rng() % 3 == 0) {
        Tuple p;
        for (std::size_t k = 0; k < dim; ++k) p.push_back(pts[rng() % pts.size()]);
        s = unite(s, PointSet::tuples({p}));
    }
    return s;
}

std::vector<Ordinal> oracle_indices() {
    std::vector<Ordinal> out;
    for (std::uint64_t xi : {3, 7, 11, 15, 19, 27})
        for (const Ordinal& a : {nat(0), nat(1)}) out.push_back(d_element(omega(), a, nat(xi)));
    return out;
}

}  // namespace

Result criterion_7() {
    Tally t;
    const auto indices = oracle_indices();
    for (const auto& d : indices) t.check(in_D(omega(), d), [&] { return "index outside D(w): " + to_string(d); });
    auto agrees = [&](const PointSet& x, const char* what) {
        EuclidInt n = num(x);
        for (const auto& d : indices)
            t.check(partial_sum(n, d) == partial_count(x, d), [&] { return std::string(what) + " oracle: " + to_string(x) + " at " + to_string(d); });
    };
    std::mt19937_64 rng(7);

    // (E5): proper inclusion is strictly smaller.
    for (int k = 0; k < kInclusions;) {
        std::size_t dim = 1 + k % 2;
        PointSet b = random_set(rng, dim);
        PointSet a = difference(b, random_set(rng, dim));
        if (a == b) continue;
        ++k;
        t.check(subset_of(a, b), [&] { return "inclusion " + to_string(a); });
        t.check(compare(num(a), num(b)).result == Cmp::LT, [&] { return "E5: " + to_string(a) + " in " + to_string(b); });
        agrees(a, "E5");
        agrees(b, "E5");
    }

    // (AP): num(A \ B) + num(A & B) = num(A), and A ~ B iff A \ B ~ B \ A.
    for (int k = 0; k < kPairs; ++k) {
        std::size_t dim = 1 + k % 2;
        PointSet a = random_set(rng, dim), b = random_set(rng, dim);
        t.check(num(a - b) + num(a & b) == num(a), [&] { return "AP sum: " + to_string(a) + " ; " + to_string(b); });
        t.check(compare(num(a), num(b)).result == compare(num(a - b), num(b - a)).result,
                [&] { return "AP comparison: " + to_string(a) + " ; " + to_string(b); });
    }

    // (PP)/(UP): products multiply; a singleton factor changes nothing.
    for (int k = 0; k < kProducts; ++k) {
        PointSet a = random_set(rng, 1 + k % 2), c = random_set(rng, 1);
        PointSet ac = product(a, c);
        t.check(num(ac) == num(a) * num(c), [&] { return "PP: " + to_string(a) + " x " + to_string(c); });
        if (k % 2 == 0) agrees(ac, "PP");  // keys of 3-dimensional sets reach w*3
        PointSet one = PointSet::tuples({{endpoints()[rng() % endpoints().size()]}});
        t.check(num(product(a, one)) == num(a), [&] { return "UP: " + to_string(a) + " x " + to_string(one); });
    }

    // The square of [0, w) against the initial segment [0, w^2).
    PointSet nat_line = PointSet::interval(nat(0), omega());
    PointSet square = product(nat_line, nat_line), segment = PointSet::interval(nat(0), ord_mul(omega(), omega()));
    t.check(num(square) == num(segment), [&] { return "num([0,w)^2) = " + to_string(num(square)); });
    for (const auto& d : indices)
        t.check(partial_count(square, d) == partial_count(segment, d), [&] { return "square count at " + to_string(d); });
    return t.result("checks");
}

}  // namespace acceptance
