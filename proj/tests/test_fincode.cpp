#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include <ordcalc/fincode.hpp>

using namespace ordcalc;

namespace {

const Ordinal w = Ordinal::omega();
Ordinal n(std::uint64_t k) { return Ordinal(k); }

}  // namespace

TEST(Fincode, DecodeEncode) {
    EXPECT_TRUE(decode(n(0)).empty());
    EXPECT_EQ(decode(n(6)), (FinOrdSet{n(2), n(1)}));
    EXPECT_EQ(decode(w), FinOrdSet{w});
    EXPECT_EQ(to_string(decode(ord_sum(w, n(10)))), "{w, 3, 1}");
    EXPECT_EQ(encode(FinOrdSet{w, n(3), n(1)}), ord_sum(w, n(10)));
    for (const auto& a : enumerate_universe(FinOrdSet{n(0), n(3), w, successor(w), nat_prod(w, w)}))
        EXPECT_EQ(encode(decode(a)), a);
}

TEST(Fincode, FormalRelations) {
    EXPECT_TRUE(formal_subset(n(0), w));
    EXPECT_FALSE(formal_subset(n(5), n(6)));
    EXPECT_TRUE(formal_member(n(2), n(6)));
    EXPECT_FALSE(formal_member(n(0), n(6)));
    EXPECT_TRUE(formal_proper_subset(n(1), n(3)));
    EXPECT_FALSE(formal_proper_subset(n(3), n(3)));
    EXPECT_TRUE(formal_member(w, successor(w)));
}

TEST(Fincode, JoinMeet) {
    EXPECT_EQ(join(n(5), n(6)), n(7));
    EXPECT_EQ(meet(n(5), n(6)), n(4));
    EXPECT_EQ(join(w, w), w);
    EXPECT_EQ(join(w, n(1)), successor(w));
    auto codes = enumerate_universe(FinOrdSet{n(0), n(2), w, successor(w)});
    for (const auto& a : codes)
        for (const auto& b : codes) {
            EXPECT_EQ(join(a, b), join(b, a));
            EXPECT_TRUE(formal_subset(a, join(a, b)));
            EXPECT_TRUE(formal_subset(meet(a, b), b));
        }
}

TEST(Fincode, CriteriaExamples) {
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b)
            for (std::uint64_t d = 0; d < 256; d += 3) EXPECT_TRUE(criterion_C(n(4), n(a), n(b), n(d)));
    EXPECT_TRUE(criterion_C(n(0), n(0), n(0), n(0)));
    EXPECT_EQ(d_element(n(2), n(1), n(3)), n(31));
    for (std::uint64_t g = 0; g < 4; ++g)
        for (std::uint64_t b = 0; b < 4; ++b) EXPECT_TRUE(criterion_D(n(2), n(1), n(3), n(g), n(b)));
    EXPECT_THROW(criterion_C(n(2), n(0), n(4), n(0)), PreconditionError);
    EXPECT_THROW(criterion_D(n(1), n(0), n(2), n(0), n(0)), PreconditionError);
}

TEST(Fincode, CriteriaTransfinite) {
    auto codes = enumerate_universe(FinOrdSet{n(0), n(1), w, successor(w), nat_sum(w, w)});
    for (const auto& theta : {n(1), w, successor(w)})
        for (const auto& a : codes)
            for (const auto& b : codes) {
                if (compare(b, pow2(theta)) != Cmp::LT) continue;
                for (const auto& d : codes) EXPECT_TRUE(criterion_C(theta, a, b, d));
            }
}

TEST(Fincode, FilterBaseMembership) {
    EXPECT_TRUE(in_filter_base(FilterBaseSet::cone(n(0)), w));
    EXPECT_TRUE(in_D(n(1), n(7)));
    EXPECT_FALSE(in_D(n(1), n(5)));
    EXPECT_TRUE(in_filter_base(FilterBaseSet::cone(n(6)), n(7)));
    EXPECT_FALSE(in_filter_base(FilterBaseSet::cone(n(6)), n(5)));
    EXPECT_TRUE(in_filter_base(FilterBaseSet::dcone(n(1), n(2)), n(7)));
    EXPECT_FALSE(in_filter_base(FilterBaseSet::dcone(n(1), n(8)), n(7)));
    EXPECT_EQ(to_string(FilterBaseSet::dcone(w, n(3))), "D(w, 3)");
}

TEST(Fincode, DMembershipMatchesEnumeration) {
    for (std::uint64_t eta = 0; eta < 4; ++eta) {
        std::set<std::uint64_t> members;
        std::uint64_t cap = std::uint64_t{1} << eta;
        for (std::uint64_t a = 0; a < 8; ++a)
            for (std::uint64_t x = 0; x < cap; ++x) members.insert((a << (2 * eta)) + (x << eta) + x);
        std::uint64_t limit = std::uint64_t{8} << (2 * eta);
        for (std::uint64_t d = 0; d < limit; ++d) EXPECT_EQ(in_D(n(eta), n(d)), members.count(d) == 1) << eta << " " << d;
    }
    EXPECT_TRUE(in_D(w, d_element(w, n(3), n(5))));
    EXPECT_TRUE(in_D(w, d_element(w, w, n(7))));
}

TEST(Fincode, Enumeration) {
    EXPECT_EQ(enumerate_universe(FinOrdSet{}), std::vector<Ordinal>{n(0)});
    EXPECT_EQ(enumerate_universe(FinOrdSet{n(1), n(0)}), (std::vector<Ordinal>{n(0), n(1), n(2), n(3)}));
    auto h = hat([](const Ordinal& x) { return x.is_finite(); }, FinOrdSet{w, n(0)});
    EXPECT_EQ(h, (std::vector<Ordinal>{n(0), n(1)}));
    auto u = enumerate_universe(FinOrdSet{n(0), n(4), w, nat_sum(w, w)});
    EXPECT_TRUE(std::is_sorted(u.begin(), u.end()));
    EXPECT_EQ(mask_of(successor(w), FinOrdSet{n(0), w}), std::optional<std::uint64_t>(3));
    EXPECT_EQ(mask_of(n(2), FinOrdSet{n(0), w}), std::nullopt);
}

TEST(Fincode, CofinalChain) {
    EXPECT_EQ(cofinal_chain(FinOrdSet{n(1), n(0)}), (std::vector<Ordinal>{n(0), n(1), n(3)}));
    EXPECT_EQ(cofinal_chain(FinOrdSet{}), std::vector<Ordinal>{n(0)});
    EXPECT_EQ(cofinal_chain(FinOrdSet{w}), (std::vector<Ordinal>{n(0), w}));
}

TEST(Fincode, Counting) {
    auto codes = enumerate_universe(FinOrdSet{n(0), n(2), w, successor(w), nat_sum(w, w)});
    for (const auto& a : codes) {
        std::size_t below = 0;
        for (const auto& b : codes) below += formal_subset(b, a) ? 1 : 0;
        EXPECT_EQ(below, std::size_t{1} << decode(a).size());
        EXPECT_EQ(subsets_below(a).size(), below);
    }
}

TEST(Fincode, EnumerationBudget) {
    Universe u;
    u.work_budget = 1 << 10;
    std::vector<Ordinal> es;
    for (std::uint64_t i = 0; i < 11; ++i) es.push_back(n(i));
    EXPECT_THROW(enumerate_universe(FinOrdSet(es), u), BudgetError);
    es.pop_back();
    EXPECT_NO_THROW(enumerate_universe(FinOrdSet(es), u));
}
