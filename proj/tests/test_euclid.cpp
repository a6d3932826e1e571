#include <random>

#include <gtest/gtest.h>

#include <ordcalc/euclid.hpp>

using namespace ordcalc;

namespace {

const Ordinal w = Ordinal::omega();
const Ordinal w2 = nat_prod(w, w);
Ordinal n(std::uint64_t k) { return Ordinal(k); }

const std::vector<Ordinal>& keys() {
    static const std::vector<Ordinal> k{n(0), w, nat_sum(w, w), w2, nat_sum(w2, w)};
    return k;
}

EuclidInt random_eint(std::mt19937_64& rng, std::size_t nkeys = 5) {
    EuclidInt::Coeffs c;
    for (std::size_t i = 0; i < nkeys; ++i) {
        const auto& k = keys()[i];
        if (rng() % 2) c[k] = Integer(static_cast<int>(rng() % 15) - 7);
    }
    return EuclidInt::from_coeffs(c);
}

/// Code whose exponent set is {w*k + j : k < blocks, j < per_block}.
Ordinal full_blocks(std::uint64_t blocks, std::uint64_t per_block) {
    std::vector<Ordinal> es;
    for (std::uint64_t k = 0; k < blocks; ++k)
        for (std::uint64_t j = 0; j < per_block; ++j) es.push_back(ord_sum(ord_mul(w, n(k)), n(j)));
    return encode(FinOrdSet(std::move(es)));
}

Ordinal random_code(std::mt19937_64& rng) {
    std::vector<Ordinal> es;
    for (std::uint64_t k = 0; k < 3; ++k)
        for (std::uint64_t j = 0; j < 6; ++j)
            if (rng() % 3 == 0) es.push_back(ord_sum(ord_mul(w, n(k)), n(j)));
    return encode(FinOrdSet(std::move(es)));
}

}  // namespace

TEST(Euclid, Rendering) {
    EuclidInt z = EuclidInt::monomial(w, 2) - EuclidInt(3);
    EXPECT_EQ(to_string(z), "2*P(w) - 3");
    EXPECT_EQ(to_string(-EuclidInt::monomial(w, 1)), "-P(w)");
    EXPECT_EQ(to_string(EuclidInt()), "0");
    EXPECT_EQ(EuclidInt::monomial(ord_sum(w, n(2)), 1), EuclidInt::monomial(w, 4));
    EXPECT_EQ(EuclidInt::monomial(n(3), 1), EuclidInt(8));
    EXPECT_THROW(EuclidInt::from_coeffs({{n(3), 1}}), PreconditionError);
}

TEST(Euclid, RingLaws) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        EuclidInt a = random_eint(rng), b = random_eint(rng), c = random_eint(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * unit(), a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(neg(neg(a)), a);
    }
    EXPECT_EQ(EuclidInt::monomial(w, 1) * EuclidInt::monomial(w, 1), EuclidInt::monomial(nat_sum(w, w), 1));
}

TEST(Euclid, PartialSumIsEventuallyMultiplicative) {
    std::mt19937_64 rng(2);
    // Keys below w^2 only; products then stay below w*5.
    Ordinal delta = full_blocks(5, 4);
    for (int i = 0; i < 300; ++i) {
        EuclidInt a = random_eint(rng, 3), b = random_eint(rng, 3);
        EXPECT_EQ(partial_sum(a * b, delta), partial_sum(a, delta) * partial_sum(b, delta));
        EXPECT_EQ(partial_sum(a + b, delta), partial_sum(a, delta) + partial_sum(b, delta));
    }
}

TEST(Euclid, SignWitnessIsSound) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 400; ++i) {
        EuclidInt z = random_eint(rng);
        auto s = sign(z);
        if (z.is_zero()) {
            EXPECT_EQ(s.sign, Sign::ZERO);
            continue;
        }
        for (int j = 0; j < 20; ++j) {
            Ordinal delta = join(s.witness, random_code(rng));
            Integer p = partial_sum(z, delta);
            EXPECT_EQ(p > 0 ? Sign::POS : p < 0 ? Sign::NEG : Sign::ZERO, s.sign) << to_string(z) << " at " << to_string(delta);
        }
    }
}

TEST(Euclid, SignExamples) {
    auto s = sign(EuclidInt::monomial(w, 2) - EuclidInt(3));
    EXPECT_EQ(s.sign, Sign::POS);
    EXPECT_EQ(s.witness, n(3));
    auto t = sign(EuclidInt::monomial(w, -1));
    EXPECT_EQ(t.sign, Sign::NEG);
    EXPECT_EQ(t.witness, n(0));
    EXPECT_EQ(sign(EuclidInt::monomial(w2, 1) - EuclidInt::monomial(nat_sum(w, w), 5) - EuclidInt(2)).witness,
              ord_mul(w2, n(7)));
}

TEST(Euclid, Compare) {
    auto c = compare(EuclidInt::monomial(w, 2) - EuclidInt(3), EuclidInt::monomial(w, 1));
    EXPECT_EQ(c.result, Cmp::GT);
    EXPECT_EQ(c.witness, n(3));
    EXPECT_EQ(compare(EuclidInt(5), EuclidInt(5)).result, Cmp::EQ);
    EXPECT_EQ(compare(EuclidInt(100), EuclidInt::monomial(w, 1)).result, Cmp::LT);
}

TEST(Euclid, PsiCountsCodesBelow) {
    std::vector<Ordinal> as{n(0), n(5), w, ord_sum(w, n(3)), nat_sum(w, w), ord_sum(nat_sum(w, w), n(1)), w2};
    std::mt19937_64 rng(4);
    for (const auto& a : as) {
        Ordinal wit = psi_witness(a);
        for (int j = 0; j < 10; ++j) {
            Ordinal delta = join(wit, random_code(rng));
            Integer below = 0;
            for (const auto& b : subsets_below(delta))
                if (compare(b, a) == Cmp::LT) ++below;
            EXPECT_EQ(partial_sum(psi(a), delta), below) << to_string(a) << " at " << to_string(delta);
        }
    }
    EXPECT_EQ(psi(ord_sum(w, n(3))), EuclidInt::monomial(w, 1) + EuclidInt(3));
}

TEST(Euclid, PsiIsMonotoneAndAdditive) {
    std::vector<Ordinal> as{n(0), n(1), n(7), w, ord_sum(w, n(3)), nat_sum(w, w), w2, nat_sum(w2, n(2))};
    for (const auto& a : as)
        for (const auto& b : as) {
            EXPECT_EQ(compare(psi(a), psi(b)).result, compare(a, b));
            EXPECT_EQ(psi(nat_sum(a, b)), psi(a) + psi(b));
        }
}

TEST(Euclid, FromStepMatchesCounting) {
    std::vector<StepSequence> xs{
        StepSequence::indicator(n(0), w),
        StepSequence({{n(3), ord_sum(w, n(2)), 2}}, {{n(1), -4}}),
        StepSequence({{w, nat_sum(w, w), 1}, {nat_sum(w, w), w2, -1}}),
        StepSequence({{n(0), n(6), 3}}),
    };
    std::mt19937_64 rng(5);
    for (const auto& x : xs) {
        Ordinal wit = from_step_witness(x);
        for (int j = 0; j < 10; ++j) {
            Ordinal delta = join(wit, random_code(rng));
            EXPECT_EQ(partial_sum(from_step(x), delta), counting(x, delta)) << to_string(x);
        }
    }
    EXPECT_EQ(from_step(StepSequence::indicator(n(0), w)), EuclidInt::monomial(w, 1));
}
