#include <set>

#include <gtest/gtest.h>

#include "oddortho/kostant.hpp"
#include "oddortho/oracle.hpp"

using namespace oddortho;

namespace {

KostantPair pair(int n, int k, std::vector<int> I, std::vector<int> J) {
    return KostantPair(RankContext(n, k), std::move(I), std::move(J));
}

HighestWeight lam(std::vector<std::int64_t> v) { return HighestWeight(std::move(v)); }

}  // namespace

TEST(KostantPair, Validation) {
    EXPECT_THROW(pair(3, 1, {4}, {}), ConstraintError);
    EXPECT_THROW(pair(3, 2, {2, 1}, {}), ConstraintError);
    EXPECT_THROW(pair(3, 2, {1}, {1}), ConstraintError);
    EXPECT_THROW(pair(3, 2, {1}, {}), ConstraintError);
    EXPECT_THROW(pair(3, 1, {0}, {}), ConstraintError);
}

TEST(KostantPair, DerivedIndices) {
    auto p = pair(5, 3, {2, 5}, {3});
    EXPECT_EQ(p.size_I(), 2);
    EXPECT_EQ(p.size_J(), 1);
    EXPECT_EQ(p.R(), (std::vector<int>{1, 4}));
    EXPECT_EQ(p.i(2), 5);
    EXPECT_EQ(p.j(1), 3);
    EXPECT_EQ(p.r(2), 4);
    EXPECT_EQ(p.to_string(), "({2,5},{3})");
}

TEST(HighestWeight, Validation) {
    EXPECT_THROW(lam({1, 2, 0}), ConstraintError);
    EXPECT_THROW(lam({0, 0, -1}), ConstraintError);
    EXPECT_THROW(lam({}), ConstraintError);
    try {
        lam({1, 2, 0});
    } catch (const ConstraintError& e) {
        EXPECT_NE(std::string(e.what()).find("dominant"), std::string::npos);
    }
    EXPECT_EQ(HighestWeight::zero(3), lam({0, 0, 0}));
}

TEST(ToSignedPerm, Examples) {
    EXPECT_EQ(to_signed_perm(pair(3, 1, {3}, {})), SignedPermutation({2, 3, 1}, {1, 1, -1}));
    EXPECT_EQ(to_signed_perm(pair(3, 1, {}, {1})), SignedPermutation::identity(3));
    EXPECT_EQ(to_signed_perm(pair(3, 2, {1}, {2})), SignedPermutation({2, 1, 3}, {-1, 1, 1}));
}

TEST(EnumerateKostant, Counts) {
    EXPECT_EQ(enumerate_kostant(RankContext(3, 1)).size(), 6u);
    EXPECT_EQ(enumerate_kostant(RankContext(3, 2)).size(), 12u);
    EXPECT_EQ(enumerate_kostant(RankContext(3, 3)).size(), 8u);
}

TEST(EnumerateKostant, MatchesBruteForceAndIsOrdered) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            RankContext ctx(n, k);
            auto reps = enumerate_kostant(ctx);
            std::set<SignedPermutation> ws;
            for (const auto& r : reps) ws.insert(r.w);
            EXPECT_EQ(static_cast<std::int64_t>(reps.size()), (std::int64_t{1} << k) * oracle::binomial(n, k));
            EXPECT_EQ(ws, oracle::brute_kostant(ctx)) << "n=" << n << " k=" << k;
            for (std::size_t a = 1; a < reps.size(); ++a) EXPECT_LT(reps[a - 1].pair, reps[a].pair);
        }
}

TEST(LengthFormula, Examples) {
    EXPECT_EQ(length_formula(pair(3, 1, {}, {1})), 0);
    EXPECT_EQ(length_formula(pair(3, 1, {3}, {})), 3);
    EXPECT_EQ(length_formula(pair(3, 2, {1}, {2})), 4);
}

TEST(LengthFormula, EqualsInversionCount) {
    for (int n = 1; n <= 5; ++n) {
        RootSet rs(n);
        for (int k = 1; k <= n; ++k)
            for (const auto& r : enumerate_kostant(RankContext(n, k)))
                EXPECT_EQ(r.length, inv_length(r.w, rs)) << r.pair.to_string() << " n=" << n;
    }
}

TEST(EvalT, Examples) {
    EXPECT_EQ(eval_t(pair(3, 1, {3}, {}), HighestWeight::zero(3)), HalfInt::from_twice(1));
    EXPECT_EQ(eval_t(pair(3, 1, {}, {1}), HighestWeight::zero(3)), HalfInt::from_twice(-5));
    EXPECT_EQ(eval_t(pair(3, 2, {1}, {2}), lam({1, 0, 0})), HalfInt::from_int(2));
    EXPECT_THROW(eval_t(pair(3, 1, {3}, {}), HighestWeight::zero(4)), DimensionError);
}

TEST(MuW, Examples) {
    EXPECT_EQ(mu_w(pair(3, 1, {3}, {}), HighestWeight::zero(3)), Weight({0, 1, 1}));
    EXPECT_EQ(mu_w(pair(3, 1, {}, {1}), HighestWeight::zero(3)), Weight({0, 0, 0}));
    EXPECT_EQ(mu_w(pair(3, 2, {1}, {2}), lam({1, 0, 0})), Weight({2, -2, 0}));
    EXPECT_EQ(mu_w(pair(3, 3, {3}, {1, 2}), HighestWeight::zero(3)),
              Weight({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));
    EXPECT_THROW(mu_w(pair(3, 1, {3}, {}), HighestWeight::zero(2)), DimensionError);
}

TEST(MuW, AgreesWithDirectComputation) {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            RankContext ctx(n, k);
            for (const auto& l : oracle::dominant_weights(n, 2))
                for (const auto& r : enumerate_kostant(ctx)) {
                    EXPECT_EQ(mu_w(r.pair, l), oracle::brute_mu(r.w, l, ctx));
                    EXPECT_EQ(eval_t(r.pair, l), oracle::brute_t(r.w, l, ctx));
                }
        }
}

TEST(IsSelfDual, Examples) {
    EXPECT_TRUE(is_self_dual(Weight({0, 1, 1}), RankContext(3, 1)));
    EXPECT_TRUE(is_self_dual(Weight({2, -2, 0}), RankContext(3, 2)));
    EXPECT_FALSE(is_self_dual(Weight({1, 0, 0}), RankContext(3, 1)));
    EXPECT_THROW(is_self_dual(Weight({1, 0}), RankContext(3, 1)), DimensionError);
}

TEST(InverseSimpleImages, Examples) {
    auto a = inverse_simple_images(pair(3, 1, {3}, {}));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0], std::make_pair(2, Weight({1, -1, 0})));
    EXPECT_EQ(a[1], std::make_pair(3, Weight({0, 1, 0})));

    auto b = inverse_simple_images(pair(3, 1, {}, {1}));
    EXPECT_EQ(b[0].second, Weight({0, 1, -1}));
    EXPECT_EQ(b[1].second, Weight({0, 0, 1}));

    auto c = inverse_simple_images(pair(3, 2, {1}, {2}));
    EXPECT_EQ(c[0], std::make_pair(1, Weight({1, 1, 0})));
}

TEST(InverseSimpleImages, AllPositive) {
    for (int n = 1; n <= 5; ++n) {
        RootSet rs(n);
        for (int k = 1; k <= n; ++k)
            for (const auto& r : enumerate_kostant(RankContext(n, k)))
                for (const auto& [idx, img] : inverse_simple_images(r.pair)) EXPECT_TRUE(rs.is_positive(img));
    }
}

TEST(InverseSimpleImages, PrintedTableDiffersOnlyInSignOfRowJ) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& r : enumerate_kostant(RankContext(n, k))) {
                const auto& p = r.pair;
                auto diffs = inverse_table_discrepancies(p);
                if (p.size_I() >= 1 && p.size_J() >= 1) {
                    ASSERT_EQ(diffs.size(), 1u) << p.to_string();
                    EXPECT_EQ(diffs[0].index, p.size_J());
                    const Weight ej = Weight::unit(n, p.j(p.size_J()));
                    const Weight ei = Weight::unit(n, p.i(p.size_I()));
                    EXPECT_EQ(diffs[0].printed, ej - ei);
                    EXPECT_EQ(diffs[0].direct, ej + ei);
                } else {
                    EXPECT_TRUE(diffs.empty()) << p.to_string();
                }
            }
}

TEST(KostantRep, CachesImageAndLength) {
    KostantRep r(pair(4, 2, {2}, {4}));
    EXPECT_EQ(r.w, to_signed_perm(r.pair));
    EXPECT_EQ(r.length, length_formula(r.pair));
    EXPECT_EQ(r.length, inv_length(r.w, 4));
}

TEST(SelfDuality, IMustDominateJForNonNegativeT) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            RankContext ctx(n, k);
            for (const auto& l : oracle::dominant_weights(n, 2))
                for (const auto& r : enumerate_kostant(ctx))
                    if (eval_t(r.pair, l) >= HalfInt{} && is_self_dual(mu_w(r.pair, l), ctx)) {
                        EXPECT_GE(r.pair.size_I(), r.pair.size_J());
                    }
        }
}
