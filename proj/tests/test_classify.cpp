#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oddortho/classify.hpp"
#include "oddortho/oracle.hpp"

using namespace oddortho;

namespace {

HighestWeight lam(std::vector<std::int64_t> v) { return HighestWeight(std::move(v)); }

std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs_of(const std::vector<ClassifiedRep>& reps) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& c : reps) out.emplace_back(c.rep.pair.I(), c.rep.pair.J());
    return out;
}

bool has(const ClassifiedRep& c, Family f) { return std::find(c.families.begin(), c.families.end(), f) != c.families.end(); }

using PairList = std::vector<std::pair<std::vector<int>, std::vector<int>>>;

}  // namespace

TEST(Family, NamesRoundTrip) {
    for (Family f : {Family::Half, Family::OneI, Family::OneII, Family::OneIII, Family::OneIV})
        EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_THROW(parse_family("one_v"), ConstraintError);
}

TEST(ScanT, Examples) {
    auto a = scan_t(RankContext(3, 1), HighestWeight::zero(3), Rational(1, 2));
    EXPECT_EQ(pairs_of(a), (PairList{{{3}, {}}}));

    auto b = scan_t(RankContext(3, 2), lam({1, 0, 0}), Rational(2));
    auto pb = pairs_of(b);
    EXPECT_NE(std::find(pb.begin(), pb.end(), std::make_pair(std::vector<int>{1}, std::vector<int>{2})), pb.end());

    EXPECT_TRUE(scan_t(RankContext(3, 1), HighestWeight::zero(3), Rational(1, 4)).empty());
}

TEST(ScanT, OnlySelfDualAtTarget) {
    RankContext ctx(4, 2);
    const auto l = lam({2, 1, 1, 0});
    for (int twice = -12; twice <= 12; ++twice) {
        const HalfInt t = HalfInt::from_twice(twice);
        for (const auto& c : scan_t(ctx, l, t)) {
            EXPECT_EQ(c.t, t);
            EXPECT_TRUE(c.self_dual);
        }
    }
}

TEST(VerifyNoSmallT, Examples) {
    EXPECT_TRUE(verify_no_small_t(RankContext(3, 1), HighestWeight::zero(3)).pass);
    EXPECT_TRUE(verify_no_small_t(RankContext(3, 2), lam({1, 0, 0})).pass);
    auto r = verify_no_small_t(RankContext(4, 2), lam({2, 1, 0, 0}));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.checked, 24);
    EXPECT_FALSE(r.violation.has_value());
}

TEST(FamilyHalf, Examples) {
    auto a = family_half(RankContext(3, 1), HighestWeight::zero(3));
    ASSERT_EQ(pairs_of(a), (PairList{{{3}, {}}}));
    EXPECT_EQ(a[0].rep.length, 3);
    EXPECT_EQ(half_family_length(RankContext(3, 1)), 3);
    EXPECT_TRUE(has(a[0], Family::Half));

    auto b = family_half(RankContext(3, 2), lam({1, 1, 0}));
    ASSERT_EQ(pairs_of(b), (PairList{{{1}, {2}}}));
    EXPECT_EQ(b[0].rep.length, 4);
    EXPECT_EQ(half_family_length(RankContext(3, 2)), 4);

    EXPECT_TRUE(family_half(RankContext(3, 1), lam({1, 1, 1})).empty());
    EXPECT_TRUE(scan_t(RankContext(3, 1), lam({1, 1, 1}), Rational(1, 2)).empty());
}

TEST(FamilyHalf, EqualsScanWithUniqueLength) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            RankContext ctx(n, k);
            for (const auto& l : oracle::dominant_weights(n, 2)) {
                auto fam = family_half(ctx, l);
                auto scan = scan_t(ctx, l, HalfInt::from_twice(k));
                EXPECT_EQ(pairs_of(fam), pairs_of(scan));
                for (const auto& c : scan) EXPECT_EQ(c.rep.length, half_family_length(ctx));
            }
        }
}

TEST(FamilyOne, Examples) {
    // ({2,3},{}) also evaluates at t = 2 with mu = (0,0,3), which is self-dual.
    auto a = family_one(RankContext(3, 2), lam({1, 0, 0}));
    ASSERT_EQ(pairs_of(a), (PairList{{{1}, {2}}, {{2, 3}, {}}}));
    EXPECT_EQ(a[0].families, std::vector<Family>{Family::OneIII});
    EXPECT_EQ(a[0].rep.length, 4);
    EXPECT_TRUE(has(a[1], Family::OneI));
    EXPECT_EQ(a[1].rep.length, 5);
    EXPECT_EQ(pairs_of(a), pairs_of(scan_t(RankContext(3, 2), lam({1, 0, 0}), Rational(2))));
    EXPECT_EQ(one_family_length_window(RankContext(3, 2)).first, 4);

    // ({1},{3}) also evaluates at t = 2 with mu = (1,-1,1) and matches the (iv) shape.
    auto b = family_one(RankContext(3, 2), HighestWeight::zero(3));
    ASSERT_EQ(pairs_of(b), (PairList{{{1}, {3}}, {{2, 3}, {}}}));
    EXPECT_EQ(b[0].families, std::vector<Family>{Family::OneIV});
    EXPECT_TRUE(has(b[1], Family::OneI));
    EXPECT_EQ(b[1].rep.length, 5);
    EXPECT_EQ(pairs_of(b), pairs_of(scan_t(RankContext(3, 2), HighestWeight::zero(3), Rational(2))));

    // The (i) shape only constrains lambda_2 = lambda_3 = 0, so lambda_1 = 3 still yields ({2,3},{}).
    const auto c = family_one(RankContext(3, 2), lam({3, 0, 0}));
    ASSERT_EQ(pairs_of(c), (PairList{{{2, 3}, {}}}));
    const RankContext c32(3, 2);
    EXPECT_EQ(oracle::brute_scan(c32, lam({3, 0, 0}), HalfInt::from_int(2), oracle::brute_kostant(c32)),
              std::set<SignedPermutation>{c[0].rep.w});
}

TEST(FamilyOne, DegenerateOverlapIsMultiTagged) {
    auto b = family_one(RankContext(3, 2), HighestWeight::zero(3));
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[1].families, (std::vector<Family>{Family::OneI, Family::OneII}));
}

TEST(FamilyOne, Preconditions) {
    EXPECT_THROW(family_one(RankContext(4, 3), HighestWeight::zero(4)), PreconditionError);
    EXPECT_THROW(family_one(RankContext(4, 4), HighestWeight::zero(4)), PreconditionError);
}

TEST(FamilyOne, EveryMemberHasTEqualKAndIsSelfDual) {
    for (int n = 3; n <= 5; ++n)
        for (int k = 2; k < n; k += 2) {
            RankContext ctx(n, k);
            for (const auto& l : oracle::dominant_weights(n, 2))
                for (const auto& c : family_one(ctx, l)) {
                    EXPECT_EQ(c.t, HalfInt::from_int(k));
                    EXPECT_TRUE(c.self_dual);
                    const auto [lo, hi] = one_family_length_window(ctx);
                    EXPECT_LE(lo, c.rep.length);
                    EXPECT_LE(c.rep.length, hi);
                    for (Family f : c.families) {
                        const auto [flo, fhi] = one_family_length_bounds(ctx, f);
                        EXPECT_LE(flo, c.rep.length);
                        EXPECT_LE(c.rep.length, fhi);
                    }
                }
        }
}

TEST(FamilyOne, KTwoIsComplete) {
    for (int n = 3; n <= 5; ++n) {
        RankContext ctx(n, 2);
        for (const auto& l : oracle::dominant_weights(n, 2))
            EXPECT_EQ(pairs_of(family_one(ctx, l)), pairs_of(scan_t(ctx, l, Rational(2))));
    }
}

// For k >= 4 the four patterns miss self-dual representatives that mix the
// two shapes (j_l = i_l + 1 with a gap of 1, j_l = i_l + 2 with no gap) across l.
TEST(FamilyOne, MixedPatternIsNotCovered) {
    RankContext ctx(5, 4);
    const auto l = lam({2, 2, 2, 2, 1});
    KostantRep rep(KostantPair(ctx, {1, 4}, {3, 5}));
    auto c = classify_rep(rep, l);
    EXPECT_EQ(c.t, HalfInt::from_int(4));
    EXPECT_TRUE(c.self_dual);
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(c.mu.at(i), Rational(std::vector<int>{4, 2, -2, -4}[i - 1]));
    EXPECT_TRUE(c.families.empty());

    auto scan = pairs_of(scan_t(ctx, l, Rational(4)));
    EXPECT_NE(std::find(scan.begin(), scan.end(), std::make_pair(std::vector<int>{1, 4}, std::vector<int>{3, 5})),
              scan.end());
    const auto [lo, hi] = one_family_length_window(ctx);
    EXPECT_LE(lo, rep.length);
    EXPECT_LE(rep.length, hi);
}

TEST(ClassifyRep, TagsRequireSelfDualityAndT) {
    RankContext ctx(3, 1);
    for (const auto& r : enumerate_kostant(ctx)) {
        auto c = classify_rep(r, HighestWeight::zero(3));
        if (!c.families.empty()) {
            EXPECT_TRUE(c.self_dual);
            EXPECT_EQ(c.t, HalfInt::from_twice(1));
        }
    }
}
