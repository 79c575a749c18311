#include <gtest/gtest.h>

#include "oddortho/oracle.hpp"
#include "oddortho/serialize.hpp"

using namespace oddortho;

TEST(Json, HalfIntAndCoordinates) {
    EXPECT_EQ(json(HalfInt::from_twice(5)).dump(), R"({"twice":5})");
    EXPECT_EQ(halfint_from_json(json::parse(R"({"twice":-3})")), HalfInt::from_twice(-3));
    EXPECT_EQ(coord_to_json(Rational(3)).dump(), R"({"twice":6})");
    EXPECT_EQ(coord_to_json(Rational(-2, 3)).dump(), R"({"den":3,"num":-2})");
    EXPECT_EQ(coord_from_json(coord_to_json(Rational(-2, 3))), Rational(-2, 3));
}

TEST(Json, Weight) {
    const Weight w({Rational(1, 3), Rational(1, 2), Rational(-4)});
    const json j = w;
    EXPECT_EQ(j.dump(), R"([{"den":3,"num":1},{"twice":1},{"twice":-8}])");
    EXPECT_EQ(weight_from_json(j), w);
}

TEST(Json, DegreeRange) {
    EXPECT_EQ(json(DegreeRange(5, 5)).dump(), R"({"hi":5,"lo":5})");
    EXPECT_EQ(degree_range_from_json(json::parse(R"({"lo":2,"hi":3})")), DegreeRange(2, 3));
    EXPECT_THROW(degree_range_from_json(json::parse(R"({"lo":4,"hi":3})")), ConstraintError);
}

TEST(Json, KostantRepFields) {
    KostantRep r(KostantPair(RankContext(3, 1), {3}, {}));
    EXPECT_EQ(json(r).dump(), R"({"I":[3],"J":[],"k":1,"length":3,"n":3,"perm":[2,3,1],"signs":[1,1,-1]})");
}

TEST(Json, KostantRepRejectsInconsistentCache) {
    json j = KostantRep(KostantPair(RankContext(3, 1), {3}, {}));
    j["length"] = 4;
    EXPECT_THROW(kostant_rep_from_json(j), ConstraintError);
}

TEST(Json, ClassifiedRepRoundTripOverBox) {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& lam : oracle::dominant_weights(n, 1))
                for (const auto& rep : enumerate_kostant(RankContext(n, k))) {
                    const auto c = classify_rep(rep, lam);
                    const json j = c;
                    EXPECT_EQ(classified_rep_from_json(json::parse(j.dump())), c);
                }
}

TEST(Json, CuspidalDatum) {
    CuspidalDatum siegel(RankContext(3, 3), true, false, std::nullopt, std::nullopt, false);
    const json j = siegel;
    EXPECT_TRUE(j["L_half_nonzero"].is_null());
    EXPECT_TRUE(j["rs_pole_at_one"].is_null());
    EXPECT_EQ(cuspidal_datum_from_json(j), siegel);

    CuspidalDatum d(RankContext(4, 2), true, true, false, true, true);
    EXPECT_EQ(cuspidal_datum_from_json(json(d)), d);
}

TEST(Json, VerdictRoundTrip) {
    Verdict residual{VerdictKind::Residual, HalfInt::from_twice(1), DegreeRange(5, 5), {"pole at s=1/2"}};
    const json j = residual;
    EXPECT_EQ(j["kind"], "Residual");
    EXPECT_EQ(j["window"]["lo"], 5);
    EXPECT_EQ(verdict_from_json(j), residual);

    Verdict none{VerdictKind::NoClass, std::nullopt, std::nullopt, {"coefficient module is not self-dual"}};
    const json k = none;
    EXPECT_TRUE(k["t"].is_null());
    EXPECT_TRUE(k["window"].is_null());
    EXPECT_EQ(verdict_from_json(k), none);

    json bad = k;
    bad["kind"] = "Maybe";
    EXPECT_THROW(verdict_from_json(bad), ConstraintError);
}

TEST(Json, SuiteReport) {
    oracle::SuiteReport r;
    r.expect(false, "c", "in", "1", "2");
    const json j = r;
    EXPECT_EQ(j["checks_run"], 1);
    EXPECT_EQ(j["pass"], false);
    EXPECT_EQ(j["failures"][0]["check"], "c");
}
