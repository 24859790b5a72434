#include <bfall/claims.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace bfall;

TEST(Claims, RegistryHasStableIds)
{
    std::set<std::string> ids;
    for (const auto & c : claims::registry())
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
    for (const char * id : {"prop-lex-complete", "prop-cart-fall", "thm-crown", "thm-tensor", "lem-lift-hom",
             "lem-lift-bhom", "lem-lift-domatic", "cor-direct-union", "thm-cart-lift", "thm-direct-proj",
             "prop-strong-sub-lex", "counterexample", "ternary-fall-6"})
        EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Claims, UnknownIdIsAnInputError)
{
    EXPECT_THROW(claims::run_claims({"no-such-claim"}, {}), input_error);
}

TEST(Claims, DeterministicAcrossRunsAndJobs)
{
    const std::vector<std::string> ids{"thm-crown", "lem-lift-hom", "thm-direct-proj", "obs-c5-lex", "prop-strong-sub-lex"};
    auto a = claims::run_claims(ids, {.seed = 0}, 1);
    auto b = claims::run_claims(ids, {.seed = 0}, 3);
    ASSERT_EQ(a.entries.size(), ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        EXPECT_EQ(a.entries[i].id, ids[i]);
        EXPECT_EQ(a.entries[i].status, claims::Status::pass) << a.entries[i].details;
        EXPECT_EQ(a.entries[i].details, b.entries[i].details);
        EXPECT_EQ(a.entries[i].status, b.entries[i].status);
    }
    EXPECT_TRUE(a.ok());
}

TEST(Claims, OtherSeedsAlsoPass)
{
    for (std::uint64_t seed : {1u, 2u, 17u}) {
        auto r = claims::run_claims({"lem-lift-bhom", "lem-lift-domatic", "cor-direct-union", "oracle-equivalence"},
            {.seed = seed}, 1);
        for (const auto & e : r.entries)
            EXPECT_EQ(e.status, claims::Status::pass) << e.id << " seed " << seed << ": " << e.details;
    }
}

TEST(Claims, ReportJsonShape)
{
    auto r = claims::run_claims({"prop-lex-complete"}, {});
    auto j = r.to_json();
    EXPECT_EQ(j["ok"], true);
    ASSERT_EQ(j["claims"].size(), 1u);
    EXPECT_EQ(j["claims"][0]["id"], "prop-lex-complete");
    EXPECT_EQ(j["claims"][0]["status"], "pass");
    EXPECT_TRUE(j["claims"][0].contains("elapsed"));
}

TEST(Claims, FailuresAreReported)
{
    claims::Tally t;
    t.expect(true, "fine");
    t.expect(false, "broken thing");
    auto r = t.result("demo");
    EXPECT_EQ(r.status, claims::Status::fail);
    EXPECT_NE(r.details.find("broken thing"), std::string::npos);
    claims::CheckReport report{{r}};
    EXPECT_FALSE(report.ok());
    claims::CheckReport skipped{{{"x", claims::Status::skipped, "", 0.0}}};
    EXPECT_TRUE(skipped.ok());
}
