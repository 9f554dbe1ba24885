#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fdlb/decision.hpp"
#include "properties.hpp"

namespace fdlb::decision {
namespace {

using reasoning::SaturatedKb;

const std::string kFixtures = FDLB_FIXTURE_DIR;
const std::vector<std::string> kTabs{"tab_1", "tab_2", "tab_3"};

SaturatedKb load(const std::string& name) {
  auto r = reasoning::saturate(testing::load_kb_file(kFixtures + "/" + name));
  return std::move(std::get<SaturatedKb>(r));
}
UtilityBox expert(int n) { return testing::load_ubox_file(kFixtures + "/expert" + std::to_string(n) + ".ubox"); }

class TabletDecisions : public ::testing::Test {
 protected:
  SaturatedKb crisp = load("tablet.kb");
  SaturatedKb pre = load("tablet_fuzzy.kb");
  SaturatedKb done = load("tablet_completed.kb");
};

TEST_F(TabletDecisions, SigmaUtilities) {
  EXPECT_EQ(sigma_utility(crisp, expert(1), "tab_1"), Decimal(80));
  EXPECT_EQ(sigma_utility(crisp, expert(1), "tab_2"), Decimal(50));
  EXPECT_EQ(sigma_utility(crisp, expert(1), "tab_3"), Decimal(40));
  EXPECT_EQ(sigma_utility(crisp, expert(2), "tab_1"), Decimal(30));
  EXPECT_EQ(sigma_utility(crisp, expert(2), "tab_2"), Decimal(60));
  EXPECT_EQ(sigma_utility(crisp, expert(2), "tab_3"), Decimal(20));
  EXPECT_EQ(sigma_utility(crisp, UtilityBox{"nobody", {}}, "tab_1"), Decimal(0));
}

TEST_F(TabletDecisions, SigmaCountsOnlyFullMembership) {
  // tab_3 is LightweightTablet to degree 0.6 only.
  UtilityBox light{"e", {{"LightweightTablet", Decimal(40)}}};
  EXPECT_EQ(sigma_utility(pre, light, "tab_3"), Decimal(0));
  EXPECT_EQ(ubox_fuzzy_utility(pre, light, "tab_3"), Decimal(24));
}

TEST_F(TabletDecisions, FuzzyUtilityValue) {
  auto light = fuzzy_utility_value(pre, "LightweightTablet", Decimal(40), "tab_3");
  EXPECT_TRUE(light.decided());
  EXPECT_EQ(light.contribution, Decimal(24));
  EXPECT_EQ(fuzzy_utility_value(pre, "UpperclassTablet", Decimal(17), "tab_1").contribution, Decimal(17));
  auto expensive = fuzzy_utility_value(crisp, "ExpensiveTablet", Decimal(50), "tab_2");
  EXPECT_TRUE(expensive.decided());
  EXPECT_EQ(expensive.contribution, Decimal(0));
  auto unknown = fuzzy_utility_value(pre, "InexpensiveTablet", Decimal(50), "tab_3");
  EXPECT_FALSE(unknown.decided());
  EXPECT_EQ(unknown.contribution, Decimal(0));
}

TEST_F(TabletDecisions, UboxFuzzyUtility) {
  EXPECT_EQ(ubox_fuzzy_utility(done, expert(1), "tab_3"), Decimal(89));
  EXPECT_EQ(ubox_fuzzy_utility(done, expert(2), "tab_3"), Decimal(56));
  EXPECT_EQ(ubox_fuzzy_utility(pre, expert(1), "tab_3"), Decimal(64));
}

TEST_F(TabletDecisions, IdealChoice) {
  EXPECT_EQ(ideal_fuzzy_choice({done, kTabs, expert(1)}), "tab_3");
  EXPECT_EQ(ideal_fuzzy_choice({done, kTabs, expert(2)}), "tab_2");
  EXPECT_EQ(ideal_fuzzy_choice({done, {"tab_2"}, expert(1)}), "tab_2");
}

TEST_F(TabletDecisions, Rankings) {
  auto one = rank({done, kTabs, expert(1)});
  ASSERT_EQ(one.ranking.size(), 3u);
  EXPECT_EQ(one.ranking[0].choice, "tab_3");
  EXPECT_EQ(one.ranking[0].score, Decimal(89));
  EXPECT_EQ(one.ranking[1].choice, "tab_1");
  EXPECT_EQ(one.ranking[1].score, Decimal(80));
  EXPECT_EQ(one.ranking[2].choice, "tab_2");
  EXPECT_EQ(one.ranking[2].score, Decimal(50));
  EXPECT_TRUE(one.complete);

  auto two = rank({done, kTabs, expert(2)});
  EXPECT_EQ(two.ranking[0].choice, "tab_2");
  EXPECT_EQ(two.ranking[0].score, Decimal(60));
  EXPECT_EQ(two.ranking[1].choice, "tab_3");
  EXPECT_EQ(two.ranking[1].score, Decimal(56));
  EXPECT_EQ(two.ranking[2].choice, "tab_1");
  EXPECT_EQ(two.ranking[2].score, Decimal(30));
}

TEST_F(TabletDecisions, RankingSurfacesUndecidedPairs) {
  auto r = rank({pre, kTabs, expert(1)});
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.ideal_choice, "tab_1");
  using P = std::pair<std::string, std::string>;
  EXPECT_EQ(r.undecided, (std::vector<P>{{"tab_2", "LightweightTablet"}, {"tab_3", "InexpensiveTablet"}}));
}

TEST_F(TabletDecisions, TiesBreakByName) {
  UtilityBox flat{"e", {{"Tablet", Decimal(1)}}};
  auto r = rank({crisp, {"tab_3", "tab_1", "tab_2"}, flat});
  EXPECT_EQ(r.ranking[0].choice, "tab_1");
  EXPECT_EQ(r.ranking[2].choice, "tab_3");
  EXPECT_EQ(r.ideal_choice, "tab_1");
}

TEST_F(TabletDecisions, Completeness) {
  using P = std::pair<std::string, std::string>;
  auto pairs = completeness_report({pre, kTabs, expert(1)});
  std::set<P> got(pairs.begin(), pairs.end());
  EXPECT_EQ(got, (std::set<P>{{"tab_3", "InexpensiveTablet"}, {"tab_2", "LightweightTablet"}}));
  EXPECT_TRUE(completeness_report({done, kTabs, expert(1)}).empty());
  EXPECT_TRUE(completeness_report({done, kTabs, expert(2)}).empty());
  EXPECT_TRUE(completeness_report({pre, kTabs, UtilityBox{"e", {}}}).empty());
}

TEST_F(TabletDecisions, Errors) {
  EXPECT_THROW(rank({done, {}, expert(1)}), EmptyChoiceSet);
  EXPECT_THROW(rank({done, {"tab_7"}, expert(1)}), UnknownIndividual);
  UtilityBox bad{"e", {{"CheapTablet", Decimal(1)}}};
  EXPECT_THROW(rank({done, kTabs, bad}), UnknownAttribute);
  EXPECT_THROW(completeness_report({done, kTabs, bad}), UnknownAttribute);
  EXPECT_THROW(sigma_utility(done, bad, "tab_1"), UnknownAttribute);
}

TEST_F(TabletDecisions, RaisingAWeightFavoursTheStrongerChoice) {
  // tab_1 is the only choice fully Lightweight.
  for (int w : {40, 80, 160}) {
    UtilityBox box = expert(1);
    box.entries[2].weight = Decimal(w);
    auto r = rank({done, kTabs, box});
    auto pos = std::find_if(r.ranking.begin(), r.ranking.end(), [](const ChoiceScore& c) { return c.choice == "tab_1"; });
    EXPECT_LE(pos - r.ranking.begin(), w == 40 ? 1 : 0) << w;
  }
}

TEST(DecisionProperties, Additivity) {
  auto r = testing::check_additivity(40);
  EXPECT_TRUE(r.ok) << r.failure;
}

}  // namespace
}  // namespace fdlb::decision
