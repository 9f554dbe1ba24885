#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <iterator>

#include "fdlb/kb_text.hpp"
#include "fdlb/reasoner.hpp"
#include "properties.hpp"

namespace fdlb::reasoning {
namespace {

const std::string kFixtures = FDLB_FIXTURE_DIR;

SaturatedKb sat_of(const KnowledgeBase& kb) {
  auto r = saturate(kb);
  if (auto* s = std::get_if<SaturatedKb>(&r)) return std::move(*s);
  ADD_FAILURE() << "unexpected inconsistency";
  throw std::runtime_error("inconsistent");
}
SaturatedKb sat_text(const std::string& text) { return sat_of(testing::load_kb_text(text)); }
SaturatedKb sat_file(const std::string& name) { return sat_of(testing::load_kb_file(kFixtures + "/" + name)); }

Concept atom(const char* n) { return Concept::atom(n); }
Concept expr(const SaturatedKb& s, const std::string& text) { return *text::parse_concept(text, s.kb()).value; }
Degree deg(const char* t) { return make_degree(t); }
DegreeInterval iv(const char* lo, const char* hi) { return {deg(lo), deg(hi)}; }

TEST(Saturate, ChainsGradedInclusions) {
  auto s = sat_text("assert d : A @ 0.9;\naxiom A SUBSUMED-BY B @ 0.7;\naxiom B SUBSUMED-BY C @ 0.8;");
  EXPECT_EQ(instance_interval(s, "d", atom("B")).lo(), deg("0.7"));
  EXPECT_EQ(instance_interval(s, "d", atom("C")).lo(), deg("0.8"));
}

TEST(Saturate, InclusionNeedsThePremiseAboveTheComplement) {
  auto s = sat_text("assert d : A @ 0.3;\naxiom A SUBSUMED-BY B @ 0.7;");
  EXPECT_TRUE(instance_interval(s, "d", atom("B")).is_vacuous());
}

TEST(Saturate, ContradictoryBoundsAreInconsistent) {
  auto report = check_consistency(testing::load_kb_text("assert a : C @ 0.7;\nassert a : NOT C @ 0.5;"));
  ASSERT_FALSE(report.consistent);
  ASSERT_FALSE(report.conflicts.empty());
  const auto& c = report.conflicts.front();
  EXPECT_EQ(c.individual, "a");
  EXPECT_GT(c.lower, c.upper);
}

TEST(Saturate, EmptyKnowledgeBaseIsConsistent) {
  EXPECT_TRUE(check_consistency(KnowledgeBase{}).consistent);
}

TEST(Saturate, ConjunctionAndDisjunction) {
  auto s = sat_text("assert a : A @ 0.5;\nassert a : B @ 0.9;\nassert a : (A AND B) OR C;\nassert a : NOT C @ 0.6;");
  EXPECT_EQ(instance_interval(s, "a", expr(s, "A AND B")).lo(), deg("0.5"));
  EXPECT_EQ(instance_interval(s, "a", expr(s, "A OR B")).lo(), deg("0.9"));
  EXPECT_EQ(instance_interval(s, "a", atom("C")).hi(), deg("0.4"));
}

TEST(Saturate, ConjunctionPassesItsBoundDown) {
  auto s = sat_text("assert a : A AND B @ 0.75;");
  EXPECT_EQ(instance_interval(s, "a", atom("A")), iv("0.75", "1"));
  EXPECT_EQ(instance_interval(s, "a", atom("B")), iv("0.75", "1"));
}

TEST(Saturate, QuantifiersOverClosedAndOpenRoles) {
  std::string roles = "role r : abstract closed;\nrole s : abstract;\n";
  auto s = sat_text(roles + "assert (a, b) : r;\nassert (a, b) : s;\nassert b : A @ 0.6;\nassert c : FORALL s . B @ 0.8;\n"
                            "assert (c, b) : s;\naxiom FORALL r . A SUBSUMED-BY D;\naxiom FORALL s . A SUBSUMED-BY E;");
  EXPECT_EQ(instance_interval(s, "a", expr(s, "EXISTS r . A")).lo(), deg("0.6"));
  EXPECT_EQ(instance_interval(s, "a", expr(s, "FORALL r . A")).lo(), deg("0.6"));
  EXPECT_EQ(instance_interval(s, "a", atom("D")).lo(), Degree::one());
  EXPECT_TRUE(instance_interval(s, "a", expr(s, "FORALL s . A")).is_vacuous());
  EXPECT_EQ(instance_interval(s, "b", atom("B")).lo(), deg("0.8"));
}

TEST(Saturate, ClosedRoleWithoutFillersIsVacuouslyUniversal) {
  auto s = sat_text("role r : abstract closed;\nassert a : TOP;\naxiom FORALL r . A SUBSUMED-BY B;");
  EXPECT_EQ(instance_interval(s, "a", atom("B")), iv("1", "1"));
}

TEST(Saturate, ConcreteRestrictionsAreCrisp) {
  auto s = sat_text("role p : concrete(EUR);\nassert (a, 600 EUR) : p;\nassert b : TOP;");
  EXPECT_EQ(instance_interval(s, "a", expr(s, "EXISTS p . GT 500 EUR")), iv("1", "1"));
  EXPECT_EQ(instance_interval(s, "a", expr(s, "EXISTS p . LE 500 EUR")), iv("0", "0"));
  EXPECT_TRUE(instance_interval(s, "b", expr(s, "EXISTS p . LE 500 EUR")).is_vacuous());
}

TEST(Saturate, UnassertedMembershipIsVacuous) {
  auto s = sat_file("tablet.kb");
  EXPECT_TRUE(instance_interval(s, "tab_3", atom("LightweightTablet")).is_vacuous());
  EXPECT_EQ(instance_interval(s, "equipment_3", atom("Device")), iv("0", "0"));
}

TEST(Saturate, ExpressionsOutsideTheClosureAreEvaluated) {
  auto s = sat_file("tablet.kb");
  EXPECT_EQ(instance_interval(s, "tab_1", expr(s, "Tablet AND EXISTS hasWeight . LT 800 g")), iv("1", "1"));
}

TEST(Saturate, RejectsUnknownNames) {
  auto s = sat_file("tablet.kb");
  EXPECT_THROW(instance_interval(s, "tab_9", atom("Tablet")), UnknownIndividual);
  EXPECT_THROW(instance_interval(s, "tab_1", Concept::exists("owner", atom("A"))), IllFormedConcept);
}

TEST(TabletKb, WeightConjunctionAndLightweight) {
  auto s = sat_file("tablet_fuzzy.kb");
  EXPECT_EQ(instance_interval(s, "tab_3", expr(s, "EXISTS hasWeight . GE 900 g AND EXISTS hasWeight . LE 1100 g")).lo(),
            deg("0.5"));
  EXPECT_EQ(instance_interval(s, "tab_3", atom("LightweightTablet")).lo(), deg("0.6"));
}

TEST(TabletKb, EntailedLowerBounds) {
  auto crisp = sat_file("tablet.kb");
  auto pre = sat_file("tablet_fuzzy.kb");
  auto done = sat_file("tablet_completed.kb");
  EXPECT_EQ(entailed_lower_bound(crisp, "tab_1", atom("ExpensiveTablet")), Degree::one());
  EXPECT_EQ(entailed_lower_bound(done, "tab_2", atom("LightweightTablet")), Degree::zero());
  EXPECT_EQ(instance_interval(done, "tab_2", atom("LightweightTablet")).hi(), Degree::zero());
  EXPECT_FALSE(entailed_lower_bound(pre, "tab_3", atom("InexpensiveTablet")));
  EXPECT_EQ(entailed_lower_bound(crisp, "tab_1", atom("UpperclassTablet")), Degree::one());
  EXPECT_EQ(entailed_lower_bound(crisp, "tab_2", atom("ExpensiveTablet")), Degree::zero());
}

TEST(TabletKb, NegationBookkeeping) {
  auto s = sat_file("tablet_completed.kb");
  EXPECT_EQ(instance_interval(s, "tab_1", atom("ExpensiveTablet")), iv("1", "1"));
  EXPECT_EQ(instance_interval(s, "tab_1", Concept::negation(atom("ExpensiveTablet"))), iv("0", "0"));
}

TEST(TabletKb, HalfDegreePricesClashWithCrispComplementDefinitions) {
  // With InexpensiveTablet EQUIV NOT ExpensiveTablet kept crisp, a 600 EUR
  // tablet that is 0.5 inexpensive is forced to be not expensive at all,
  // contradicting its 0.5 expensive bound.
  std::ifstream in(kFixtures + "/tablet.kb");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  text +=
      "axiom EXISTS hasPrice . GT 500 EUR AND EXISTS hasPrice . LT 900 EUR SUBSUMED-BY InexpensiveTablet @ 0.5;\n"
      "axiom EXISTS hasPrice . GT 500 EUR AND EXISTS hasPrice . LT 900 EUR SUBSUMED-BY ExpensiveTablet @ 0.5;\n";
  auto report = check_consistency(testing::load_kb_text(text));
  ASSERT_FALSE(report.consistent);
  bool on_tab_3 = false;
  for (const auto& c : report.conflicts) on_tab_3 = on_tab_3 || c.individual == "tab_3";
  EXPECT_TRUE(on_tab_3);
}

TEST(Consistency, ClashFixtureNamesTheDisjointnessAxiom) {
  auto report = check_consistency(testing::load_kb_file(kFixtures + "/tablet_clash.kb"));
  ASSERT_FALSE(report.consistent);
  bool named = false;
  std::function<void(const ExplanationNode&)> visit = [&](const ExplanationNode& n) {
    for (const auto& s : n.sources)
      if (s == "axiom PoorEquip AND WellEquip SUBSUMED-BY BOTTOM") named = true;
    for (const auto& p : n.premises) visit(p);
  };
  for (const auto& c : report.conflicts) {
    EXPECT_EQ(c.individual, "e1");
    visit(c.lower_trace);
    visit(c.upper_trace);
  }
  EXPECT_TRUE(named);
}

TEST(Consistency, FixturesAreConsistent) {
  for (const char* name : {"tablet.kb", "tablet_fuzzy.kb", "tablet_completed.kb"})
    EXPECT_TRUE(check_consistency(testing::load_kb_file(kFixtures + "/" + name)).consistent) << name;
}

bool mentions_rule(const ExplanationNode& n, Rule r) {
  if (n.rule == r) return true;
  for (const auto& p : n.premises)
    if (mentions_rule(p, r)) return true;
  return false;
}

void expect_replays(const ExplanationNode& n) {
  auto v = replay(n);
  ASSERT_TRUE(v.has_value()) << n.individual << " : " << n.expr.str();
  EXPECT_EQ(*v, n.value);
  for (const auto& p : n.premises) expect_replays(p);
}

TEST(Explain, LightweightTreeFollowsTheWeightAssertions) {
  auto s = sat_file("tablet_fuzzy.kb");
  auto e = explain(s, "tab_3", atom("LightweightTablet"));
  ASSERT_TRUE(e.lower);
  EXPECT_EQ(e.lower->value, deg("0.6"));
  EXPECT_EQ(e.lower->rule, Rule::Gci);
  ASSERT_EQ(e.lower->premises.size(), 1u);
  const auto& conj = e.lower->premises[0];
  EXPECT_EQ(conj.rule, Rule::ConjunctionUp);
  EXPECT_EQ(conj.value, deg("0.5"));
  ASSERT_EQ(conj.premises.size(), 2u);
  EXPECT_EQ(conj.premises[0].rule, Rule::Assertion);
  EXPECT_EQ(conj.premises[1].rule, Rule::Assertion);
  expect_replays(*e.lower);
  EXPECT_FALSE(e.upper);
}

TEST(Explain, TopIsASingleNode) {
  auto s = sat_file("tablet.kb");
  auto e = explain(s, "tab_1", Concept::top());
  ASSERT_TRUE(e.lower);
  EXPECT_EQ(e.lower->rule, Rule::Top);
  EXPECT_TRUE(e.lower->premises.empty());
}

TEST(Explain, UpperclassGoesThroughTheDefinition) {
  auto s = sat_file("tablet.kb");
  auto e = explain(s, "tab_1", atom("UpperclassTablet"));
  ASSERT_TRUE(e.lower);
  ASSERT_EQ(e.lower->sources.size(), 1u);
  EXPECT_EQ(e.lower->sources[0], "axiom Tablet AND FORALL equipped . WellEquip SUBSUMED-BY UpperclassTablet");
  EXPECT_TRUE(mentions_rule(*e.lower, Rule::ConjunctionUp));
  expect_replays(*e.lower);
}

TEST(Explain, VacuousIntervalHasNoDerivation) {
  auto s = sat_file("tablet.kb");
  EXPECT_THROW(explain(s, "tab_3", atom("LightweightTablet")), NoDerivation);
}

TEST(Explain, EveryBoundOfTheFixturesReplays) {
  for (const char* name : {"tablet.kb", "tablet_fuzzy.kb", "tablet_completed.kb"}) {
    auto s = sat_file(name);
    for (const auto& [cell, interval] : s.interval_map()) {
      if (interval.is_vacuous()) continue;
      auto e = explain(s, cell.first, cell.second);
      if (e.lower) expect_replays(*e.lower);
      if (e.upper) expect_replays(*e.upper);
      EXPECT_EQ(e.lower.has_value(), interval.lo() > Degree::zero());
      EXPECT_EQ(e.upper.has_value(), interval.hi() < Degree::one());
    }
  }
}

TEST(Explain, ReplayRejectsABrokenSideCondition) {
  auto s = sat_file("tablet_fuzzy.kb");
  auto e = explain(s, "tab_3", atom("LightweightTablet"));
  ExplanationNode broken = *e.lower;
  broken.premises[0].premises[0].value = deg("0.3");
  broken.premises[0].premises[0].constant = deg("0.3");
  broken.premises[0].value = deg("0.3");
  EXPECT_FALSE(replay(broken).has_value());
}

TEST(SaturatedKb, ExtensionDoesNotTouchTheOriginal) {
  auto s = sat_file("tablet.kb");
  auto before = s.interval_map();
  auto bigger = s.extended_with(expr(s, "Tablet OR Convertible"));
  EXPECT_EQ(s.interval_map(), before);
  EXPECT_GT(bigger.concepts().size(), s.concepts().size());
  for (const auto& [cell, interval] : before) EXPECT_EQ(instance_interval(bigger, cell.first, cell.second), interval);
}

}  // namespace
}  // namespace fdlb::reasoning
