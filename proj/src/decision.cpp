#include "fdlb/decision.hpp"

#include <algorithm>

namespace fdlb::decision {

namespace {

void require_attribute(const KnowledgeBase& kb, const std::string& attribute) {
  if (!kb.concept_names().count(attribute)) throw UnknownAttribute(attribute);
}

void require_choices(const FuzzyDecisionBase& base) {
  if (base.choices.empty()) throw EmptyChoiceSet();
  for (const auto& c : base.choices)
    if (!base.kb.kb().has_individual(c)) throw UnknownIndividual(c);
}

ChoiceScore score_choice(const reasoning::SaturatedKb& kb, const UtilityBox& ubox, const std::string& choice) {
  ChoiceScore s;
  s.choice = choice;
  for (const auto& entry : ubox.entries) {
    s.attributes.push_back(fuzzy_utility_value(kb, entry.attribute, entry.weight, choice));
    s.score += s.attributes.back().contribution;
  }
  return s;
}

}  // namespace

void check_attributes(const KnowledgeBase& kb, const UtilityBox& ubox) {
  auto names = kb.concept_names();
  for (const auto& e : ubox.entries)
    if (!names.count(e.attribute)) throw UnknownAttribute(e.attribute);
}

Decimal sigma_utility(const reasoning::SaturatedKb& kb, const UtilityBox& ubox, const std::string& choice) {
  check_attributes(kb.kb(), ubox);
  Decimal total;
  for (const auto& e : ubox.entries) {
    auto n = reasoning::entailed_lower_bound(kb, choice, Concept::atom(e.attribute));
    if (n && *n == Degree::one()) total += e.weight;
  }
  return total;
}

AttributeScore fuzzy_utility_value(const reasoning::SaturatedKb& kb, const std::string& attribute,
                                   const Decimal& weight, const std::string& choice) {
  require_attribute(kb.kb(), attribute);
  AttributeScore s;
  s.attribute = attribute;
  s.weight = weight;
  s.degree = reasoning::entailed_lower_bound(kb, choice, Concept::atom(attribute));
  if (s.degree) s.contribution = weight * s.degree->value();
  return s;
}

Decimal ubox_fuzzy_utility(const reasoning::SaturatedKb& kb, const UtilityBox& ubox, const std::string& choice) {
  check_attributes(kb.kb(), ubox);
  return score_choice(kb, ubox, choice).score;
}

DecisionReport rank(const FuzzyDecisionBase& base) {
  require_choices(base);
  check_attributes(base.kb.kb(), base.ubox);
  DecisionReport report;
  report.expert = base.ubox.expert;
  for (const auto& c : base.choices) report.ranking.push_back(score_choice(base.kb, base.ubox, c));
  std::sort(report.ranking.begin(), report.ranking.end(), [](const ChoiceScore& a, const ChoiceScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.choice < b.choice;
  });
  report.ideal_choice = report.ranking.front().choice;
  // Undecided pairs follow the caller's choice order, then UBox order.
  for (const auto& c : base.choices) {
    auto it = std::find_if(report.ranking.begin(), report.ranking.end(),
                           [&](const ChoiceScore& s) { return s.choice == c; });
    for (const auto& a : it->attributes)
      if (!a.decided()) report.undecided.emplace_back(c, a.attribute);
  }
  report.complete = report.undecided.empty();
  return report;
}

std::string ideal_fuzzy_choice(const FuzzyDecisionBase& base) { return rank(base).ideal_choice; }

std::vector<std::pair<std::string, std::string>> completeness_report(const FuzzyDecisionBase& base) {
  check_attributes(base.kb.kb(), base.ubox);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : base.choices) {
    if (!base.kb.kb().has_individual(c)) throw UnknownIndividual(c);
    for (const auto& e : base.ubox.entries)
      if (!reasoning::entailed_lower_bound(base.kb, c, Concept::atom(e.attribute))) out.emplace_back(c, e.attribute);
  }
  return out;
}

}  // namespace fdlb::decision
