#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdlb/reasoner.hpp"
#include "fdlb/utility_box.hpp"

// Weighted and fuzzy utilities over a saturated knowledge base.
//
// An attribute is an atomic concept with a weight. A choice contributes
// weight · n for each attribute, where n is the entailed lower bound of its
// membership; an attribute the reasoner cannot decide contributes 0 and is
// listed as undecided.

namespace fdlb::decision {

/// ⟨K, C, U⟩: knowledge base, ordered choices and one utility box.
struct FuzzyDecisionBase {
  const reasoning::SaturatedKb& kb;
  std::vector<std::string> choices;
  UtilityBox ubox;
};

struct AttributeScore {
  std::string attribute;
  Decimal weight;
  std::optional<Degree> degree;  // nullopt: undecided
  Decimal contribution;

  bool decided() const { return degree.has_value(); }
};

struct ChoiceScore {
  std::string choice;
  Decimal score;  // sum of the contributions
  std::vector<AttributeScore> attributes;
};

struct DecisionReport {
  std::string expert;
  std::vector<ChoiceScore> ranking;  // score descending, then choice name
  std::string ideal_choice;
  std::vector<std::pair<std::string, std::string>> undecided;  // (choice, attribute)
  bool complete = true;
};

/// Sum of the weights of attributes entailed for `choice` at degree 1.
Decimal sigma_utility(const reasoning::SaturatedKb& kb, const UtilityBox& ubox, const std::string& choice);

/// weight · n; contribution 0 and degree nullopt when undecided.
AttributeScore fuzzy_utility_value(const reasoning::SaturatedKb& kb, const std::string& attribute,
                                   const Decimal& weight, const std::string& choice);

/// Sum of fuzzy_utility_value over every entry of the box.
Decimal ubox_fuzzy_utility(const reasoning::SaturatedKb& kb, const UtilityBox& ubox, const std::string& choice);

/// argmax of ubox_fuzzy_utility; ties go to the lexicographically smallest name.
std::string ideal_fuzzy_choice(const FuzzyDecisionBase& base);

DecisionReport rank(const FuzzyDecisionBase& base);

/// (choice, attribute) pairs whose degree is undecided; empty iff complete.
std::vector<std::pair<std::string, std::string>> completeness_report(const FuzzyDecisionBase& base);

/// Throws UnknownAttribute unless every entry names an atomic concept of the KB.
void check_attributes(const KnowledgeBase& kb, const UtilityBox& ubox);

}  // namespace fdlb::decision
