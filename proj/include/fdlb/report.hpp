#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fdlb/decision.hpp"
#include "fdlb/reasoner.hpp"

// Text and structured (JSON) renderings. Decimals are always strings so the
// structured form keeps exact values; object keys come out sorted.

namespace fdlb::report {

std::string render_tree(const reasoning::ExplanationNode& node);
std::string render_explanation(const reasoning::Explanation& e);
std::string render_consistency(const reasoning::ConsistencyReport& r);
std::string render_decision(const decision::DecisionReport& r);
std::string render_undecided(const std::string& expert,
                             const std::vector<std::pair<std::string, std::string>>& pairs);

nlohmann::json tree_json(const reasoning::ExplanationNode& node);
nlohmann::json explanation_json(const reasoning::Explanation& e);
nlohmann::json conflicts_json(const reasoning::ConsistencyReport& r);
nlohmann::json decision_json(const decision::DecisionReport& r);

}  // namespace fdlb::report
