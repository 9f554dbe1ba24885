#include "fdlb/report.hpp"

#include <sstream>

namespace fdlb::report {

using nlohmann::json;
using reasoning::ExplanationNode;
using reasoning::Side;

namespace {

std::string bound_text(const ExplanationNode& n) {
  std::string cell = "(" + n.individual + ", " + n.expr.str() + ")";
  return n.side == Side::Lower ? "lo" + cell + " >= " + n.value.str() : "hi" + cell + " <= " + n.value.str();
}

void tree_lines(const ExplanationNode& n, int depth, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << pad << bound_text(n) << "  by " << reasoning::rule_label(n.rule) << '\n';
  for (const auto& s : n.sources) out << pad << "    from " << s << '\n';
  for (const auto& p : n.premises) tree_lines(p, depth + 1, out);
}

std::string pair_text(const std::pair<std::string, std::string>& p) {
  return "(" + p.first + ", " + p.second + ")";
}

}  // namespace

std::string render_tree(const ExplanationNode& node) {
  std::ostringstream out;
  tree_lines(node, 0, out);
  return out.str();
}

std::string render_explanation(const reasoning::Explanation& e) {
  std::ostringstream out;
  out << e.individual << " : " << e.expr.str() << "  " << e.interval.str() << '\n';
  if (e.lower) out << "\nlower bound\n" << render_tree(*e.lower);
  if (e.upper) out << "\nupper bound\n" << render_tree(*e.upper);
  return out.str();
}

std::string render_consistency(const reasoning::ConsistencyReport& r) {
  if (r.consistent) return "consistent\n";
  std::ostringstream out;
  out << "inconsistent: " << r.conflicts.size() << (r.conflicts.size() == 1 ? " conflict\n" : " conflicts\n");
  for (const auto& c : r.conflicts) {
    out << "\nconflict on " << c.individual << " : " << c.expr.str() << "  lo " << c.lower.str() << " > hi "
        << c.upper.str() << '\n';
    out << render_tree(c.lower_trace) << render_tree(c.upper_trace);
  }
  return out.str();
}

std::string render_decision(const decision::DecisionReport& r) {
  std::ostringstream out;
  out << "expert " << r.expert << '\n';
  std::size_t width = 6;
  for (const auto& c : r.ranking) width = std::max(width, c.choice.size());
  for (const auto& c : r.ranking) {
    out << (c.choice == r.ideal_choice ? "* " : "  ") << c.choice << std::string(width - c.choice.size() + 2, ' ')
        << c.score.str();
    std::string sep = "  (";
    for (const auto& a : c.attributes) {
      out << sep << a.attribute << " " << (a.decided() ? a.contribution.str() : "?");
      sep = ", ";
    }
    if (!c.attributes.empty()) out << ')';
    out << '\n';
  }
  out << "ideal: " << r.ideal_choice << '\n';
  if (!r.complete) {
    out << "undecided:";
    for (const auto& p : r.undecided) out << ' ' << pair_text(p);
    out << '\n';
  }
  return out.str();
}

std::string render_undecided(const std::string& expert, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::ostringstream out;
  out << "expert " << expert << ": ";
  if (pairs.empty()) return out.str() + "complete\n";
  out << "incomplete\n";
  for (const auto& p : pairs) out << "  " << pair_text(p) << '\n';
  return out.str();
}

json tree_json(const ExplanationNode& node) {
  json j;
  j["individual"] = node.individual;
  j["concept"] = node.expr.str();
  j["side"] = node.side == Side::Lower ? "lower" : "upper";
  j["value"] = node.value.str();
  j["rule"] = std::string(reasoning::rule_label(node.rule));
  j["sources"] = node.sources;
  j["premises"] = json::array();
  for (const auto& p : node.premises) j["premises"].push_back(tree_json(p));
  return j;
}

json explanation_json(const reasoning::Explanation& e) {
  json j;
  j["individual"] = e.individual;
  j["concept"] = e.expr.str();
  j["interval"] = {e.interval.lo().str(), e.interval.hi().str()};
  j["lower"] = e.lower ? tree_json(*e.lower) : json(nullptr);
  j["upper"] = e.upper ? tree_json(*e.upper) : json(nullptr);
  return j;
}

json conflicts_json(const reasoning::ConsistencyReport& r) {
  json out = json::array();
  for (const auto& c : r.conflicts) {
    out.push_back({{"individual", c.individual},
                   {"concept", c.expr.str()},
                   {"lower", c.lower.str()},
                   {"upper", c.upper.str()},
                   {"lower_trace", tree_json(c.lower_trace)},
                   {"upper_trace", tree_json(c.upper_trace)}});
  }
  return out;
}

json decision_json(const decision::DecisionReport& r) {
  json ranking = json::array();
  for (const auto& c : r.ranking) {
    json contributions = json::object();
    for (const auto& a : c.attributes) contributions[a.attribute] = a.decided() ? json(a.contribution.str()) : json(nullptr);
    ranking.push_back({{"choice", c.choice}, {"score", c.score.str()}, {"contributions", contributions}});
  }
  json undecided = json::array();
  for (const auto& p : r.undecided) undecided.push_back({{"choice", p.first}, {"attribute", p.second}});
  return {{"id", r.expert}, {"ranking", ranking}, {"ideal", r.ideal_choice}, {"undecided", undecided}};
}

}  // namespace fdlb::report
