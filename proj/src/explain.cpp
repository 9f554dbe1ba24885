#include <algorithm>

#include "fdlb/reasoner.hpp"

namespace fdlb::reasoning {

std::string SaturatedKb::source_text(const Source& s) const {
  switch (s.kind) {
    case Source::Kind::Assertion: return "assert " + kb_->assertions()[s.index].str();
    case Source::Kind::RoleAssertion: return "assert " + kb_->role_assertions()[s.index].str();
    case Source::Kind::ConcreteFact: return "assert " + kb_->concrete_facts()[s.index].str();
    case Source::Kind::Gci: return "axiom " + kb_->tbox()[s.index].str();
    case Source::Kind::ClosedRole: return "role " + kb_->find_role(s.role)->str();
  }
  return {};
}

ExplanationNode SaturatedKb::explain_derivation(const Derivation& d) const {
  ExplanationNode node;
  node.individual = individuals_[d.fact.individual];
  node.expr = concepts_.expr(d.fact.expr);
  node.side = d.fact.side;
  node.value = d.value;
  node.rule = d.rule;
  for (const auto& s : d.sources) node.sources.push_back(source_text(s));
  switch (d.rule) {
    case Rule::Top:
    case Rule::Assertion:
    case Rule::Concrete:
    case Rule::Gci:
    case Rule::Bottom:
    case Rule::Disjointness: node.constant = d.value; break;
    case Rule::ForallUp:
      if (d.premises.empty()) node.constant = d.value;
      break;
    default: break;
  }
  for (std::size_t p : d.premises) node.premises.push_back(explain_derivation(log_[p]));
  return node;
}

std::optional<Degree> replay(const ExplanationNode& node) {
  std::vector<Degree> values;
  for (const auto& p : node.premises) {
    auto v = replay(p);
    if (!v || *v != p.value) return std::nullopt;
    values.push_back(*v);
  }
  auto min_of = [&] { return *std::min_element(values.begin(), values.end()); };
  auto max_of = [&] { return *std::max_element(values.begin(), values.end()); };
  auto single = [&]() -> std::optional<Degree> {
    if (values.size() != 1) return std::nullopt;
    return values.front();
  };

  switch (node.rule) {
    case Rule::Top:
    case Rule::Assertion:
    case Rule::Concrete:
    case Rule::Bottom: return node.constant;
    case Rule::ConjunctionUp:
      if (values.empty()) return std::nullopt;
      return min_of();
    case Rule::DisjunctionUp:
      if (values.empty()) return std::nullopt;
      return max_of();
    case Rule::ConjunctionDown:
    case Rule::ForallDown: return single();
    case Rule::Negation: {
      auto v = single();
      if (!v) return std::nullopt;
      return v->complement();
    }
    case Rule::ExistsUp:
      if (values.empty()) return std::nullopt;
      return max_of();
    case Rule::ForallUp:
      if (values.empty()) return node.constant;
      return min_of();
    case Rule::Gci: {
      auto v = single();
      if (!v || !node.constant || !(*v > node.constant->complement())) return std::nullopt;
      return node.constant;
    }
    case Rule::Disjointness: {
      auto v = single();
      if (!v || !(*v > Degree::zero())) return std::nullopt;
      return Degree::zero();
    }
  }
  return std::nullopt;
}

Explanation explain(const SaturatedKb& sat, const std::string& individual, const Concept& c) {
  // Resolves ids on the saturated KB or on a private extension of it.
  auto build = [&](const SaturatedKb& s) {
    IndividualId a = *s.individual_id(individual);
    ConceptId id = *s.concepts().find(c);
    Explanation e;
    e.individual = individual;
    e.expr = c;
    e.interval = s.interval(a, id);
    if (e.interval.is_vacuous()) throw NoDerivation(individual, c.str());
    if (auto lo = s.derivation(a, id, Side::Lower)) e.lower = s.explain_derivation(s.log()[*lo]);
    if (auto hi = s.derivation(a, id, Side::Upper)) e.upper = s.explain_derivation(s.log()[*hi]);
    return e;
  };
  instance_interval(sat, individual, c);  // validates, throws on unknown names
  if (sat.concepts().find(c)) return build(sat);
  return build(sat.extended_with(c));
}

}  // namespace fdlb::reasoning
