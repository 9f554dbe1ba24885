#include "fdlb/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fdlb/normal_form.hpp"

namespace fdlb::reasoning {

using K = Concept::Kind;

std::string_view rule_label(Rule rule) {
  switch (rule) {
    case Rule::Top: return "top";
    case Rule::Assertion: return "R1 assertion";
    case Rule::ConjunctionUp: return "R2 conjunction-up";
    case Rule::ConjunctionDown: return "R2 conjunction-down";
    case Rule::DisjunctionUp: return "R3 disjunction-up";
    case Rule::Negation: return "R4 negation";
    case Rule::Concrete: return "R5 concrete";
    case Rule::ExistsUp: return "R6 exists-up";
    case Rule::ForallDown: return "R7 forall-down";
    case Rule::ForallUp: return "R8 forall-up";
    case Rule::Gci: return "R9 gci";
    case Rule::Bottom: return "R10 bottom";
    case Rule::Disjointness: return "R10 disjointness";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ConceptTable
// ---------------------------------------------------------------------------

ConceptId ConceptTable::intern(const Concept& c) { return intern_normalized(normalize(c)); }

std::optional<ConceptId> ConceptTable::find(const Concept& c) const {
  auto it = index_.find(normalize(c));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ConceptId ConceptTable::intern_normalized(const Concept& c) {
  if (auto it = index_.find(c); it != index_.end()) return it->second;
  ConceptId id = entries_.size();
  entries_.push_back(Entry{c, id, {}, {}, {}});
  index_.emplace(c, id);

  std::vector<ConceptId> children;
  for (const auto& child : c.children()) children.push_back(intern_normalized(child));
  for (ConceptId child : children) {
    if (c.is(K::And) || c.is(K::Or)) {
      entries_[child].boolean_parents.push_back(id);
    } else if (c.is(K::Exists) || c.is(K::Forall)) {
      entries_[child].quantifier_parents.push_back(id);
    }
  }
  entries_[id].children = std::move(children);
  ConceptId d = intern_normalized(fdlb::dual(c));
  entries_[id].dual = d;
  entries_[d].dual = id;
  return id;
}

// ---------------------------------------------------------------------------
// Index construction
// ---------------------------------------------------------------------------

std::optional<IndividualId> SaturatedKb::individual_id(const std::string& name) const {
  auto it = individual_index_.find(name);
  if (it == individual_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SaturatedKb::derivation(IndividualId a, ConceptId c, Side side) const {
  const Cell& cell = cells_[a][c];
  return side == Side::Lower ? cell.lower_by : cell.upper_by;
}

void SaturatedKb::index_kb() {
  const KnowledgeBase& kb = *kb_;
  individuals_.assign(kb.individuals().begin(), kb.individuals().end());
  for (IndividualId i = 0; i < individuals_.size(); ++i) individual_index_[individuals_[i]] = i;

  concepts_.intern(Concept::top());
  for (const auto& name : kb.declared_concepts()) concepts_.intern(Concept::atom(name));
  for (const auto& g : kb.tbox()) gci_ids_.emplace_back(concepts_.intern(g.lhs), concepts_.intern(g.rhs));
  for (const auto& a : kb.assertions()) concepts_.intern(a.expr);

  const std::size_t n = individuals_.size();
  for (const auto& [name, decl] : kb.roles()) {
    if (decl.kind != RoleKind::Abstract) continue;
    fillers_[name].resize(n);
    subjects_[name].resize(n);
  }
  for (std::size_t i = 0; i < kb.role_assertions().size(); ++i) {
    const auto& r = kb.role_assertions()[i];
    IndividualId s = individual_index_.at(r.subject);
    IndividualId o = individual_index_.at(r.object);
    fillers_[r.role][s].push_back({o, i});
    subjects_[r.role][o].push_back({s, i});
  }
  concrete_.resize(n);
  for (std::size_t i = 0; i < kb.concrete_facts().size(); ++i) {
    const auto& f = kb.concrete_facts()[i];
    concrete_[individual_index_.at(f.individual)][f.role] = i;
  }
  index_concepts();
}

/// (Re)builds every index that depends on the size of the concept table and
/// grows the cell matrix to match.
void SaturatedKb::index_concepts() {
  const std::size_t m = concepts_.size();
  const KnowledgeBase& kb = *kb_;

  asserted_.assign(m, {});
  for (std::size_t i = 0; i < kb.assertions().size(); ++i) {
    const auto& a = kb.assertions()[i];
    asserted_[*concepts_.find(a.expr)].emplace_back(individual_index_.at(a.individual), i);
  }

  gci_by_lhs_.assign(m, {});
  gci_by_rhs_.assign(m, {});
  disjoint_.assign(m, {});
  for (std::size_t g = 0; g < gci_ids_.size(); ++g) {
    auto [lhs, rhs] = gci_ids_[g];
    gci_by_lhs_[lhs].push_back(g);
    gci_by_rhs_[rhs].push_back(g);
    if (kb.tbox()[g].degree == Degree::one() && concepts_.kind(rhs) == K::Bottom &&
        concepts_.kind(lhs) == K::And) {
      ConceptId c = concepts_.children(lhs)[0];
      ConceptId d = concepts_.children(lhs)[1];
      disjoint_[c].push_back({d, g});
      disjoint_[d].push_back({c, g});
    }
  }

  cells_.resize(individuals_.size());
  for (auto& row : cells_) row.resize(m);
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  Degree value;
  Rule rule;
  std::vector<std::size_t> premises;
  std::vector<Source> sources;
};

struct PendingConflict {
  IndividualId individual;
  ConceptId expr;
  Side side;
  Candidate attempted;
};

}  // namespace

class Engine {
 public:
  explicit Engine(SaturatedKb& s) : s_(s) {}

  /// Evaluates every cell once, then follows changes to a fixpoint.
  void run() {
    queued_.assign(s_.individuals_.size(), std::vector<char>(s_.concepts_.size(), 0));
    for (IndividualId a = 0; a < s_.individuals_.size(); ++a)
      for (ConceptId c = 0; c < s_.concepts_.size(); ++c) evaluate(a, c);
    while (!queue_.empty()) {
      auto [a, c] = queue_.front();
      queue_.pop_front();
      queued_[a][c] = 0;
      evaluate(a, c);
    }
  }

  const std::vector<PendingConflict>& conflicts() const { return conflicts_; }

 private:
  const DegreeInterval& at(IndividualId a, ConceptId c) const { return s_.cells_[a][c].bounds; }
  std::size_t lower_by(IndividualId a, ConceptId c) const { return *s_.cells_[a][c].lower_by; }
  std::size_t upper_by(IndividualId a, ConceptId c) const { return *s_.cells_[a][c].upper_by; }

  void evaluate(IndividualId a, ConceptId e) {
    std::vector<Candidate> lower;
    std::vector<Candidate> upper;
    collect(a, e, lower, upper);

    const Candidate* best_lo = nullptr;
    for (const auto& c : lower)
      if (!best_lo || c.value > best_lo->value) best_lo = &c;
    const Candidate* best_hi = nullptr;
    for (const auto& c : upper)
      if (!best_hi || c.value < best_hi->value) best_hi = &c;

    bool changed = false;
    if (best_lo && best_lo->value > at(a, e).lo()) changed |= apply(a, e, Side::Lower, *best_lo);
    if (best_hi && best_hi->value < at(a, e).hi()) changed |= apply(a, e, Side::Upper, *best_hi);
    if (changed) enqueue_dependents(a, e);
  }

  bool apply(IndividualId a, ConceptId e, Side side, const Candidate& c) {
    auto& cell = s_.cells_[a][e];
    bool clash = side == Side::Lower ? c.value > cell.bounds.hi() : c.value < cell.bounds.lo();
    if (clash) {
      bool seen = std::any_of(conflicts_.begin(), conflicts_.end(), [&](const PendingConflict& p) {
        return p.individual == a && p.expr == e && p.side == side;
      });
      if (!seen) conflicts_.push_back({a, e, side, c});
      return false;
    }
    std::size_t index = s_.log_.size();
    s_.log_.push_back(Derivation{{a, e, side}, c.value, c.rule, c.premises, c.sources});
    if (side == Side::Lower) {
      cell.bounds = DegreeInterval(c.value, cell.bounds.hi());
      cell.lower_by = index;
    } else {
      cell.bounds = DegreeInterval(cell.bounds.lo(), c.value);
      cell.upper_by = index;
    }
    return true;
  }

  void enqueue(IndividualId a, ConceptId c) {
    if (queued_[a][c]) return;
    queued_[a][c] = 1;
    queue_.emplace_back(a, c);
  }

  void enqueue_dependents(IndividualId a, ConceptId e) {
    const ConceptTable& t = s_.concepts_;
    for (ConceptId p : t.boolean_parents(e)) enqueue(a, p);
    if (t.kind(e) == K::And)
      for (ConceptId child : t.children(e)) enqueue(a, child);
    enqueue(a, t.dual(e));
    for (ConceptId p : t.quantifier_parents(e)) {
      for (const auto& s : s_.subjects_.at(t.expr(p).role())[a]) enqueue(s.individual, p);
    }
    if (t.kind(e) == K::Forall) {
      ConceptId filler = t.children(e)[0];
      for (const auto& b : s_.fillers_.at(t.expr(e).role())[a]) enqueue(b.individual, filler);
    }
    for (std::size_t g : s_.gci_by_lhs_[e]) enqueue(a, s_.gci_ids_[g].second);
    for (const auto& d : s_.disjoint_[e]) enqueue(a, d.other);
  }

  /// All rule instances concluding a bound on (a, e), in canonical rule order.
  void collect(IndividualId a, ConceptId e, std::vector<Candidate>& lower, std::vector<Candidate>& upper) const {
    const ConceptTable& t = s_.concepts_;
    const Concept& expr = t.expr(e);
    const Degree zero = Degree::zero();
    const Degree one = Degree::one();
    using SK = Source::Kind;

    if (expr.is(K::Top)) lower.push_back({one, Rule::Top, {}, {}});

    // R1
    for (const auto& [who, index] : s_.asserted_[e]) {
      if (who == a) lower.push_back({s_.kb_->assertions()[index].degree, Rule::Assertion, {}, {{SK::Assertion, index, {}}}});
    }

    // R2 up / R3 up
    if (expr.is(K::And) || expr.is(K::Or)) {
      ConceptId l = t.children(e)[0];
      ConceptId r = t.children(e)[1];
      const auto& li = at(a, l);
      const auto& ri = at(a, r);
      if (expr.is(K::And)) {
        Degree lo = std::min(li.lo(), ri.lo());
        if (lo > zero) lower.push_back({lo, Rule::ConjunctionUp, {lower_by(a, l), lower_by(a, r)}, {}});
        ConceptId arg = li.hi() <= ri.hi() ? l : r;
        if (at(a, arg).hi() < one) upper.push_back({at(a, arg).hi(), Rule::ConjunctionUp, {upper_by(a, arg)}, {}});
      } else {
        ConceptId arg = li.lo() >= ri.lo() ? l : r;
        if (at(a, arg).lo() > zero) lower.push_back({at(a, arg).lo(), Rule::DisjunctionUp, {lower_by(a, arg)}, {}});
        Degree hi = std::max(li.hi(), ri.hi());
        if (hi < one) upper.push_back({hi, Rule::DisjunctionUp, {upper_by(a, l), upper_by(a, r)}, {}});
      }
    }

    // R2 down
    for (ConceptId p : t.boolean_parents(e)) {
      if (t.kind(p) == K::And && at(a, p).lo() > zero)
        lower.push_back({at(a, p).lo(), Rule::ConjunctionDown, {lower_by(a, p)}, {}});
    }

    // R4
    ConceptId d = t.dual(e);
    if (at(a, d).hi() < one) lower.push_back({at(a, d).hi().complement(), Rule::Negation, {upper_by(a, d)}, {}});
    if (at(a, d).lo() > zero) upper.push_back({at(a, d).lo().complement(), Rule::Negation, {lower_by(a, d)}, {}});

    // R5
    if (expr.is(K::ConcreteExists)) {
      const auto& known = s_.concrete_[a];
      if (auto it = known.find(expr.role()); it != known.end()) {
        Degree v = expr.predicate().evaluate(s_.kb_->concrete_facts()[it->second].value);
        Source src{SK::ConcreteFact, it->second, {}};
        (v == one ? lower : upper).push_back({v, Rule::Concrete, {}, {src}});
      }
    }

    // R6
    if (expr.is(K::Exists)) {
      ConceptId filler = t.children(e)[0];
      const SaturatedKb::Filler* best = nullptr;
      for (const auto& b : s_.fillers_.at(expr.role())[a])
        if (!best || at(b.individual, filler).lo() > at(best->individual, filler).lo()) best = &b;
      if (best && at(best->individual, filler).lo() > zero) {
        lower.push_back({at(best->individual, filler).lo(), Rule::ExistsUp,
                         {lower_by(best->individual, filler)}, {{SK::RoleAssertion, best->assertion, {}}}});
      }
    }

    // R7
    for (ConceptId p : t.quantifier_parents(e)) {
      if (t.kind(p) != K::Forall) continue;
      for (const auto& s : s_.subjects_.at(t.expr(p).role())[a]) {
        if (at(s.individual, p).lo() > zero)
          lower.push_back({at(s.individual, p).lo(), Rule::ForallDown, {lower_by(s.individual, p)},
                           {{SK::RoleAssertion, s.assertion, {}}}});
      }
    }

    // R8
    if (expr.is(K::Forall) && s_.kb_->find_role(expr.role())->closed) {
      ConceptId filler = t.children(e)[0];
      const auto& fillers = s_.fillers_.at(expr.role())[a];
      if (fillers.empty()) {
        lower.push_back({one, Rule::ForallUp, {}, {{SK::ClosedRole, 0, expr.role()}}});
      } else {
        Degree lo = one;
        for (const auto& b : fillers) lo = std::min(lo, at(b.individual, filler).lo());
        if (lo > zero) {
          Candidate c{lo, Rule::ForallUp, {}, {}};
          for (const auto& b : fillers) {
            c.premises.push_back(lower_by(b.individual, filler));
            c.sources.push_back({SK::RoleAssertion, b.assertion, {}});
          }
          c.sources.push_back({SK::ClosedRole, 0, expr.role()});
          lower.push_back(std::move(c));
        }
      }
    }

    // R9
    for (std::size_t g : s_.gci_by_rhs_[e]) {
      const Degree& degree = s_.kb_->tbox()[g].degree;
      ConceptId lhs = s_.gci_ids_[g].first;
      if (at(a, lhs).lo() > degree.complement())
        lower.push_back({degree, Rule::Gci, {lower_by(a, lhs)}, {{SK::Gci, g, {}}}});
    }

    // R10
    if (expr.is(K::Bottom)) upper.push_back({zero, Rule::Bottom, {}, {}});
    for (const auto& other : s_.disjoint_[e]) {
      if (at(a, other.other).lo() > zero)
        upper.push_back({zero, Rule::Disjointness, {lower_by(a, other.other)}, {{SK::Gci, other.gci, {}}}});
    }
  }

  SaturatedKb& s_;
  std::deque<std::pair<IndividualId, ConceptId>> queue_;
  std::vector<std::vector<char>> queued_;
  std::vector<PendingConflict> conflicts_;
};

namespace {

ConsistencyReport report_conflicts(const SaturatedKb& s, const std::vector<PendingConflict>& pending) {
  ConsistencyReport report;
  report.consistent = pending.empty();
  for (const auto& p : pending) {
    Derivation attempted{{p.individual, p.expr, p.side}, p.attempted.value, p.attempted.rule,
                         p.attempted.premises, p.attempted.sources};
    Side opposite = p.side == Side::Lower ? Side::Upper : Side::Lower;
    const Derivation& existing = s.log()[*s.derivation(p.individual, p.expr, opposite)];
    ConflictReport c;
    c.individual = s.individuals()[p.individual];
    c.expr = s.concepts().expr(p.expr);
    const Derivation& lo = p.side == Side::Lower ? attempted : existing;
    const Derivation& hi = p.side == Side::Lower ? existing : attempted;
    c.lower = lo.value;
    c.upper = hi.value;
    c.lower_trace = s.explain_derivation(lo);
    c.upper_trace = s.explain_derivation(hi);
    report.conflicts.push_back(std::move(c));
  }
  return report;
}

}  // namespace

SaturationResult saturate(const KnowledgeBase& kb) {
  SaturatedKb s;
  s.kb_ = std::make_shared<const KnowledgeBase>(kb);
  s.index_kb();
  Engine engine(s);
  engine.run();
  if (!engine.conflicts().empty()) return report_conflicts(s, engine.conflicts());
  return s;
}

SaturationResult saturate(const SaturatedKb& sat) {
  SaturatedKb s = sat;
  Engine engine(s);
  engine.run();
  if (!engine.conflicts().empty()) return report_conflicts(s, engine.conflicts());
  return s;
}

SaturatedKb SaturatedKb::extended_with(const Concept& c) const {
  SaturatedKb copy = *this;
  copy.concepts_.intern(c);
  if (copy.concepts_.size() == concepts_.size()) return copy;
  copy.index_concepts();
  Engine engine(copy);
  engine.run();
  if (!engine.conflicts().empty()) {
    const auto& p = engine.conflicts().front();
    throw IntervalConflict(copy.cells_[p.individual][p.expr].bounds.lo(),
                           copy.cells_[p.individual][p.expr].bounds.hi());
  }
  return copy;
}

std::map<std::pair<std::string, Concept>, DegreeInterval> SaturatedKb::interval_map() const {
  std::map<std::pair<std::string, Concept>, DegreeInterval> out;
  for (IndividualId a = 0; a < individuals_.size(); ++a)
    for (ConceptId c = 0; c < concepts_.size(); ++c)
      out.emplace(std::make_pair(individuals_[a], concepts_.expr(c)), cells_[a][c].bounds);
  return out;
}

ConsistencyReport check_consistency(const KnowledgeBase& kb) {
  auto result = saturate(kb);
  if (auto* report = std::get_if<ConsistencyReport>(&result)) return std::move(*report);
  return {};
}

ConsistencyReport check_consistency(const SaturatedKb&) { return {}; }

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

namespace {

void validate_concept(const KnowledgeBase& kb, const Concept& c) {
  if (c.is(K::Exists) || c.is(K::ConcreteExists) || c.is(K::Forall)) {
    const RoleDeclaration* decl = kb.find_role(c.role());
    if (!decl) throw IllFormedConcept("role '" + c.role() + "' is not declared");
    bool concrete = c.is(K::ConcreteExists);
    if (concrete != (decl->kind == RoleKind::Concrete))
      throw IllFormedConcept("role '" + c.role() + "' is used with the wrong kind of restriction");
    if (concrete && c.predicate().threshold.unit != decl->unit)
      throw IllFormedConcept("unit '" + c.predicate().threshold.unit + "' does not match role '" +
                             c.role() + "'");
  }
  for (const auto& child : c.children()) validate_concept(kb, child);
}

IndividualId require_individual(const SaturatedKb& sat, const std::string& name) {
  auto id = sat.individual_id(name);
  if (!id) throw UnknownIndividual(name);
  return *id;
}

}  // namespace

DegreeInterval instance_interval(const SaturatedKb& sat, const std::string& individual, const Concept& c) {
  IndividualId a = require_individual(sat, individual);
  validate_concept(sat.kb(), c);
  if (auto id = sat.concepts().find(c)) return sat.interval(a, *id);
  SaturatedKb local = sat.extended_with(c);
  return local.interval(a, *local.concepts().find(c));
}

std::optional<Degree> entailed_lower_bound(const SaturatedKb& sat, const std::string& individual,
                                           const Concept& c) {
  DegreeInterval i = instance_interval(sat, individual, c);
  if (i.is_vacuous()) return std::nullopt;
  return i.lo();
}

}  // namespace fdlb::reasoning
