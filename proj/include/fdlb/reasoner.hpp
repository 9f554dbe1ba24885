#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fdlb/model.hpp"

// Fuzzy instance reasoning by monotone saturation.
//
// For every individual a and every concept E of the closure (normalized
// subexpressions of all TBox/ABox concepts and their negation duals) the
// engine keeps an interval [lo, hi] that the true membership E(a) is known to
// lie in, under min / max / 1-x and Kleene-Dienes implication. Intervals start
// at [0, 1] and only shrink:
//
//   R1  assertion       ⟨a:C, n⟩ gives lo(a,C) >= n
//   R2  conjunction     lo(C⊓D) >= min(lo C, lo D), hi(C⊓D) <= min(hi C, hi D),
//                       lo(C), lo(D) >= lo(C⊓D)
//   R3  disjunction     lo(C⊔D) >= max(lo C, lo D), hi(C⊔D) <= max(hi C, hi D)
//   R4  negation        interval(dual E) = 1 - interval(E)
//   R5  concrete        ∃r.P with a known value v is exactly P(v) in {0, 1}
//   R6  exists-up       lo(a, ∃R.C) >= max over fillers b of lo(b, C)
//   R7  forall-down     lo(b, C) >= lo(a, ∀R.C) for every filler b
//   R8  forall-up       closed R: lo(a, ∀R.C) >= min over fillers of lo(b, C), 1 if none
//   R9  gci             ⟨C ⊑ D, t⟩ and lo(a,C) > 1 - t give lo(a,D) >= t
//   R10 bottom          ⊥ is [0, 0]; crisp C ⊓ D ⊑ ⊥ with lo(C) > 0 gives hi(D) = 0
//
// Role assertions are crisp. There is no contrapositive reasoning, so the
// calculus is sound but not complete for the fuzzy semantics. Derived
// degrees stay inside {0, 1, asserted and axiom degrees, and their
// complements}, which bounds the number of refinements and guarantees
// termination; the least fixpoint is unique, so the result does not depend
// on statement order.

namespace fdlb::reasoning {

enum class Rule {
  Top,
  Assertion,
  ConjunctionUp,
  ConjunctionDown,
  DisjunctionUp,
  Negation,
  Concrete,
  ExistsUp,
  ForallDown,
  ForallUp,
  Gci,
  Bottom,
  Disjointness,
};

/// e.g. "R9 gci"
std::string_view rule_label(Rule rule);

enum class Side { Lower, Upper };

using IndividualId = std::size_t;
using ConceptId = std::size_t;

struct Fact {
  IndividualId individual = 0;
  ConceptId expr = 0;
  Side side = Side::Lower;
};

/// KB statement a derivation rests on.
struct Source {
  enum class Kind { Assertion, RoleAssertion, ConcreteFact, Gci, ClosedRole };
  Kind kind;
  std::size_t index = 0;  // into the matching KB vector; ClosedRole: unused
  std::string role;       // ClosedRole only
};

/// One entry of the derivation log: `fact` was tightened to `value`.
struct Derivation {
  Fact fact;
  Degree value;
  Rule rule = Rule::Assertion;
  std::vector<std::size_t> premises;  // earlier log entries
  std::vector<Source> sources;
};

/// Interned normalized concepts with their subexpressions and duals.
class ConceptTable {
 public:
  /// Normalizes `c` and adds it together with subexpressions and duals.
  ConceptId intern(const Concept& c);
  std::optional<ConceptId> find(const Concept& c) const;  // normalizes first

  std::size_t size() const { return entries_.size(); }
  const Concept& expr(ConceptId id) const { return entries_[id].expr; }
  Concept::Kind kind(ConceptId id) const { return entries_[id].expr.kind(); }
  ConceptId dual(ConceptId id) const { return entries_[id].dual; }
  const std::vector<ConceptId>& children(ConceptId id) const { return entries_[id].children; }
  /// AND / OR expressions having `id` as a direct child.
  const std::vector<ConceptId>& boolean_parents(ConceptId id) const { return entries_[id].boolean_parents; }
  /// Abstract EXISTS / FORALL expressions whose filler is `id`.
  const std::vector<ConceptId>& quantifier_parents(ConceptId id) const { return entries_[id].quantifier_parents; }

 private:
  ConceptId intern_normalized(const Concept& c);

  struct Entry {
    Concept expr;
    ConceptId dual = 0;
    std::vector<ConceptId> children;
    std::vector<ConceptId> boolean_parents;
    std::vector<ConceptId> quantifier_parents;
  };
  std::vector<Entry> entries_;
  std::unordered_map<Concept, ConceptId, ConceptHash> index_;
};

// ---------------------------------------------------------------------------
// Explanations and consistency
// ---------------------------------------------------------------------------

struct ExplanationNode {
  std::string individual;
  Concept expr;
  Side side = Side::Lower;
  Degree value;
  Rule rule = Rule::Assertion;
  std::vector<std::string> sources;  // statements in surface syntax
  std::optional<Degree> constant;    // asserted degree, axiom degree or crisp value
  std::vector<ExplanationNode> premises;
};

/// Recomputes a node's bound from its premises and rule. nullopt when a side
/// condition of the rule does not hold (the tree would be invalid).
std::optional<Degree> replay(const ExplanationNode& node);

struct Explanation {
  std::string individual;
  Concept expr;
  DegreeInterval interval;
  std::optional<ExplanationNode> lower;  // present iff lo > 0
  std::optional<ExplanationNode> upper;  // present iff hi < 1
};

struct ConflictReport {
  std::string individual;
  Concept expr;
  Degree lower;  // lower > upper
  Degree upper;
  ExplanationNode lower_trace;
  ExplanationNode upper_trace;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConflictReport> conflicts;  // non-empty iff !consistent
};

// ---------------------------------------------------------------------------
// Saturated knowledge base
// ---------------------------------------------------------------------------

class SaturatedKb {
 public:
  const KnowledgeBase& kb() const { return *kb_; }
  const ConceptTable& concepts() const { return concepts_; }

  const std::vector<std::string>& individuals() const { return individuals_; }
  std::optional<IndividualId> individual_id(const std::string& name) const;

  const DegreeInterval& interval(IndividualId a, ConceptId c) const { return cells_[a][c].bounds; }
  /// Log index of the derivation behind the current bound, if it is not vacuous.
  std::optional<std::size_t> derivation(IndividualId a, ConceptId c, Side side) const;
  const std::vector<Derivation>& log() const { return log_; }

  /// Every (individual, concept) cell of the closure.
  std::map<std::pair<std::string, Concept>, DegreeInterval> interval_map() const;

  /// Copy whose closure also contains `c`, saturated again. Never mutates this.
  SaturatedKb extended_with(const Concept& c) const;

  ExplanationNode explain_derivation(const Derivation& d) const;

 private:
  friend class Engine;
  friend std::variant<SaturatedKb, ConsistencyReport> saturate(const KnowledgeBase& kb);
  friend std::variant<SaturatedKb, ConsistencyReport> saturate(const SaturatedKb& sat);

  struct Cell {
    DegreeInterval bounds;
    std::optional<std::size_t> lower_by;
    std::optional<std::size_t> upper_by;
  };
  struct Filler {
    IndividualId individual;
    std::size_t assertion;  // index into kb().role_assertions()
  };
  struct Disjoint {
    ConceptId other;
    std::size_t gci;
  };

  SaturatedKb() = default;
  void index_kb();
  void index_concepts();
  std::string source_text(const Source& s) const;

  std::shared_ptr<const KnowledgeBase> kb_;
  ConceptTable concepts_;
  std::vector<std::string> individuals_;
  std::unordered_map<std::string, IndividualId> individual_index_;

  // ABox indexes, keyed by role name.
  std::map<std::string, std::vector<std::vector<Filler>>> fillers_;   // [role][subject]
  std::map<std::string, std::vector<std::vector<Filler>>> subjects_;  // [role][object], .individual = subject
  std::vector<std::map<std::string, std::size_t>> concrete_;          // [individual][role] -> fact index
  std::vector<std::vector<std::pair<IndividualId, std::size_t>>> asserted_;  // [concept] -> (individual, assertion)

  // TBox indexes over normalized concepts.
  std::vector<std::pair<ConceptId, ConceptId>> gci_ids_;  // per tbox entry: (lhs, rhs)
  std::vector<std::vector<std::size_t>> gci_by_lhs_;
  std::vector<std::vector<std::size_t>> gci_by_rhs_;
  std::vector<std::vector<Disjoint>> disjoint_;

  std::vector<std::vector<Cell>> cells_;  // [individual][concept]
  std::vector<Derivation> log_;
};

using SaturationResult = std::variant<SaturatedKb, ConsistencyReport>;

/// Saturates to the least fixpoint. Returns the inconsistency report instead
/// when some interval would become empty.
SaturationResult saturate(const KnowledgeBase& kb);

/// Runs every rule again over an already saturated KB (a no-op on a fixpoint).
SaturationResult saturate(const SaturatedKb& sat);

ConsistencyReport check_consistency(const KnowledgeBase& kb);
ConsistencyReport check_consistency(const SaturatedKb& sat);

/// Interval of `individual` in `c`. Expressions outside the closure are
/// evaluated on a private extension. Throws UnknownIndividual and
/// IllFormedConcept (undeclared or misused roles, unit mismatches).
DegreeInterval instance_interval(const SaturatedKb& sat, const std::string& individual, const Concept& c);

/// lo when the interval is anything but the untouched [0, 1] (hi = 0 gives 0);
/// nullopt ("undecided") otherwise.
std::optional<Degree> entailed_lower_bound(const SaturatedKb& sat, const std::string& individual,
                                           const Concept& c);

/// Derivation trees for both bounds. Throws NoDerivation on [0, 1].
Explanation explain(const SaturatedKb& sat, const std::string& individual, const Concept& c);

}  // namespace fdlb::reasoning
