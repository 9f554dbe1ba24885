#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fdlb/decimal.hpp"
#include "fdlb/errors.hpp"

namespace fdlb {

// ---------------------------------------------------------------------------
// Degrees and intervals
// ---------------------------------------------------------------------------

/// A fuzzy membership value, exact and always inside [0, 1].
class Degree {
 public:
  Degree() = default;  // 0

  /// Throws DegreeRangeError when `value` lies outside [0, 1].
  static Degree make(const Decimal& value);
  static Degree zero() { return Degree(); }
  static Degree one();

  const Decimal& value() const { return value_; }
  std::string str() const { return value_.str(); }

  /// x ↦ 1 − x
  Degree complement() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    return a.value_ <=> b.value_;
  }

 private:
  explicit Degree(Decimal v) : value_(std::move(v)) {}
  Decimal value_;
};

/// Parses a decimal literal and range-checks it. Throws DegreeRangeError
/// naming the literal (also when it is not a number at all).
Degree make_degree(std::string_view literal);

inline std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.str(); }

/// Raised when two bounds would leave an empty interval.
class IntervalConflict : public Error {
 public:
  IntervalConflict(Degree lo, Degree hi, std::string lo_source = {}, std::string hi_source = {});
  const Degree& lo() const { return lo_; }
  const Degree& hi() const { return hi_; }
  const std::string& lo_source() const { return lo_source_; }
  const std::string& hi_source() const { return hi_source_; }

 private:
  Degree lo_;
  Degree hi_;
  std::string lo_source_;
  std::string hi_source_;
};

/// Known lower and upper bounds on a membership degree. lo <= hi always.
class DegreeInterval {
 public:
  /// The vacuous interval [0, 1].
  DegreeInterval() : lo_(Degree::zero()), hi_(Degree::one()) {}
  /// Throws IntervalConflict if lo > hi.
  DegreeInterval(Degree lo, Degree hi);

  static DegreeInterval vacuous() { return {}; }
  static DegreeInterval exactly(const Degree& d) { return {d, d}; }

  const Degree& lo() const { return lo_; }
  const Degree& hi() const { return hi_; }
  bool is_vacuous() const { return lo_ == Degree::zero() && hi_ == Degree::one(); }
  bool contains(const DegreeInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

  friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;

 private:
  Degree lo_;
  Degree hi_;
};

/// Tightens `current` by an optional lower and upper bound; weaker bounds are
/// absorbed. Throws IntervalConflict when the result would be empty.
DegreeInterval refine_interval(const DegreeInterval& current, const std::optional<Degree>& new_lo,
                               const std::optional<Degree>& new_hi);

/// [1 − hi, 1 − lo]
DegreeInterval negate_interval(const DegreeInterval& i);

inline std::ostream& operator<<(std::ostream& os, const DegreeInterval& i) { return os << i.str(); }

// ---------------------------------------------------------------------------
// Concrete domain
// ---------------------------------------------------------------------------

struct Quantity {
  Decimal magnitude;
  std::string unit;

  std::string str() const { return magnitude.str() + " " + unit; }
  friend bool operator==(const Quantity&, const Quantity&) = default;
  friend auto operator<=>(const Quantity&, const Quantity&) = default;
};

/// Ordering of two quantities with the same unit. Throws UnitMismatch otherwise.
std::strong_ordering compare_quantities(const Quantity& a, const Quantity& b);

enum class Comparator { Greater, GreaterEqual, Less, LessEqual };

std::string_view comparator_keyword(Comparator c);  // GT, GE, LT, LE

struct ConcretePredicate {
  Comparator comparator;
  Quantity threshold;

  /// Crisp: exactly 0 or 1. Throws UnitMismatch.
  Degree evaluate(const Quantity& value) const;
  std::string str() const;

  friend bool operator==(const ConcretePredicate&, const ConcretePredicate&) = default;
  friend auto operator<=>(const ConcretePredicate&, const ConcretePredicate&) = default;
};

// ---------------------------------------------------------------------------
// Concept expressions
// ---------------------------------------------------------------------------

/// Immutable concept expression tree with structural equality and a total
/// order. Copies share nodes.
class Concept {
 public:
  enum class Kind { Top, Bottom, Atom, Not, And, Or, Exists, ConcreteExists, Forall };

  static Concept top();
  static Concept bottom();
  static Concept atom(std::string name);
  static Concept negation(Concept operand);
  static Concept conjunction(Concept left, Concept right);
  static Concept disjunction(Concept left, Concept right);
  static Concept exists(std::string role, Concept filler);
  static Concept exists(std::string role, ConcretePredicate predicate);
  static Concept forall(std::string role, Concept filler);

  Concept() : Concept(top()) {}

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  /// Atom name, or role name for the quantifiers.
  const std::string& name() const { return node_->name; }
  const std::string& role() const { return node_->name; }
  /// Operand of Not / filler of Exists, Forall.
  const Concept& operand() const { return node_->children.at(0); }
  const Concept& left() const { return node_->children.at(0); }
  const Concept& right() const { return node_->children.at(1); }
  const ConcretePredicate& predicate() const { return *node_->predicate; }
  const std::vector<Concept>& children() const { return node_->children; }

  std::size_t hash() const { return node_->hash; }

  /// Surface syntax (same grammar the parser accepts), minimal parentheses.
  std::string str() const;

  /// Collects atom names into `out`.
  void collect_atoms(std::set<std::string>& out) const;
  /// Collects role names into `out`.
  void collect_roles(std::set<std::string>& out) const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::optional<ConcretePredicate> predicate;
    std::vector<Concept> children;
    std::size_t hash = 0;
  };
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Concept make(Kind kind, std::string name, std::optional<ConcretePredicate> predicate,
                      std::vector<Concept> children);

  std::shared_ptr<const Node> node_;
};

inline std::ostream& operator<<(std::ostream& os, const Concept& c) { return os << c.str(); }

struct ConceptHash {
  std::size_t operator()(const Concept& c) const { return c.hash(); }
};

// ---------------------------------------------------------------------------
// Knowledge base
// ---------------------------------------------------------------------------

/// ⟨lhs ⊑ rhs, degree⟩ under Kleene-Dienes implication.
struct FuzzyGci {
  Concept lhs;
  Concept rhs;
  Degree degree = Degree::one();

  std::string str() const;
  friend bool operator==(const FuzzyGci&, const FuzzyGci&) = default;
  friend auto operator<=>(const FuzzyGci&, const FuzzyGci&) = default;
};

/// ⟨individual : concept, degree⟩, a lower bound on membership.
struct FuzzyAssertion {
  std::string individual;
  Concept expr;
  Degree degree = Degree::one();

  std::string str() const;
  friend bool operator==(const FuzzyAssertion&, const FuzzyAssertion&) = default;
  friend auto operator<=>(const FuzzyAssertion&, const FuzzyAssertion&) = default;
};

struct RoleAssertion {
  std::string subject;
  std::string object;
  std::string role;

  std::string str() const;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

struct ConcreteFact {
  std::string individual;
  Quantity value;
  std::string role;

  std::string str() const;
  friend bool operator==(const ConcreteFact&, const ConcreteFact&) = default;
  friend auto operator<=>(const ConcreteFact&, const ConcreteFact&) = default;
};

enum class RoleKind { Abstract, Concrete };

struct RoleDeclaration {
  std::string name;
  RoleKind kind = RoleKind::Abstract;
  std::string unit;     // concrete roles only
  bool closed = false;  // abstract roles only: the asserted fillers are all fillers

  std::string str() const;
  friend bool operator==(const RoleDeclaration&, const RoleDeclaration&) = default;
  friend auto operator<=>(const RoleDeclaration&, const RoleDeclaration&) = default;
};

/// Role declarations, TBox and ABox. Built by the text loader, which
/// validates it; the add_* methods used by the loader do not re-validate.
class KnowledgeBase {
 public:
  void declare_role(RoleDeclaration decl);
  void declare_concept(std::string name);
  void add_gci(FuzzyGci gci);
  void add_assertion(FuzzyAssertion a);
  void add_role_assertion(RoleAssertion r);
  void add_concrete_fact(ConcreteFact f);

  const std::map<std::string, RoleDeclaration>& roles() const { return roles_; }
  const RoleDeclaration* find_role(const std::string& name) const;
  const std::set<std::string>& declared_concepts() const { return declared_concepts_; }
  const std::vector<FuzzyGci>& tbox() const { return tbox_; }
  const std::vector<FuzzyAssertion>& assertions() const { return assertions_; }
  const std::vector<RoleAssertion>& role_assertions() const { return role_assertions_; }
  const std::vector<ConcreteFact>& concrete_facts() const { return concrete_facts_; }

  /// Sorted registry of every individual name mentioned in the ABox.
  const std::set<std::string>& individuals() const { return individuals_; }
  bool has_individual(const std::string& name) const { return individuals_.count(name) > 0; }

  /// Declared atoms plus every atom used in an axiom or assertion.
  std::set<std::string> concept_names() const;

  bool empty() const;

  /// Order-insensitive structural equality (statements compared as sorted multisets).
  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);

 private:
  std::map<std::string, RoleDeclaration> roles_;
  std::set<std::string> declared_concepts_;
  std::vector<FuzzyGci> tbox_;
  std::vector<FuzzyAssertion> assertions_;
  std::vector<RoleAssertion> role_assertions_;
  std::vector<ConcreteFact> concrete_facts_;
  std::set<std::string> individuals_;
};

}  // namespace fdlb
