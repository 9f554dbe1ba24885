#include "fdlb/model.hpp"

#include <algorithm>

namespace fdlb {

Degree Degree::one() { return Degree(Decimal(1)); }

Degree Degree::make(const Decimal& value) {
  if (value < Decimal(0) || value > Decimal(1)) throw DegreeRangeError(value.str());
  return Degree(value);
}

Degree Degree::complement() const { return Degree(Decimal(1) - value_); }

Degree make_degree(std::string_view literal) {
  auto parsed = Decimal::parse(literal);
  if (!parsed) throw DegreeRangeError(std::string(literal));
  if (*parsed < Decimal(0) || *parsed > Decimal(1)) throw DegreeRangeError(std::string(literal));
  return Degree::make(*parsed);
}

IntervalConflict::IntervalConflict(Degree lo, Degree hi, std::string lo_source, std::string hi_source)
    : Error("empty degree interval: lower bound " + lo.str() + " exceeds upper bound " + hi.str()),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      lo_source_(std::move(lo_source)),
      hi_source_(std::move(hi_source)) {}

DegreeInterval::DegreeInterval(Degree lo, Degree hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw IntervalConflict(lo_, hi_);
}

DegreeInterval refine_interval(const DegreeInterval& current, const std::optional<Degree>& new_lo,
                               const std::optional<Degree>& new_hi) {
  Degree lo = new_lo ? std::max(current.lo(), *new_lo) : current.lo();
  Degree hi = new_hi ? std::min(current.hi(), *new_hi) : current.hi();
  return DegreeInterval(lo, hi);
}

DegreeInterval negate_interval(const DegreeInterval& i) {
  return DegreeInterval(i.hi().complement(), i.lo().complement());
}

std::strong_ordering compare_quantities(const Quantity& a, const Quantity& b) {
  if (a.unit != b.unit) throw UnitMismatch(a.unit, b.unit);
  return a.magnitude <=> b.magnitude;
}

std::string_view comparator_keyword(Comparator c) {
  switch (c) {
    case Comparator::Greater: return "GT";
    case Comparator::GreaterEqual: return "GE";
    case Comparator::Less: return "LT";
    case Comparator::LessEqual: return "LE";
  }
  return "?";
}

Degree ConcretePredicate::evaluate(const Quantity& value) const {
  auto order = compare_quantities(value, threshold);
  bool holds = false;
  switch (comparator) {
    case Comparator::Greater: holds = order > 0; break;
    case Comparator::GreaterEqual: holds = order >= 0; break;
    case Comparator::Less: holds = order < 0; break;
    case Comparator::LessEqual: holds = order <= 0; break;
  }
  return holds ? Degree::one() : Degree::zero();
}

std::string ConcretePredicate::str() const {
  return std::string(comparator_keyword(comparator)) + " " + threshold.str();
}

namespace {

std::string degree_suffix(const Degree& d) {
  return d == Degree::one() ? std::string() : " @ " + d.str();
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string FuzzyGci::str() const {
  return lhs.str() + " SUBSUMED-BY " + rhs.str() + degree_suffix(degree);
}

std::string FuzzyAssertion::str() const {
  return individual + " : " + expr.str() + degree_suffix(degree);
}

std::string RoleAssertion::str() const { return "(" + subject + ", " + object + ") : " + role; }

std::string ConcreteFact::str() const { return "(" + individual + ", " + value.str() + ") : " + role; }

std::string RoleDeclaration::str() const {
  if (kind == RoleKind::Concrete) return name + " : concrete(" + unit + ")";
  return name + (closed ? " : abstract closed" : " : abstract");
}

void KnowledgeBase::declare_role(RoleDeclaration decl) {
  std::string key = decl.name;
  roles_.insert_or_assign(std::move(key), std::move(decl));
}

void KnowledgeBase::declare_concept(std::string name) { declared_concepts_.insert(std::move(name)); }

void KnowledgeBase::add_gci(FuzzyGci gci) { tbox_.push_back(std::move(gci)); }

void KnowledgeBase::add_assertion(FuzzyAssertion a) {
  individuals_.insert(a.individual);
  assertions_.push_back(std::move(a));
}

void KnowledgeBase::add_role_assertion(RoleAssertion r) {
  individuals_.insert(r.subject);
  individuals_.insert(r.object);
  role_assertions_.push_back(std::move(r));
}

void KnowledgeBase::add_concrete_fact(ConcreteFact f) {
  individuals_.insert(f.individual);
  concrete_facts_.push_back(std::move(f));
}

const RoleDeclaration* KnowledgeBase::find_role(const std::string& name) const {
  auto it = roles_.find(name);
  return it == roles_.end() ? nullptr : &it->second;
}

std::set<std::string> KnowledgeBase::concept_names() const {
  std::set<std::string> names = declared_concepts_;
  for (const auto& g : tbox_) {
    g.lhs.collect_atoms(names);
    g.rhs.collect_atoms(names);
  }
  for (const auto& a : assertions_) a.expr.collect_atoms(names);
  return names;
}

bool KnowledgeBase::empty() const {
  return roles_.empty() && declared_concepts_.empty() && tbox_.empty() && assertions_.empty() &&
         role_assertions_.empty() && concrete_facts_.empty();
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
  return a.roles_ == b.roles_ && a.declared_concepts_ == b.declared_concepts_ &&
         sorted(a.tbox_) == sorted(b.tbox_) && sorted(a.assertions_) == sorted(b.assertions_) &&
         sorted(a.role_assertions_) == sorted(b.role_assertions_) &&
         sorted(a.concrete_facts_) == sorted(b.concrete_facts_);
}

}  // namespace fdlb
