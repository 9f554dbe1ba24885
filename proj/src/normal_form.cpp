#include "fdlb/normal_form.hpp"

#include <utility>

namespace fdlb {

namespace {

using K = Concept::Kind;

Concept nnf(const Concept& c, bool negated) {
  switch (c.kind()) {
    case K::Top: return negated ? Concept::bottom() : c;
    case K::Bottom: return negated ? Concept::top() : c;
    case K::Atom:
    case K::ConcreteExists: return negated ? Concept::negation(c) : c;
    case K::Not: return nnf(c.operand(), !negated);
    case K::And: {
      Concept l = nnf(c.left(), negated);
      Concept r = nnf(c.right(), negated);
      return negated ? Concept::disjunction(std::move(l), std::move(r))
                     : Concept::conjunction(std::move(l), std::move(r));
    }
    case K::Or: {
      Concept l = nnf(c.left(), negated);
      Concept r = nnf(c.right(), negated);
      return negated ? Concept::conjunction(std::move(l), std::move(r))
                     : Concept::disjunction(std::move(l), std::move(r));
    }
    case K::Exists: {
      Concept f = nnf(c.operand(), negated);
      return negated ? Concept::forall(c.role(), std::move(f)) : Concept::exists(c.role(), std::move(f));
    }
    case K::Forall: {
      Concept f = nnf(c.operand(), negated);
      return negated ? Concept::exists(c.role(), std::move(f)) : Concept::forall(c.role(), std::move(f));
    }
  }
  return c;
}

Concept sort_children(const Concept& c) {
  switch (c.kind()) {
    case K::And:
    case K::Or: {
      Concept l = sort_children(c.left());
      Concept r = sort_children(c.right());
      if (r < l) std::swap(l, r);
      return c.is(K::And) ? Concept::conjunction(std::move(l), std::move(r))
                          : Concept::disjunction(std::move(l), std::move(r));
    }
    case K::Not: return Concept::negation(sort_children(c.operand()));
    case K::Exists: return Concept::exists(c.role(), sort_children(c.operand()));
    case K::Forall: return Concept::forall(c.role(), sort_children(c.operand()));
    default: return c;
  }
}

}  // namespace

Concept to_negation_normal_form(const Concept& c) { return nnf(c, false); }

Concept normalize(const Concept& c) { return sort_children(nnf(c, false)); }

Concept dual(const Concept& c) { return normalize(Concept::negation(c)); }

}  // namespace fdlb
