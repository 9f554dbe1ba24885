#include "oracle.hpp"

#include <algorithm>
#include <vector>

namespace fdlb::testing {

namespace {

using K = Concept::Kind;

Concept ordered(bool conjunction, Concept l, Concept r) {
  if (r.str() < l.str()) std::swap(l, r);
  return conjunction ? Concept::conjunction(l, r) : Concept::disjunction(l, r);
}

Concept nnf(const Concept& c, bool neg) {
  switch (c.kind()) {
    case K::Top: return neg ? Concept::bottom() : Concept::top();
    case K::Bottom: return neg ? Concept::top() : Concept::bottom();
    case K::Atom:
    case K::ConcreteExists: return neg ? Concept::negation(c) : c;
    case K::Not: return nnf(c.operand(), !neg);
    case K::And: return ordered(!neg, nnf(c.left(), neg), nnf(c.right(), neg));
    case K::Or: return ordered(neg, nnf(c.left(), neg), nnf(c.right(), neg));
    case K::Exists:
      return neg ? Concept::forall(c.role(), nnf(c.operand(), true)) : Concept::exists(c.role(), nnf(c.operand(), false));
    case K::Forall:
      return neg ? Concept::exists(c.role(), nnf(c.operand(), true)) : Concept::forall(c.role(), nnf(c.operand(), false));
  }
  return c;
}

void close(const Concept& c, std::map<std::string, Concept>& out) {
  if (!out.emplace(c.str(), c).second) return;
  for (const auto& child : c.children()) close(child, out);
  close(oracle_normal_form(Concept::negation(c)), out);
}

Decimal zero() { return Decimal(0); }
Decimal one() { return Decimal(1); }

}  // namespace

Concept oracle_normal_form(const Concept& c) { return nnf(c, false); }

OracleResult brute_force(const KnowledgeBase& kb) {
  OracleResult r;
  close(Concept::top(), r.closure);
  for (const auto& name : kb.declared_concepts()) close(Concept::atom(name), r.closure);
  for (const auto& g : kb.tbox()) {
    close(oracle_normal_form(g.lhs), r.closure);
    close(oracle_normal_form(g.rhs), r.closure);
  }
  for (const auto& a : kb.assertions()) close(oracle_normal_form(a.expr), r.closure);

  for (const auto& a : kb.individuals())
    for (const auto& [key, c] : r.closure) r.cells[{a, key}] = {zero(), one()};

  // Text keys of every normalized statement concept, computed once.
  auto key_of = [](const Concept& c) { return oracle_normal_form(c).str(); };
  std::vector<std::string> assertion_keys;
  for (const auto& as : kb.assertions()) assertion_keys.push_back(key_of(as.expr));
  std::vector<std::pair<std::string, std::string>> gci_keys;
  for (const auto& g : kb.tbox()) gci_keys.emplace_back(key_of(g.lhs), key_of(g.rhs));
  std::map<std::string, std::string> dual_key;
  for (const auto& [k, e] : r.closure) dual_key[k] = key_of(Concept::negation(e));

  auto lo = [&](const std::string& a, const std::string& k) { return r.cells.at({a, k}).lo; };
  auto hi = [&](const std::string& a, const std::string& k) { return r.cells.at({a, k}).hi; };

  bool changed = true;
  while (changed) {
    changed = false;
    ++r.sweeps;
    for (const auto& a : kb.individuals()) {
      for (const auto& [k, e] : r.closure) {
        Decimal l = lo(a, k);
        Decimal h = hi(a, k);
        auto raise = [&](const Decimal& v) { l = std::max(l, v); };
        auto lower = [&](const Decimal& v) { h = std::min(h, v); };

        if (e.is(K::Top)) raise(one());
        if (e.is(K::Bottom)) lower(zero());

        for (std::size_t i = 0; i < kb.assertions().size(); ++i)
          if (kb.assertions()[i].individual == a && assertion_keys[i] == k) raise(kb.assertions()[i].degree.value());

        if (e.is(K::And)) {
          std::string x = e.left().str(), y = e.right().str();
          raise(std::min(lo(a, x), lo(a, y)));
          lower(std::min(hi(a, x), hi(a, y)));
        }
        if (e.is(K::Or)) {
          std::string x = e.left().str(), y = e.right().str();
          raise(std::max(lo(a, x), lo(a, y)));
          lower(std::max(hi(a, x), hi(a, y)));
        }
        for (const auto& [pk, p] : r.closure) {
          if (p.is(K::And) && (p.left().str() == k || p.right().str() == k)) raise(lo(a, pk));
        }

        const std::string& d = dual_key.at(k);
        raise(one() - hi(a, d));
        lower(one() - lo(a, d));

        if (e.is(K::ConcreteExists)) {
          for (const auto& f : kb.concrete_facts()) {
            if (f.individual != a || f.role != e.role()) continue;
            Decimal v = e.predicate().evaluate(f.value).value();
            raise(v);
            lower(v);
          }
        }

        if (e.is(K::Exists)) {
          for (const auto& ra : kb.role_assertions())
            if (ra.subject == a && ra.role == e.role()) raise(lo(ra.object, e.operand().str()));
        }

        for (const auto& [pk, p] : r.closure) {
          if (!p.is(K::Forall) || p.operand().str() != k) continue;
          for (const auto& ra : kb.role_assertions())
            if (ra.object == a && ra.role == p.role()) raise(lo(ra.subject, pk));
        }

        if (e.is(K::Forall) && kb.find_role(e.role())->closed) {
          Decimal m = one();
          for (const auto& ra : kb.role_assertions())
            if (ra.subject == a && ra.role == e.role()) m = std::min(m, lo(ra.object, e.operand().str()));
          raise(m);
        }

        for (std::size_t g = 0; g < kb.tbox().size(); ++g) {
          const Decimal& t = kb.tbox()[g].degree.value();
          if (gci_keys[g].second == k && lo(a, gci_keys[g].first) > one() - t) raise(t);
        }

        for (std::size_t g = 0; g < kb.tbox().size(); ++g) {
          const Concept& lhs = r.closure.at(gci_keys[g].first);
          if (kb.tbox()[g].degree.value() != one() || gci_keys[g].second != "BOTTOM" || !lhs.is(K::And)) continue;
          std::string x = lhs.left().str(), y = lhs.right().str();
          if (x == k && lo(a, y) > zero()) lower(zero());
          if (y == k && lo(a, x) > zero()) lower(zero());
        }

        auto& cell = r.cells.at({a, k});
        if (l != cell.lo || h != cell.hi) {
          cell = {l, h};
          changed = true;
        }
      }
    }
  }

  for (const auto& [key, cell] : r.cells)
    if (cell.lo > cell.hi) r.consistent = false;
  return r;
}

}  // namespace fdlb::testing
