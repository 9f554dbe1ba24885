#include <functional>

#include "fdlb/model.hpp"

namespace fdlb {

namespace {

void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Printing levels: 0 = OR, 1 = AND, 2 = prefix operators and atoms.
std::string render(const Concept& c, int level) {
  using K = Concept::Kind;
  auto wrap = [&](std::string s, int own) { return own < level ? "(" + s + ")" : s; };
  switch (c.kind()) {
    case K::Top: return "TOP";
    case K::Bottom: return "BOTTOM";
    case K::Atom: return c.name();
    case K::Not: return "NOT " + render(c.operand(), 2);
    case K::And: return wrap(render(c.left(), 1) + " AND " + render(c.right(), 2), 1);
    case K::Or: return wrap(render(c.left(), 0) + " OR " + render(c.right(), 1), 0);
    case K::Exists: return "EXISTS " + c.role() + " . " + render(c.operand(), 2);
    case K::ConcreteExists: return "EXISTS " + c.role() + " . " + c.predicate().str();
    case K::Forall: return "FORALL " + c.role() + " . " + render(c.operand(), 2);
  }
  return "?";
}

}  // namespace

Concept Concept::make(Kind kind, std::string name, std::optional<ConcretePredicate> predicate,
                      std::vector<Concept> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->predicate = std::move(predicate);
  node->children = std::move(children);
  std::size_t h = std::hash<int>{}(static_cast<int>(kind));
  hash_combine(h, std::hash<std::string>{}(node->name));
  if (node->predicate) hash_combine(h, std::hash<std::string>{}(node->predicate->str()));
  for (const auto& child : node->children) hash_combine(h, child.hash());
  node->hash = h;
  return Concept(std::move(node));
}

Concept Concept::top() {
  static const Concept instance = make(Kind::Top, {}, std::nullopt, {});
  return instance;
}

Concept Concept::bottom() {
  static const Concept instance = make(Kind::Bottom, {}, std::nullopt, {});
  return instance;
}

Concept Concept::atom(std::string name) { return make(Kind::Atom, std::move(name), std::nullopt, {}); }

Concept Concept::negation(Concept operand) {
  return make(Kind::Not, {}, std::nullopt, {std::move(operand)});
}

Concept Concept::conjunction(Concept left, Concept right) {
  return make(Kind::And, {}, std::nullopt, {std::move(left), std::move(right)});
}

Concept Concept::disjunction(Concept left, Concept right) {
  return make(Kind::Or, {}, std::nullopt, {std::move(left), std::move(right)});
}

Concept Concept::exists(std::string role, Concept filler) {
  return make(Kind::Exists, std::move(role), std::nullopt, {std::move(filler)});
}

Concept Concept::exists(std::string role, ConcretePredicate predicate) {
  return make(Kind::ConcreteExists, std::move(role), std::move(predicate), {});
}

Concept Concept::forall(std::string role, Concept filler) {
  return make(Kind::Forall, std::move(role), std::nullopt, {std::move(filler)});
}

std::string Concept::str() const { return render(*this, 0); }

void Concept::collect_atoms(std::set<std::string>& out) const {
  if (is(Kind::Atom)) out.insert(name());
  for (const auto& child : children()) child.collect_atoms(out);
}

void Concept::collect_roles(std::set<std::string>& out) const {
  if (is(Kind::Exists) || is(Kind::ConcreteExists) || is(Kind::Forall)) out.insert(role());
  for (const auto& child : children()) child.collect_roles(out);
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  if (auto c = a.node_->predicate <=> b.node_->predicate; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children().begin(), a.children().end(),
                                                b.children().begin(), b.children().end());
}

}  // namespace fdlb
