#include <map>
#include <set>
#include <utility>
#include <variant>

#include "fdlb/kb_text.hpp"
#include "lexer.hpp"

namespace fdlb::text {

std::string ParseDiagnostic::str() const {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
         (severity == Severity::Error ? "error: " : "warning: ") + message;
}

namespace {

using detail::Token;
using detail::TokenKind;

struct SyntaxError {
  ParseDiagnostic diagnostic;
};

/// A role mentioned inside a concept expression, checked once all
/// declarations are known.
struct RoleUse {
  std::string role;
  SourceSpan span;
  bool concrete = false;  // EXISTS r . <comparator> ...
  std::string unit;       // concrete uses only
  SourceSpan unit_span;
};

struct RoleDeclStmt {
  RoleDeclaration decl;
  SourceSpan name_span;
};
struct ConceptDeclStmt {
  std::string name;
  SourceSpan span;
};
struct AxiomStmt {
  Concept lhs;
  Concept rhs;
  bool equivalence = false;
  std::optional<Degree> degree;  // nullopt: literal was out of range (already reported)
  std::vector<RoleUse> roles;
};
struct ConceptAssertionStmt {
  std::string individual;
  Concept expr;
  std::optional<Degree> degree;
  std::vector<RoleUse> roles;
};
struct RoleAssertionStmt {
  RoleAssertion assertion;
  SourceSpan role_span;
};
struct ConcreteFactStmt {
  ConcreteFact fact;
  SourceSpan unit_span;
  SourceSpan role_span;
  SourceSpan statement_span;
};

using Statement = std::variant<RoleDeclStmt, ConceptDeclStmt, AxiomStmt, ConceptAssertionStmt,
                               RoleAssertionStmt, ConcreteFactStmt>;

class Parser {
 public:
  Parser(std::string_view text, std::vector<ParseDiagnostic>& diagnostics)
      : diagnostics_(diagnostics), tokens_(detail::tokenize(text, diagnostics)) {}

  std::vector<Statement> parse_kb_statements() {
    std::vector<Statement> out;
    while (!at_end()) {
      try {
        out.push_back(statement());
      } catch (const SyntaxError& e) {
        diagnostics_.push_back(e.diagnostic);
        recover({';'});
      }
    }
    return out;
  }

  std::optional<UtilityBox> parse_ubox_document() {
    UtilityBox box;
    std::map<std::string, SourceSpan> seen;
    bool valid = true;
    try {
      expect_word("ubox");
      box.expert = identifier("expert identifier").text;
      expect_punct('{');
    } catch (const SyntaxError& e) {
      diagnostics_.push_back(e.diagnostic);
      return std::nullopt;
    }
    while (!at_end() && !peek().is_punct('}')) {
      try {
        Token name = identifier("attribute name");
        expect_punct('=');
        Token weight = next();
        if (weight.kind != TokenKind::Number) throw error(weight, "expected a weight");
        expect_punct(';');
        auto value = Decimal::parse(weight.text);
        if (value && value->is_negative()) {
          report(DiagnosticCode::NegativeWeight, weight.span,
                 "weight of '" + name.text + "' is negative: " + weight.text);
          valid = false;
        }
        if (auto it = seen.find(name.text); it != seen.end()) {
          report(DiagnosticCode::DuplicateAttribute, name.span,
                 "attribute '" + name.text + "' is already weighted at line " +
                     std::to_string(it->second.line));
          valid = false;
          continue;
        }
        seen.emplace(name.text, name.span);
        if (value) box.entries.push_back({name.text, *value});
      } catch (const SyntaxError& e) {
        diagnostics_.push_back(e.diagnostic);
        valid = false;
        recover({';', '}'});
      }
    }
    try {
      expect_punct('}');
      if (!at_end()) throw error(peek(), "unexpected text after the closing '}'");
    } catch (const SyntaxError& e) {
      diagnostics_.push_back(e.diagnostic);
      return std::nullopt;
    }
    if (!valid) return std::nullopt;
    return box;
  }

  std::optional<std::pair<Concept, std::vector<RoleUse>>> parse_standalone_concept() {
    try {
      role_uses_.clear();
      Concept c = expr();
      if (!at_end()) throw error(peek(), "unexpected '" + peek().text + "' after the concept");
      return std::make_pair(std::move(c), std::move(role_uses_));
    } catch (const SyntaxError& e) {
      diagnostics_.push_back(e.diagnostic);
      return std::nullopt;
    }
  }

  void report(DiagnosticCode code, SourceSpan span, std::string message,
              Severity severity = Severity::Error) {
    diagnostics_.push_back({severity, code, std::move(message), span});
  }

 private:
  // --- token plumbing ------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }

  static SyntaxError error(const Token& at, std::string message) {
    std::string found = at.kind == TokenKind::End ? "end of input" : "'" + at.text + "'";
    return SyntaxError{{Severity::Error, DiagnosticCode::Syntax, message + ", found " + found, at.span}};
  }

  const Token& expect_punct(char c) {
    if (!peek().is_punct(c)) throw error(peek(), std::string("expected '") + c + "'");
    return next();
  }
  const Token& expect_word(std::string_view w) {
    if (!peek().is_word(w)) throw error(peek(), "expected '" + std::string(w) + "'");
    return next();
  }
  Token identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || detail::is_reserved(t.text))
      throw error(t, std::string("expected ") + what);
    return next();
  }

  void recover(std::initializer_list<char> stops) {
    while (!at_end()) {
      const Token& t = peek();
      for (char s : stops) {
        if (t.is_punct(s)) {
          if (s == ';') next();
          return;
        }
      }
      next();
    }
  }

  std::optional<Degree> degree_literal(const Token& t) {
    try {
      return make_degree(t.text);
    } catch (const DegreeRangeError&) {
      report(DiagnosticCode::DegreeRange, t.span,
             "degree " + t.text + " is outside the membership range [0, 1]");
      return std::nullopt;
    }
  }

  /// `[ "@" DECIMAL ]`, defaulting to 1.
  std::optional<Degree> optional_degree() {
    if (!peek().is_punct('@')) return Degree::one();
    next();
    const Token& t = next();
    if (t.kind != TokenKind::Number) throw error(t, "expected a degree after '@'");
    return degree_literal(t);
  }

  // --- statements ----------------------------------------------------------

  Statement statement() {
    const Token& head = peek();
    if (head.is_word("role")) return role_declaration();
    if (head.is_word("concept")) {
      next();
      Token name = identifier("concept name");
      if (peek().is_word("EQUIV") || peek().is_word("SUBSUMED-BY")) {
        role_uses_.clear();
        return axiom_tail(Concept::atom(name.text));
      }
      expect_punct(';');
      return ConceptDeclStmt{name.text, name.span};
    }
    if (head.is_word("axiom")) return axiom();
    if (head.is_word("assert")) return assertion();
    throw error(head, "expected 'role', 'concept', 'axiom' or 'assert'");
  }

  Statement role_declaration() {
    expect_word("role");
    Token name = identifier("role name");
    expect_punct(':');
    RoleDeclStmt stmt;
    stmt.decl.name = name.text;
    stmt.name_span = name.span;
    if (peek().is_word("abstract")) {
      next();
      stmt.decl.kind = RoleKind::Abstract;
      if (peek().is_word("closed")) {
        next();
        stmt.decl.closed = true;
      }
    } else if (peek().is_word("concrete")) {
      next();
      expect_punct('(');
      stmt.decl.kind = RoleKind::Concrete;
      stmt.decl.unit = unit().text;
      expect_punct(')');
    } else {
      throw error(peek(), "expected 'abstract' or 'concrete'");
    }
    expect_punct(';');
    return stmt;
  }

  Statement axiom() {
    expect_word("axiom");
    role_uses_.clear();
    return axiom_tail(expr());
  }

  /// `SUBSUMED-BY | EQUIV rhs [@ d] ;` after the left-hand side.
  Statement axiom_tail(Concept lhs) {
    AxiomStmt stmt;
    stmt.lhs = std::move(lhs);
    if (peek().is_word("SUBSUMED-BY")) {
      next();
    } else if (peek().is_word("EQUIV")) {
      next();
      stmt.equivalence = true;
    } else {
      throw error(peek(), "expected 'SUBSUMED-BY' or 'EQUIV'");
    }
    stmt.rhs = expr();
    stmt.degree = optional_degree();
    expect_punct(';');
    stmt.roles = std::move(role_uses_);
    return stmt;
  }

  Statement assertion() {
    expect_word("assert");
    if (peek().is_punct('(')) {
      SourceSpan open = next().span;
      Token subject = identifier("individual name");
      expect_punct(',');
      if (peek().kind == TokenKind::Number) {
        Token number = next();
        Token u = unit();
        expect_punct(')');
        expect_punct(':');
        Token role = identifier("role name");
        expect_punct(';');
        ConcreteFactStmt stmt;
        stmt.fact = {subject.text, Quantity{*Decimal::parse(number.text), u.text}, role.text};
        stmt.unit_span = u.span;
        stmt.role_span = role.span;
        stmt.statement_span = open;
        return stmt;
      }
      Token object = identifier("individual name or value");
      expect_punct(')');
      expect_punct(':');
      Token role = identifier("role name");
      expect_punct(';');
      return RoleAssertionStmt{{subject.text, object.text, role.text}, role.span};
    }
    Token individual = identifier("individual name");
    expect_punct(':');
    role_uses_.clear();
    ConceptAssertionStmt stmt;
    stmt.individual = individual.text;
    stmt.expr = expr();
    stmt.degree = optional_degree();
    expect_punct(';');
    stmt.roles = std::move(role_uses_);
    return stmt;
  }

  // --- concepts ------------------------------------------------------------

  Concept expr() {
    Concept c = conjunction();
    while (peek().is_word("OR")) {
      next();
      c = Concept::disjunction(std::move(c), conjunction());
    }
    return c;
  }

  Concept conjunction() {
    Concept c = unary();
    while (peek().is_word("AND")) {
      next();
      c = Concept::conjunction(std::move(c), unary());
    }
    return c;
  }

  Concept unary() {
    const Token& t = peek();
    if (t.is_word("NOT")) {
      next();
      return Concept::negation(unary());
    }
    if (t.is_word("EXISTS") || t.is_word("FORALL")) {
      bool exists = t.is_word("EXISTS");
      next();
      Token role = identifier("role name");
      if (peek().is_punct('.')) next();
      if (exists) {
        if (auto cmp = comparator(peek())) {
          next();
          const Token& number = next();
          if (number.kind != TokenKind::Number) throw error(number, "expected a number");
          Token u = unit();
          role_uses_.push_back({role.text, role.span, true, u.text, u.span});
          return Concept::exists(role.text,
                                 ConcretePredicate{*cmp, Quantity{*Decimal::parse(number.text), u.text}});
        }
      }
      role_uses_.push_back({role.text, role.span, false, {}, {}});
      Concept filler = unary();
      return exists ? Concept::exists(role.text, std::move(filler))
                    : Concept::forall(role.text, std::move(filler));
    }
    return primary();
  }

  Concept primary() {
    const Token& t = peek();
    if (t.is_word("TOP")) {
      next();
      return Concept::top();
    }
    if (t.is_word("BOTTOM")) {
      next();
      return Concept::bottom();
    }
    if (t.is_punct('(')) {
      next();
      Concept c = expr();
      expect_punct(')');
      return c;
    }
    return Concept::atom(identifier("a concept").text);
  }

  static std::optional<Comparator> comparator(const Token& t) {
    if (t.is_word("GT")) return Comparator::Greater;
    if (t.is_word("GE")) return Comparator::GreaterEqual;
    if (t.is_word("LT")) return Comparator::Less;
    if (t.is_word("LE")) return Comparator::LessEqual;
    return std::nullopt;
  }

  Token unit() {
    const Token& t = peek();
    if (t.kind == TokenKind::Symbol || (t.kind == TokenKind::Word && !detail::is_reserved(t.text)))
      return next();
    throw error(t, "expected a unit");
  }

  std::vector<ParseDiagnostic>& diagnostics_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<RoleUse> role_uses_;
};

bool has_error(const std::vector<ParseDiagnostic>& diagnostics) {
  for (const auto& d : diagnostics)
    if (d.severity == Severity::Error) return true;
  return false;
}

class Validator {
 public:
  Validator(const std::map<std::string, RoleDeclaration>& roles, Parser& sink) : roles_(roles), sink_(sink) {}

  bool check_uses(const std::vector<RoleUse>& uses) {
    bool ok = true;
    for (const auto& use : uses) {
      auto it = roles_.find(use.role);
      if (it == roles_.end()) {
        sink_.report(DiagnosticCode::UndeclaredRole, use.span, "role '" + use.role + "' is not declared");
        ok = false;
        continue;
      }
      const RoleDeclaration& decl = it->second;
      if (use.concrete && decl.kind != RoleKind::Concrete) {
        sink_.report(DiagnosticCode::RoleKindMismatch, use.span,
                     "role '" + use.role + "' is abstract but is restricted by a comparison");
        ok = false;
      } else if (!use.concrete && decl.kind != RoleKind::Abstract) {
        sink_.report(DiagnosticCode::RoleKindMismatch, use.span,
                     "role '" + use.role + "' is concrete and needs a comparison restriction");
        ok = false;
      } else if (use.concrete && decl.unit != use.unit) {
        sink_.report(DiagnosticCode::UnitMismatch, use.unit_span,
                     "unit '" + use.unit + "' does not match role '" + use.role + "' (" + decl.unit + ")");
        ok = false;
      }
    }
    return ok;
  }

  const RoleDeclaration* lookup(const std::string& name, SourceSpan span) {
    auto it = roles_.find(name);
    if (it != roles_.end()) return &it->second;
    sink_.report(DiagnosticCode::UndeclaredRole, span, "role '" + name + "' is not declared");
    return nullptr;
  }

 private:
  const std::map<std::string, RoleDeclaration>& roles_;
  Parser& sink_;
};

KnowledgeBase build(std::vector<Statement> statements, Parser& parser) {
  std::map<std::string, RoleDeclaration> roles;
  std::map<std::string, SourceSpan> concept_decls;
  for (auto& s : statements) {
    if (auto* r = std::get_if<RoleDeclStmt>(&s)) {
      if (roles.count(r->decl.name)) {
        parser.report(DiagnosticCode::DuplicateRole, r->name_span,
                      "role '" + r->decl.name + "' is declared more than once");
        continue;
      }
      roles.emplace(r->decl.name, r->decl);
    } else if (auto* c = std::get_if<ConceptDeclStmt>(&s)) {
      if (!concept_decls.emplace(c->name, c->span).second) {
        parser.report(DiagnosticCode::DuplicateConcept, c->span,
                      "concept '" + c->name + "' is declared more than once", Severity::Warning);
      }
    }
  }

  Validator validator(roles, parser);
  KnowledgeBase kb;
  for (const auto& [name, decl] : roles) kb.declare_role(decl);
  for (const auto& [name, span] : concept_decls) kb.declare_concept(name);

  std::map<std::pair<std::string, std::string>, SourceSpan> concrete_seen;
  for (auto& s : statements) {
    if (auto* a = std::get_if<AxiomStmt>(&s)) {
      if (!validator.check_uses(a->roles) || !a->degree) continue;
      auto add = [&](Concept lhs, Concept rhs) {
        if (a->degree->value().is_zero()) {
          kb.add_gci({std::move(lhs), Concept::negation(std::move(rhs)), Degree::one()});
        } else {
          kb.add_gci({std::move(lhs), std::move(rhs), *a->degree});
        }
      };
      add(a->lhs, a->rhs);
      if (a->equivalence) add(a->rhs, a->lhs);
    } else if (auto* ca = std::get_if<ConceptAssertionStmt>(&s)) {
      if (!validator.check_uses(ca->roles) || !ca->degree) continue;
      kb.add_assertion({ca->individual, ca->expr, *ca->degree});
    } else if (auto* ra = std::get_if<RoleAssertionStmt>(&s)) {
      const RoleDeclaration* decl = validator.lookup(ra->assertion.role, ra->role_span);
      if (!decl) continue;
      if (decl->kind != RoleKind::Abstract) {
        parser.report(DiagnosticCode::RoleKindMismatch, ra->role_span,
                      "role '" + decl->name + "' is concrete; its fillers must be quantities");
        continue;
      }
      kb.add_role_assertion(ra->assertion);
    } else if (auto* cf = std::get_if<ConcreteFactStmt>(&s)) {
      const RoleDeclaration* decl = validator.lookup(cf->fact.role, cf->role_span);
      if (!decl) continue;
      if (decl->kind != RoleKind::Concrete) {
        parser.report(DiagnosticCode::RoleKindMismatch, cf->role_span,
                      "role '" + decl->name + "' is abstract; its fillers must be individuals");
        continue;
      }
      if (decl->unit != cf->fact.value.unit) {
        parser.report(DiagnosticCode::UnitMismatch, cf->unit_span,
                      "unit '" + cf->fact.value.unit + "' does not match role '" + decl->name + "' (" +
                          decl->unit + ")");
        continue;
      }
      auto key = std::make_pair(cf->fact.individual, cf->fact.role);
      if (auto it = concrete_seen.find(key); it != concrete_seen.end()) {
        parser.report(DiagnosticCode::DuplicateConcreteFact, cf->statement_span,
                      "functional role '" + cf->fact.role + "' already has a value for '" +
                          cf->fact.individual + "' (line " + std::to_string(it->second.line) + ")");
        continue;
      }
      concrete_seen.emplace(key, cf->statement_span);
      kb.add_concrete_fact(cf->fact);
    }
  }
  return kb;
}

}  // namespace

ParseResult<KnowledgeBase> parse_kb(std::string_view text) {
  ParseResult<KnowledgeBase> result;
  Parser parser(text, result.diagnostics);
  auto statements = parser.parse_kb_statements();
  KnowledgeBase kb = build(std::move(statements), parser);
  if (!has_error(result.diagnostics)) result.value = std::move(kb);
  return result;
}

ParseResult<UtilityBox> parse_ubox(std::string_view text) {
  ParseResult<UtilityBox> result;
  Parser parser(text, result.diagnostics);
  auto box = parser.parse_ubox_document();
  if (box && !has_error(result.diagnostics)) result.value = std::move(box);
  return result;
}

ParseResult<Concept> parse_concept(std::string_view text, const KnowledgeBase& kb) {
  ParseResult<Concept> result;
  Parser parser(text, result.diagnostics);
  auto parsed = parser.parse_standalone_concept();
  if (!parsed) return result;
  Validator validator(kb.roles(), parser);
  if (validator.check_uses(parsed->second) && !has_error(result.diagnostics))
    result.value = std::move(parsed->first);
  return result;
}

}  // namespace fdlb::text
