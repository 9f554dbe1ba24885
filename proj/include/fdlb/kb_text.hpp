#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdlb/model.hpp"
#include "fdlb/utility_box.hpp"

// Textual knowledge-base and utility-box formats.
//
//   role equipped : abstract closed;
//   role hasPrice : concrete(EUR);
//   concept Convertible;
//   concept Tablet EQUIV Device AND EXISTS hasPrice GT 200 EUR;
//   axiom Tablet EQUIV Device AND EXISTS hasPrice . GT 200 EUR;
//   axiom EXISTS hasWeight . LE 900 g SUBSUMED-BY LightweightTablet @ 1;
//   assert tab_3 : Convertible @ 0.8;
//   assert (tab_1, equipment_1) : equipped;
//   assert (tab_1, 999 EUR) : hasPrice;
//
//   ubox expert1 { InexpensiveTablet = 50; UpperclassTablet = 40; }
//
// NOT binds tighter than AND, AND tighter than OR; quantifier bodies are
// unary, so `EXISTS r . A AND B` is `(EXISTS r . A) AND B`; the dot after
// the role is optional. `concept N EQUIV C;` is short for `axiom N EQUIV C;`.
// `#` starts a comment. A missing `@ degree` means 1.

namespace fdlb::text {

/// 1-based line and column (in bytes) plus the byte offset into the input.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;
  std::size_t offset = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

enum class DiagnosticCode {
  Lexical,
  Syntax,
  DegreeRange,
  UndeclaredRole,
  DuplicateRole,
  RoleKindMismatch,
  UnitMismatch,
  DuplicateConcreteFact,
  DuplicateAttribute,
  NegativeWeight,
  DuplicateConcept,  // warning
};

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  DiagnosticCode code = DiagnosticCode::Syntax;
  std::string message;
  SourceSpan span;

  /// "line:col: error: message"
  std::string str() const;
  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;  // absent whenever an error diagnostic exists
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

/// Parses and validates a knowledge base. On success, equivalences are split
/// into two GCIs and degree-0 GCIs ⟨C ⊑ D, 0⟩ are rewritten to ⟨C ⊑ ¬D, 1⟩.
ParseResult<KnowledgeBase> parse_kb(std::string_view text);

/// Parses a `ubox NAME { ATTR = WEIGHT; ... }` document.
ParseResult<UtilityBox> parse_ubox(std::string_view text);

/// Parses a standalone concept expression and checks its roles against the
/// declarations of `kb`.
ParseResult<Concept> parse_concept(std::string_view text, const KnowledgeBase& kb);

/// Deterministic text form: declarations, TBox, ABox, each block sorted.
/// parse_kb(serialize_kb(kb)) == kb.
std::string serialize_kb(const KnowledgeBase& kb);

std::string serialize_ubox(const UtilityBox& ubox);

}  // namespace fdlb::text
