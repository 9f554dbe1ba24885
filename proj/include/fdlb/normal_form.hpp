#pragma once

#include "fdlb/model.hpp"

namespace fdlb {

/// Pushes negations inward using De Morgan and quantifier duality so that NOT
/// only sits directly above atoms and concrete restrictions. ¬¬C becomes C,
/// ¬⊤ becomes ⊥ and ¬⊥ becomes ⊤. A negated concrete restriction is kept as
/// is: with an unknown value, ¬∃r.P and ∃r.¬P differ.
Concept to_negation_normal_form(const Concept& c);

/// Negation normal form with the two children of every AND / OR sorted, so
/// that commuted expressions get one key.
Concept normalize(const Concept& c);

/// normalize(NOT c)
Concept dual(const Concept& c);

}  // namespace fdlb
