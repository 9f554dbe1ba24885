#pragma once

#include <string>

#include "fdlb/model.hpp"
#include "fdlb/utility_box.hpp"

// Randomized property checks shared by the unit suite and the acceptance
// runner. Each returns the number of cases examined and the first failure.

namespace fdlb::testing {

struct PropertyResult {
  bool ok = true;
  int cases = 0;
  std::string failure;  // first counterexample, empty when ok
};

/// Parses text that is known to be valid; throws on diagnostics.
KnowledgeBase load_kb_text(const std::string& text);
UtilityBox load_ubox_text(const std::string& text);
KnowledgeBase load_kb_file(const std::string& path);
UtilityBox load_ubox_file(const std::string& path);

/// Engine and brute-force oracle agree on consistency and on every interval.
/// Examines KBs until `consistent_target` consistent ones have been compared.
PropertyResult check_oracle_equivalence(int consistent_target);
/// Same fixpoint for every statement order.
PropertyResult check_confluence(int kbs);
/// Saturating a saturated KB changes nothing.
PropertyResult check_idempotence(int kbs);
/// An added assertion only ever narrows intervals.
PropertyResult check_monotone_growth(int kbs);
/// parse(serialize(kb)) == kb and serialization is stable.
PropertyResult check_round_trip(int kbs);
/// Multiplying every weight by a positive constant keeps the ranking and ideal choice.
PropertyResult check_scaling_invariance(int kbs);
/// On crisp KBs the fuzzy utility equals the σ-utility.
PropertyResult check_crisp_reduction(int kbs, const std::string& fixture_dir);
/// Utility over the union of two disjoint boxes is the sum of the two.
PropertyResult check_additivity(int kbs);
/// Every derived degree lies in {0, 1} ∪ D ∪ {1 - d : d ∈ D}, D the input degrees.
PropertyResult check_degree_closure(int kbs);

}  // namespace fdlb::testing
