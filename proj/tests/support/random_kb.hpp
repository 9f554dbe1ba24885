#pragma once

#include <cstdint>
#include <string>

namespace fdlb::testing {

struct RandomKbShape {
  int max_individuals = 8;
  int max_axioms = 12;
  int max_assertions = 10;
  bool crisp = false;  // every degree is 1
};

/// A random, well-formed knowledge base in the text format. Signature:
/// atoms A0..A4, closed abstract role r, open abstract role s, concrete role
/// p over unit u; individuals i0..i7.
std::string random_kb_text(std::uint32_t seed, const RandomKbShape& shape = {});

/// A random utility box over A0..A4.
std::string random_ubox_text(std::uint32_t seed);

}  // namespace fdlb::testing
