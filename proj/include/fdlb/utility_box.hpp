#pragma once

#include <string>
#include <vector>

#include "fdlb/decimal.hpp"

namespace fdlb {

struct WeightedAttribute {
  std::string attribute;  // atomic concept name
  Decimal weight;         // >= 0

  friend bool operator==(const WeightedAttribute&, const WeightedAttribute&) = default;
};

/// One expert's weights over attribute concepts. Entries keep file order;
/// attribute names are unique.
struct UtilityBox {
  std::string expert;
  std::vector<WeightedAttribute> entries;

  const WeightedAttribute* find(const std::string& attribute) const {
    for (const auto& e : entries)
      if (e.attribute == attribute) return &e;
    return nullptr;
  }
  std::size_t size() const { return entries.size(); }

  friend bool operator==(const UtilityBox&, const UtilityBox&) = default;
};

}  // namespace fdlb
