#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fdlb {

/// Exact terminating decimal: digits / 10^scale.
///
/// Every degree, weight and quantity in the system is a Decimal, so sums like
/// 0.5 * 50 + 40 + 0.6 * 40 come out as exactly 89. Values are kept in a
/// canonical form (no trailing zeros in the fraction), which makes equality
/// structural and rendering unique.
class Decimal {
 public:
  Decimal() = default;
  Decimal(std::int64_t integer);  // NOLINT(google-explicit-constructor)

  /// Accepts `-?[0-9]+(\.[0-9]+)?`. Returns nullopt on anything else.
  static std::optional<Decimal> parse(std::string_view text);

  /// Canonical rendering: no exponent, no trailing zeros, "-" only for
  /// negative values, e.g. "0.5", "89", "-3.25".
  std::string str() const;

  bool is_negative() const { return digits_ < 0; }
  bool is_zero() const { return digits_ == 0; }

  friend Decimal operator+(const Decimal& a, const Decimal& b);
  friend Decimal operator-(const Decimal& a, const Decimal& b);
  friend Decimal operator*(const Decimal& a, const Decimal& b);
  Decimal operator-() const;
  Decimal& operator+=(const Decimal& o) { return *this = *this + o; }

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.scale_ == b.scale_ && a.digits_ == b.digits_;
  }
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

 private:
  using BigInt = boost::multiprecision::cpp_int;
  Decimal(BigInt digits, int scale);
  void canonicalize();

  BigInt digits_ = 0;
  int scale_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Decimal& d) { return os << d.str(); }

}  // namespace fdlb
