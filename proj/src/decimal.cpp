#include "fdlb/decimal.hpp"

#include <cctype>

namespace fdlb {

namespace {

boost::multiprecision::cpp_int pow10(int n) {
  boost::multiprecision::cpp_int r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

}  // namespace

Decimal::Decimal(std::int64_t integer) : digits_(integer), scale_(0) {}

Decimal::Decimal(BigInt digits, int scale) : digits_(std::move(digits)), scale_(scale) {
  canonicalize();
}

void Decimal::canonicalize() {
  if (digits_ == 0) {
    scale_ = 0;
    return;
  }
  while (scale_ > 0 && digits_ % 10 == 0) {
    digits_ /= 10;
    --scale_;
  }
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  BigInt digits = 0;
  int scale = 0;
  bool seen_point = false;
  bool seen_digit_after_point = false;
  std::size_t integer_digits = 0;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point || integer_digits == 0) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    digits = digits * 10 + (ch - '0');
    if (seen_point) {
      ++scale;
      seen_digit_after_point = true;
    } else {
      ++integer_digits;
    }
  }
  if (seen_point && !seen_digit_after_point) return std::nullopt;
  if (negative) digits = -digits;
  return Decimal(std::move(digits), scale);
}

std::string Decimal::str() const {
  BigInt magnitude = digits_ < 0 ? BigInt(-digits_) : digits_;
  std::string body = magnitude.str();
  if (scale_ > 0) {
    if (body.size() <= static_cast<std::size_t>(scale_)) {
      body.insert(0, static_cast<std::size_t>(scale_) - body.size() + 1, '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(scale_), 1, '.');
  }
  return digits_ < 0 ? "-" + body : body;
}

Decimal operator+(const Decimal& a, const Decimal& b) {
  int scale = std::max(a.scale_, b.scale_);
  return Decimal(a.digits_ * pow10(scale - a.scale_) + b.digits_ * pow10(scale - b.scale_), scale);
}

Decimal operator-(const Decimal& a, const Decimal& b) { return a + (-b); }

Decimal operator*(const Decimal& a, const Decimal& b) {
  return Decimal(a.digits_ * b.digits_, a.scale_ + b.scale_);
}

Decimal Decimal::operator-() const { return Decimal(BigInt(-digits_), scale_); }

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  int scale = std::max(a.scale_, b.scale_);
  Decimal::BigInt lhs = a.digits_ * pow10(scale - a.scale_);
  Decimal::BigInt rhs = b.digits_ * pow10(scale - b.scale_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace fdlb
