#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gsr {

/// Exact rational number, kept in lowest terms with a positive denominator.
///
/// Membership values of fuzzy subsets are rationals in [0,1]; every
/// comparison in the library is exact (128-bit cross multiplication), so
/// round-trip identities can be asserted with equality rather than
/// tolerances.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);  // throws std::invalid_argument on den == 0

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool in_unit_interval() const { return num_ >= 0 && num_ <= den_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  /// Accepts "p" or "p/q" with an optional leading '-'. Returns nullopt on
  /// malformed input, a zero denominator, or components beyond 18 digits.
  static std::optional<Rational> parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline const Rational& rational_min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

}  // namespace gsr
