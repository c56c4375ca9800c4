#include "gsr/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gsr {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  if (text.empty() || text.size() > 19) return std::nullopt;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto num = parse_int(text);
    if (!num) return std::nullopt;
    return Rational(*num, 1);
  }
  const auto num = parse_int(text.substr(0, slash));
  const auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace gsr
