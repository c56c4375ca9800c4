#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsr/gamma_semiring.hpp"
#include "gsr/operator_semiring.hpp"
#include "gsr/rational.hpp"

namespace gsr {

/// Which carrier a fuzzy subset lives on.
enum class CarrierTag { S, L, R };

std::string_view carrier_name(CarrierTag tag);
std::optional<CarrierTag> parse_carrier(std::string_view name);

/// A map from a finite carrier to exact rationals in [0,1].
struct FuzzySubset {
  CarrierTag tag = CarrierTag::S;
  std::vector<Rational> values;

  int size() const { return static_cast<int>(values.size()); }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;
  friend auto operator<=>(const FuzzySubset&, const FuzzySubset&) = default;
};

/// Validates that every value lies in [0,1].
FuzzySubset make_fuzzy_subset(CarrierTag tag, std::vector<Rational> values);

/// The membership chain C_k = {0, 1/k, ..., 1}, ascending.
std::vector<Rational> membership_chain(int k);

/// The nine ideal predicates. k_* and h_* include their base kind: the
/// two-sided variants require a fuzzy (two-sided) ideal, the one-sided
/// variants only the matching one-sided ideal.
enum class IdealKind {
  left,
  right,
  two_sided,
  k_left,
  k_right,
  k_two_sided,
  h_left,
  h_right,
  h_two_sided,
};

inline constexpr IdealKind kAllIdealKinds[] = {
    IdealKind::left,   IdealKind::right,   IdealKind::two_sided,
    IdealKind::k_left, IdealKind::k_right, IdealKind::k_two_sided,
    IdealKind::h_left, IdealKind::h_right, IdealKind::h_two_sided,
};

std::string_view ideal_kind_name(IdealKind kind);

/// Accepts the canonical names with '-' or '_' separators.
std::optional<IdealKind> parse_ideal_kind(std::string_view name);

/// First violated inequality, with the lexicographically smallest witness
/// tuple of the first failing condition. Conditions are checked in the
/// order: additivity, left absorption, right absorption, k, h.
struct IdealViolation {
  std::string condition;  // "additivity" | "left-absorption" | "right-absorption"
                          // | "k-condition" | "h-condition"
  std::vector<std::pair<std::string, int>> where;
  Rational lhs;  // the side that must dominate, found smaller
  Rational rhs;

  /// "a=0 alpha=0 b=1"
  std::string format_where() const;
};

struct CheckResult {
  bool ok = true;
  std::optional<IdealViolation> violation;
};

/// Exhaustive predicate over a Gamma-semiring carrier S.
CheckResult check_gamma_ideal(const GammaSemiring& g, const FuzzySubset& sigma,
                              IdealKind kind);

/// Exhaustive predicate over an operator semiring's elements.
CheckResult check_semiring_ideal(const FiniteSemiring& sr, const FuzzySubset& mu,
                                 IdealKind kind);

/// a(x) <= b(x) for every carrier element; throws CarrierMismatch when the
/// subsets live on different carriers.
bool pointwise_leq(const FuzzySubset& a, const FuzzySubset& b);

}  // namespace gsr
