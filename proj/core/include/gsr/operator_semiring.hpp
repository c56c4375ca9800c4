#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gsr/gamma_semiring.hpp"

namespace gsr {

/// The function S -> S induced by a formal sum; the canonical representative
/// of its congruence class. Two formal sums are congruent exactly when their
/// action tables are equal, so class equality is a vector comparison.
struct ActionTable {
  std::vector<int> image;

  friend bool operator==(const ActionTable&, const ActionTable&) = default;
  friend auto operator<=>(const ActionTable&, const ActionTable&) = default;
};

/// A finite semiring of action tables: the left or right operator semiring
/// of a Gamma-semiring. `elements` lists the canonical class representatives
/// in closure discovery order; `witnesses[i]` is the first formal sum found
/// that evaluates to `elements[i]`.
///
/// Addition of classes is the pointwise add_s of actions. Multiplication is
/// composition: f.g acts as a -> f(g(a)) on the left side and as
/// a -> g(f(a)) on the right side (forced by the class product rules).
struct FiniteSemiring {
  Side side = Side::left;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  std::vector<ActionTable> elements;
  std::vector<FormalSum> witnesses;
  std::map<std::vector<int>, int> index;  // action image -> element position

  int size() const { return static_cast<int>(elements.size()); }
  std::optional<int> index_of(const ActionTable& t) const;
};

struct UnityWitness {
  FormalSum formal_sum;
  int element = 0;  // index into the operator semiring
};

/// Closure element cap; |L| is bounded by s_size^s_size but intermediate
/// growth should fail loudly rather than hang.
inline constexpr std::size_t kDefaultElementCap = 100000;

/// Number of formal-sum multisets the brute-force oracle may enumerate.
inline constexpr std::size_t kDefaultBruteForceCap = 1000000;

/// Worklist fixed point over the generator actions { [x,alpha] : x, alpha },
/// closed under pointwise sums and composition. Deterministic: generators
/// seed in lexicographic pair order and each sweep combines the elements
/// known at sweep start, sums before products.
FiniteSemiring build_left_operator_semiring(const GammaSemiring& g,
                                            std::size_t element_cap = kDefaultElementCap);
FiniteSemiring build_right_operator_semiring(const GammaSemiring& g,
                                             std::size_t element_cap = kDefaultElementCap);

/// Maps a formal sum to its class representative by evaluating its action.
ActionTable canonical_class(const GammaSemiring& g, const FormalSum& f);

/// The unity, when present, is the element whose action is the identity
/// function on S.
std::optional<UnityWitness> find_left_unity(const GammaSemiring& g, const FiniteSemiring& l);
std::optional<UnityWitness> find_right_unity(const GammaSemiring& g, const FiniteSemiring& r);

/// True iff the unity element is a two-sided multiplicative identity.
bool verify_unity_is_identity(const FiniteSemiring& sr, const UnityWitness& unity);

/// Independent oracle: enumerates every formal-sum multiset with at most
/// max_len generator terms, maps each through canonical_class and returns
/// the distinct action tables, sorted.
std::vector<ActionTable> brute_force_operator_semiring(
    const GammaSemiring& g, Side side, int max_len,
    std::size_t cap = kDefaultBruteForceCap);

/// Exhaustive semiring-law check (commutative/associative addition,
/// associative multiplication, two-sided distributivity). Returns true when
/// every law holds; used by tests and by debug assertions.
bool semiring_laws_hold(const FiniteSemiring& sr);

}  // namespace gsr
