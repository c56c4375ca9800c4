#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsr/formal_sum.hpp"

namespace gsr {

/// A finite Gamma-semiring given by Cayley tables.
///
/// S and Gamma are commutative additive semigroups on the index sets
/// 0..s_size-1 and 0..g_size-1; `prod[a][alpha][b]` is the ternary product.
/// Neither semigroup is required to contain an additive identity. All
/// operations on validated structures are plain table lookups.
struct GammaSemiring {
  int s_size = 0;
  int g_size = 0;
  std::vector<std::vector<int>> add_s;               // s_size x s_size
  std::vector<std::vector<int>> add_g;               // g_size x g_size
  std::vector<std::vector<std::vector<int>>> prod;   // [a][alpha][b]
  std::string name;                                  // optional label, may be empty

  int add(int a, int b) const { return add_s[a][b]; }
  int gamma_add(int alpha, int beta) const { return add_g[alpha][beta]; }

  friend bool operator==(const GammaSemiring&, const GammaSemiring&) = default;
};

/// The eight equation families checked exhaustively by the validator.
enum class AxiomId {
  add_s_commutative,
  add_s_associative,
  add_g_commutative,
  add_g_associative,
  axiom1,  // a alpha (b+c) = a alpha b + a alpha c
  axiom2,  // (a+b) alpha c = a alpha c + b alpha c
  axiom3,  // a (alpha+beta) c = a alpha c + a beta c
  axiom4,  // a alpha (b beta c) = (a alpha b) beta c
};

std::string_view axiom_name(AxiomId id);

/// Variable names of an axiom's witness tuple, in the order stored.
std::vector<std::string_view> axiom_witness_names(AxiomId id);

struct AxiomViolation {
  AxiomId axiom;
  std::vector<int> witness;  // element indices, loop order as documented above

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct ValidationReport {
  bool ok = false;
  std::vector<AxiomViolation> violations;  // one entry per violated family,
                                           // carrying its lexicographically
                                           // smallest witness
};

/// Rejects malformed tables (wrong dimensions, out-of-range entries) with
/// std::invalid_argument; axiom failures are report data, never errors.
ValidationReport validate_gamma_semiring(const GammaSemiring& g);

/// Table lookup for a alpha b.
int ternary_product(const GammaSemiring& g, int a, int alpha, int b);

/// Evaluates the action of a formal sum at a: sum_i x_i alpha_i a on the
/// left side, sum_i a alpha_i x_i on the right side. The result does not
/// depend on term order because add_s is commutative.
int sum_of_products(const GammaSemiring& g, const FormalSum& terms, int a);

}  // namespace gsr
