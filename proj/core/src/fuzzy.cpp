#include "gsr/fuzzy.hpp"

#include <stdexcept>

#include "gsr/errors.hpp"

namespace gsr {

std::string_view carrier_name(CarrierTag tag) {
  switch (tag) {
    case CarrierTag::S: return "S";
    case CarrierTag::L: return "L";
    case CarrierTag::R: return "R";
  }
  return "?";
}

std::optional<CarrierTag> parse_carrier(std::string_view name) {
  if (name == "S") return CarrierTag::S;
  if (name == "L") return CarrierTag::L;
  if (name == "R") return CarrierTag::R;
  return std::nullopt;
}

FuzzySubset make_fuzzy_subset(CarrierTag tag, std::vector<Rational> values) {
  for (const auto& v : values)
    if (!v.in_unit_interval())
      throw std::invalid_argument("membership value " + v.to_string() +
                                  " outside [0,1]");
  return FuzzySubset{tag, std::move(values)};
}

std::vector<Rational> membership_chain(int k) {
  if (k < 1) throw std::invalid_argument("membership chain needs k >= 1");
  std::vector<Rational> chain;
  chain.reserve(k + 1);
  for (int i = 0; i <= k; ++i) chain.emplace_back(i, k);
  return chain;
}

std::string_view ideal_kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::left: return "left";
    case IdealKind::right: return "right";
    case IdealKind::two_sided: return "two_sided";
    case IdealKind::k_left: return "k_left";
    case IdealKind::k_right: return "k_right";
    case IdealKind::k_two_sided: return "k_two_sided";
    case IdealKind::h_left: return "h_left";
    case IdealKind::h_right: return "h_right";
    case IdealKind::h_two_sided: return "h_two_sided";
  }
  return "?";
}

std::optional<IdealKind> parse_ideal_kind(std::string_view name) {
  std::string canon(name);
  for (auto& c : canon)
    if (c == '-') c = '_';
  for (const IdealKind kind : kAllIdealKinds)
    if (canon == ideal_kind_name(kind)) return kind;
  return std::nullopt;
}

std::string IdealViolation::format_where() const {
  std::string out;
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (i > 0) out += ' ';
    out += where[i].first;
    out += '=';
    out += std::to_string(where[i].second);
  }
  return out;
}

namespace {

bool needs_left(IdealKind k) {
  return k == IdealKind::left || k == IdealKind::two_sided || k == IdealKind::k_left ||
         k == IdealKind::k_two_sided || k == IdealKind::h_left ||
         k == IdealKind::h_two_sided;
}

bool needs_right(IdealKind k) {
  return k == IdealKind::right || k == IdealKind::two_sided || k == IdealKind::k_right ||
         k == IdealKind::k_two_sided || k == IdealKind::h_right ||
         k == IdealKind::h_two_sided;
}

bool needs_k(IdealKind k) {
  return k == IdealKind::k_left || k == IdealKind::k_right || k == IdealKind::k_two_sided;
}

bool needs_h(IdealKind k) {
  return k == IdealKind::h_left || k == IdealKind::h_right || k == IdealKind::h_two_sided;
}

CheckResult fail(std::string condition, std::vector<std::pair<std::string, int>> where,
                 Rational lhs, Rational rhs) {
  return CheckResult{false, IdealViolation{std::move(condition), std::move(where), lhs, rhs}};
}

// Shared skeleton over any table algebra. `Add` maps (a,b) to an element;
// products are walked by the callers because the Gamma-semiring product is
// ternary while the operator-semiring product is binary.
template <typename Add, typename Values>
CheckResult check_additivity(int n, Add&& add, const Values& v) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rational bound = rational_min(v[a], v[b]);
      if (v[add(a, b)] < bound)
        return fail("additivity", {{"a", a}, {"b", b}}, v[add(a, b)], bound);
    }
  return {};
}

template <typename Add, typename Values>
CheckResult check_k_condition(int n, Add&& add, const Values& v) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Rational bound = rational_min(v[add(x, y)], v[y]);
      if (v[x] < bound)
        return fail("k-condition", {{"x", x}, {"y", y}}, v[x], bound);
    }
  return {};
}

// x + y1 + z = y2 + z  implies  v(x) >= min(v(y1), v(y2)); witness order
// (x, z, y1, y2).
template <typename Add, typename Values>
CheckResult check_h_condition(int n, Add&& add, const Values& v) {
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z)
      for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2) {
          if (add(add(x, y1), z) != add(y2, z)) continue;
          const Rational bound = rational_min(v[y1], v[y2]);
          if (v[x] < bound)
            return fail("h-condition", {{"x", x}, {"z", z}, {"y1", y1}, {"y2", y2}},
                        v[x], bound);
        }
  return {};
}

}  // namespace

CheckResult check_gamma_ideal(const GammaSemiring& g, const FuzzySubset& sigma,
                              IdealKind kind) {
  if (sigma.tag != CarrierTag::S || sigma.size() != g.s_size)
    throw CarrierMismatch("fuzzy subset does not live on this S");

  const auto& v = sigma.values;
  auto add = [&](int a, int b) { return g.add_s[a][b]; };

  if (auto r = check_additivity(g.s_size, add, v); !r.ok) return r;
  if (needs_left(kind)) {
    for (int a = 0; a < g.s_size; ++a)
      for (int alpha = 0; alpha < g.g_size; ++alpha)
        for (int b = 0; b < g.s_size; ++b)
          if (v[g.prod[a][alpha][b]] < v[b])
            return fail("left-absorption", {{"a", a}, {"alpha", alpha}, {"b", b}},
                        v[g.prod[a][alpha][b]], v[b]);
  }
  if (needs_right(kind)) {
    for (int a = 0; a < g.s_size; ++a)
      for (int alpha = 0; alpha < g.g_size; ++alpha)
        for (int b = 0; b < g.s_size; ++b)
          if (v[g.prod[a][alpha][b]] < v[a])
            return fail("right-absorption", {{"a", a}, {"alpha", alpha}, {"b", b}},
                        v[g.prod[a][alpha][b]], v[a]);
  }
  if (needs_k(kind)) {
    if (auto r = check_k_condition(g.s_size, add, v); !r.ok) return r;
  }
  if (needs_h(kind)) {
    if (auto r = check_h_condition(g.s_size, add, v); !r.ok) return r;
  }
  return {};
}

CheckResult check_semiring_ideal(const FiniteSemiring& sr, const FuzzySubset& mu,
                                 IdealKind kind) {
  const CarrierTag expected = sr.side == Side::left ? CarrierTag::L : CarrierTag::R;
  if (mu.tag != expected || mu.size() != sr.size())
    throw CarrierMismatch("fuzzy subset does not live on this operator semiring");

  const auto& v = mu.values;
  auto add = [&](int a, int b) { return sr.add[a][b]; };

  if (auto r = check_additivity(sr.size(), add, v); !r.ok) return r;
  if (needs_left(kind)) {
    for (int a = 0; a < sr.size(); ++a)
      for (int b = 0; b < sr.size(); ++b)
        if (v[sr.mul[a][b]] < v[b])
          return fail("left-absorption", {{"a", a}, {"b", b}}, v[sr.mul[a][b]], v[b]);
  }
  if (needs_right(kind)) {
    for (int a = 0; a < sr.size(); ++a)
      for (int b = 0; b < sr.size(); ++b)
        if (v[sr.mul[a][b]] < v[a])
          return fail("right-absorption", {{"a", a}, {"b", b}}, v[sr.mul[a][b]], v[a]);
  }
  if (needs_k(kind)) {
    if (auto r = check_k_condition(sr.size(), add, v); !r.ok) return r;
  }
  if (needs_h(kind)) {
    if (auto r = check_h_condition(sr.size(), add, v); !r.ok) return r;
  }
  return {};
}

bool pointwise_leq(const FuzzySubset& a, const FuzzySubset& b) {
  if (a.tag != b.tag || a.size() != b.size())
    throw CarrierMismatch("pointwise comparison across different carriers");
  for (int i = 0; i < a.size(); ++i)
    if (b.values[i] < a.values[i]) return false;
  return true;
}

}  // namespace gsr
