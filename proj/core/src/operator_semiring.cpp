#include "gsr/operator_semiring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gsr/errors.hpp"

namespace gsr {

namespace {

ActionTable pair_action(const GammaSemiring& g, Side side, std::pair<int, int> term) {
  ActionTable t;
  t.image.resize(g.s_size);
  for (int a = 0; a < g.s_size; ++a)
    t.image[a] = side == Side::left ? g.prod[term.first][term.second][a]
                                    : g.prod[a][term.first][term.second];
  return t;
}

ActionTable pointwise_add(const GammaSemiring& g, const ActionTable& x, const ActionTable& y) {
  ActionTable t;
  t.image.resize(g.s_size);
  for (int a = 0; a < g.s_size; ++a) t.image[a] = g.add_s[x.image[a]][y.image[a]];
  return t;
}

ActionTable compose(const ActionTable& outer, const ActionTable& inner) {
  ActionTable t;
  t.image.resize(inner.image.size());
  for (std::size_t a = 0; a < inner.image.size(); ++a)
    t.image[a] = outer.image[inner.image[a]];
  return t;
}

FormalSum sum_witness(const FormalSum& x, const FormalSum& y) {
  std::vector<std::pair<int, int>> terms;
  terms.reserve(x.terms.size() + y.terms.size());
  std::merge(x.terms.begin(), x.terms.end(), y.terms.begin(), y.terms.end(),
             std::back_inserter(terms));
  return FormalSum{x.side, std::move(terms)};
}

// Class product expansion: [x,alpha].[y,beta] = [x alpha y, beta] on the
// left side, [alpha,x].[beta,y] = [alpha, x beta y] on the right side.
FormalSum product_witness(const GammaSemiring& g, const FormalSum& x, const FormalSum& y) {
  std::vector<std::pair<int, int>> terms;
  terms.reserve(x.terms.size() * y.terms.size());
  for (const auto& [p, q] : x.terms)
    for (const auto& [u, v] : y.terms) {
      if (x.side == Side::left)
        terms.emplace_back(g.prod[p][q][u], v);
      else
        terms.emplace_back(p, g.prod[q][u][v]);
    }
  return make_formal_sum(x.side, std::move(terms));
}

FiniteSemiring build_operator_semiring(const GammaSemiring& g, Side side,
                                       std::size_t element_cap) {
  FiniteSemiring sr;
  sr.side = side;

  auto insert = [&](ActionTable table, FormalSum witness) -> bool {
    if (sr.index.contains(table.image)) return false;
    if (sr.elements.size() >= element_cap)
      throw CapExceeded("operator semiring closure exceeded the element cap of " +
                        std::to_string(element_cap));
    sr.index.emplace(table.image, sr.size());
    sr.elements.push_back(std::move(table));
    sr.witnesses.push_back(std::move(witness));
    return true;
  };

  if (side == Side::left) {
    for (int x = 0; x < g.s_size; ++x)
      for (int alpha = 0; alpha < g.g_size; ++alpha)
        insert(pair_action(g, side, {x, alpha}),
               FormalSum{side, {{x, alpha}}});
  } else {
    for (int alpha = 0; alpha < g.g_size; ++alpha)
      for (int x = 0; x < g.s_size; ++x)
        insert(pair_action(g, side, {alpha, x}),
               FormalSum{side, {{alpha, x}}});
  }

  bool grew = true;
  while (grew) {
    grew = false;
    const int n = sr.size();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ActionTable t = pointwise_add(g, sr.elements[i], sr.elements[j]);
        FormalSum w = sum_witness(sr.witnesses[i], sr.witnesses[j]);
        if (insert(std::move(t), std::move(w))) grew = true;
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ActionTable t = side == Side::left
                            ? compose(sr.elements[i], sr.elements[j])
                            : compose(sr.elements[j], sr.elements[i]);
        FormalSum w = product_witness(g, sr.witnesses[i], sr.witnesses[j]);
        if (insert(std::move(t), std::move(w))) grew = true;
      }
  }

  const int n = sr.size();
  sr.add.assign(n, std::vector<int>(n, 0));
  sr.mul.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto sum = sr.index_of(pointwise_add(g, sr.elements[i], sr.elements[j]));
      const auto prod = sr.index_of(side == Side::left
                                        ? compose(sr.elements[i], sr.elements[j])
                                        : compose(sr.elements[j], sr.elements[i]));
      if (!sum || !prod)
        throw std::logic_error("operator semiring closure is not closed");
      sr.add[i][j] = *sum;
      sr.mul[i][j] = *prod;
    }
  return sr;
}

}  // namespace

std::optional<int> FiniteSemiring::index_of(const ActionTable& t) const {
  const auto it = index.find(t.image);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

FiniteSemiring build_left_operator_semiring(const GammaSemiring& g, std::size_t element_cap) {
  return build_operator_semiring(g, Side::left, element_cap);
}

FiniteSemiring build_right_operator_semiring(const GammaSemiring& g, std::size_t element_cap) {
  return build_operator_semiring(g, Side::right, element_cap);
}

ActionTable canonical_class(const GammaSemiring& g, const FormalSum& f) {
  ActionTable t;
  t.image.resize(g.s_size);
  for (int a = 0; a < g.s_size; ++a) t.image[a] = sum_of_products(g, f, a);
  return t;
}

namespace {

std::optional<UnityWitness> find_unity(const FiniteSemiring& sr) {
  ActionTable identity;
  identity.image.resize(sr.elements.empty() ? 0 : sr.elements.front().image.size());
  for (std::size_t a = 0; a < identity.image.size(); ++a)
    identity.image[a] = static_cast<int>(a);
  const auto idx = sr.index_of(identity);
  if (!idx) return std::nullopt;
  return UnityWitness{sr.witnesses[*idx], *idx};
}

}  // namespace

std::optional<UnityWitness> find_left_unity(const GammaSemiring& g, const FiniteSemiring& l) {
  if (l.side != Side::left) throw std::invalid_argument("expected a left operator semiring");
  if (!l.elements.empty() &&
      static_cast<int>(l.elements.front().image.size()) != g.s_size)
    throw std::invalid_argument("operator semiring was not built from this structure");
  return find_unity(l);
}

std::optional<UnityWitness> find_right_unity(const GammaSemiring& g, const FiniteSemiring& r) {
  if (r.side != Side::right) throw std::invalid_argument("expected a right operator semiring");
  if (!r.elements.empty() &&
      static_cast<int>(r.elements.front().image.size()) != g.s_size)
    throw std::invalid_argument("operator semiring was not built from this structure");
  return find_unity(r);
}

bool verify_unity_is_identity(const FiniteSemiring& sr, const UnityWitness& unity) {
  const int e = unity.element;
  if (e < 0 || e >= sr.size()) throw std::invalid_argument("unity element out of range");
  for (int j = 0; j < sr.size(); ++j)
    if (sr.mul[e][j] != j || sr.mul[j][e] != j) return false;
  return true;
}

std::vector<ActionTable> brute_force_operator_semiring(const GammaSemiring& g, Side side,
                                                       int max_len, std::size_t cap) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");

  std::vector<std::pair<int, int>> generators;
  if (side == Side::left) {
    for (int x = 0; x < g.s_size; ++x)
      for (int alpha = 0; alpha < g.g_size; ++alpha) generators.emplace_back(x, alpha);
  } else {
    for (int alpha = 0; alpha < g.g_size; ++alpha)
      for (int x = 0; x < g.s_size; ++x) generators.emplace_back(alpha, x);
  }

  std::set<std::vector<int>> seen;
  std::vector<std::pair<int, int>> chosen;
  std::size_t emitted = 0;

  // Multisets as nondecreasing generator-index sequences; every nonempty
  // prefix along the recursion is one multiset.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty()) {
      if (++emitted > cap)
        throw CapExceeded("brute-force oracle exceeded the multiset cap of " +
                          std::to_string(cap));
      seen.insert(canonical_class(g, FormalSum{side, chosen}).image);
    }
    if (chosen.size() >= static_cast<std::size_t>(max_len)) return;
    for (std::size_t k = start; k < generators.size(); ++k) {
      chosen.push_back(generators[k]);
      self(self, k);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);

  std::vector<ActionTable> out;
  out.reserve(seen.size());
  for (const auto& image : seen) out.push_back(ActionTable{image});
  return out;
}

bool semiring_laws_hold(const FiniteSemiring& sr) {
  const int n = sr.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (sr.add[a][b] != sr.add[b][a]) return false;
      for (int c = 0; c < n; ++c) {
        if (sr.add[sr.add[a][b]][c] != sr.add[a][sr.add[b][c]]) return false;
        if (sr.mul[sr.mul[a][b]][c] != sr.mul[a][sr.mul[b][c]]) return false;
        if (sr.mul[a][sr.add[b][c]] != sr.add[sr.mul[a][b]][sr.mul[a][c]]) return false;
        if (sr.mul[sr.add[a][b]][c] != sr.add[sr.mul[a][c]][sr.mul[b][c]]) return false;
      }
    }
  return true;
}

}  // namespace gsr
