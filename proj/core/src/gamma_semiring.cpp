#include "gsr/gamma_semiring.hpp"

#include <stdexcept>

namespace gsr {

namespace {

void check_square(const std::vector<std::vector<int>>& table, int n, int range,
                  const char* what) {
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument(std::string(what) + ": wrong row count");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument(std::string(what) + ": wrong row length");
    for (int v : row)
      if (v < 0 || v >= range)
        throw std::invalid_argument(std::string(what) + ": entry out of range");
  }
}

void check_shape(const GammaSemiring& g) {
  if (g.s_size < 1 || g.g_size < 1)
    throw std::invalid_argument("carrier sizes must be positive");
  check_square(g.add_s, g.s_size, g.s_size, "addS");
  check_square(g.add_g, g.g_size, g.g_size, "addGamma");
  if (static_cast<int>(g.prod.size()) != g.s_size)
    throw std::invalid_argument("prod: wrong first dimension");
  for (const auto& plane : g.prod) {
    if (static_cast<int>(plane.size()) != g.g_size)
      throw std::invalid_argument("prod: wrong gamma dimension");
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != g.s_size)
        throw std::invalid_argument("prod: wrong row length");
      for (int v : row)
        if (v < 0 || v >= g.s_size)
          throw std::invalid_argument("prod: entry out of range");
    }
  }
}

}  // namespace

std::string_view axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::add_s_commutative: return "addS-commutative";
    case AxiomId::add_s_associative: return "addS-associative";
    case AxiomId::add_g_commutative: return "addGamma-commutative";
    case AxiomId::add_g_associative: return "addGamma-associative";
    case AxiomId::axiom1: return "axiom-1";
    case AxiomId::axiom2: return "axiom-2";
    case AxiomId::axiom3: return "axiom-3";
    case AxiomId::axiom4: return "axiom-4";
  }
  return "unknown";
}

std::vector<std::string_view> axiom_witness_names(AxiomId id) {
  switch (id) {
    case AxiomId::add_s_commutative: return {"a", "b"};
    case AxiomId::add_s_associative: return {"a", "b", "c"};
    case AxiomId::add_g_commutative: return {"alpha", "beta"};
    case AxiomId::add_g_associative: return {"alpha", "beta", "gamma"};
    case AxiomId::axiom1: return {"a", "alpha", "b", "c"};
    case AxiomId::axiom2: return {"a", "b", "alpha", "c"};
    case AxiomId::axiom3: return {"a", "alpha", "beta", "c"};
    case AxiomId::axiom4: return {"a", "alpha", "b", "beta", "c"};
  }
  return {};
}

ValidationReport validate_gamma_semiring(const GammaSemiring& g) {
  check_shape(g);

  ValidationReport report;
  auto record = [&](AxiomId id, std::vector<int> witness) {
    report.violations.push_back({id, std::move(witness)});
  };

  const int s = g.s_size;
  const int n = g.g_size;

  // Each family reports only its lexicographically smallest witness; the
  // loop nesting below fixes that order.
  [&] {
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        if (g.add_s[a][b] != g.add_s[b][a])
          return record(AxiomId::add_s_commutative, {a, b});
  }();
  [&] {
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        for (int c = 0; c < s; ++c)
          if (g.add_s[g.add_s[a][b]][c] != g.add_s[a][g.add_s[b][c]])
            return record(AxiomId::add_s_associative, {a, b, c});
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.add_g[a][b] != g.add_g[b][a])
          return record(AxiomId::add_g_commutative, {a, b});
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.add_g[g.add_g[a][b]][c] != g.add_g[a][g.add_g[b][c]])
            return record(AxiomId::add_g_associative, {a, b, c});
  }();
  [&] {
    for (int a = 0; a < s; ++a)
      for (int al = 0; al < n; ++al)
        for (int b = 0; b < s; ++b)
          for (int c = 0; c < s; ++c)
            if (g.prod[a][al][g.add_s[b][c]] !=
                g.add_s[g.prod[a][al][b]][g.prod[a][al][c]])
              return record(AxiomId::axiom1, {a, al, b, c});
  }();
  [&] {
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        for (int al = 0; al < n; ++al)
          for (int c = 0; c < s; ++c)
            if (g.prod[g.add_s[a][b]][al][c] !=
                g.add_s[g.prod[a][al][c]][g.prod[b][al][c]])
              return record(AxiomId::axiom2, {a, b, al, c});
  }();
  [&] {
    for (int a = 0; a < s; ++a)
      for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be)
          for (int c = 0; c < s; ++c)
            if (g.prod[a][g.add_g[al][be]][c] !=
                g.add_s[g.prod[a][al][c]][g.prod[a][be][c]])
              return record(AxiomId::axiom3, {a, al, be, c});
  }();
  [&] {
    for (int a = 0; a < s; ++a)
      for (int al = 0; al < n; ++al)
        for (int b = 0; b < s; ++b)
          for (int be = 0; be < n; ++be)
            for (int c = 0; c < s; ++c)
              if (g.prod[a][al][g.prod[b][be][c]] !=
                  g.prod[g.prod[a][al][b]][be][c])
                return record(AxiomId::axiom4, {a, al, b, be, c});
  }();

  report.ok = report.violations.empty();
  return report;
}

int ternary_product(const GammaSemiring& g, int a, int alpha, int b) {
  return g.prod.at(a).at(alpha).at(b);
}

int sum_of_products(const GammaSemiring& g, const FormalSum& terms, int a) {
  if (terms.terms.empty()) throw std::invalid_argument("formal sum must be nonempty");
  auto eval = [&](const std::pair<int, int>& t) {
    return terms.side == Side::left ? g.prod[t.first][t.second][a]
                                    : g.prod[a][t.first][t.second];
  };
  auto it = terms.terms.begin();
  int acc = eval(*it);
  for (++it; it != terms.terms.end(); ++it) acc = g.add_s[acc][eval(*it)];
  return acc;
}

}  // namespace gsr
