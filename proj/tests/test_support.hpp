// Small builders shared by the unit tests.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bbd/border_basis.hpp"
#include "bbd/polynomial.hpp"
#include "bbd/term.hpp"
#include "bbd/term_set.hpp"

namespace bbd::testing {

inline Term T(std::initializer_list<Exponent> e) { return Term(e); }

inline TermSet S(std::initializer_list<Term> ts) { return TermSet(ts); }

/// Polynomial from (coefficient, exponents) pairs; coefficients given as
/// "p/q" strings or integers.
inline Polynomial P(std::initializer_list<std::pair<Rational, Term>> entries) {
  std::vector<Polynomial::Entry> v;
  for (const auto& [c, t] : entries) v.emplace_back(t, c);
  return Polynomial::from_entries(std::move(v));
}

inline Rational Q(const char* s) { return Rational(s); }

inline Ring xy() { return Ring({"x", "y"}); }

/// Random subset of `universe`, each element kept with probability p.
inline TermSet random_subset(const std::vector<Term>& universe, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  TermSet s;
  for (const auto& t : universe) {
    if (keep(rng)) s.insert(t);
  }
  return s;
}

/// Random order ideal in T_{<=d}: the divisor closure of a few random terms.
inline TermSet random_order_ideal(std::size_t n_vars, std::uint64_t d, std::mt19937_64& rng) {
  const auto universe = terms_up_to_degree(n_vars, d);
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  TermSet O;
  O.insert(Term::one(n_vars));
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const Term& g = universe[pick(rng)];
    for (const auto& t : universe) {
      if (divides(t, g)) O.insert(t);
    }
  }
  return O;
}

inline std::vector<Term> sorted_vec(const TermSet& s) { return s.sorted(); }

}  // namespace bbd::testing
