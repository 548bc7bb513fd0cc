// Sparse multivariate polynomials with exact rational coefficients.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bbd/term.hpp"
#include "bbd/term_set.hpp"

namespace bbd {

using Rational = mpq_class;

/// Finite map Term -> nonzero Rational, stored as a lex-sorted entry list.
/// The zero polynomial has no entries (and reports n_vars() == 0).
class Polynomial {
 public:
  using Entry = std::pair<Term, Rational>;

  Polynomial() = default;

  /// Sums duplicate terms and drops zero coefficients.
  static Polynomial from_entries(std::vector<Entry> entries);
  static Polynomial monomial(Term t, Rational c = 1);
  /// Takes entries that are already strictly lex-sorted with nonzero,
  /// canonical coefficients. Not checked.
  static Polynomial from_canonical(std::vector<Entry> entries);

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::size_t n_vars() const { return entries_.empty() ? 0 : entries_.front().first.n_vars(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool contains(const Term& t) const;
  Rational coefficient_of(const Term& t) const;

  bool operator==(const Polynomial& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Entry> entries_;  // sorted by term, coefficients nonzero
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& f) const noexcept;
};

TermSet support(const Polynomial& f);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial subtract(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Rational& c);
Polynomial term_mul(const Polynomial& f, const Term& t);

/// f scaled so the coefficient of b is 1; throws std::invalid_argument if b
/// is not in the support of f.
Polynomial normalize_at(const Polynomial& f, const Term& b);

/// Rational value of f at a point (one rational per indeterminate).
Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

std::string to_string(const Polynomial& f, const Ring& ring);

/// An ordered list of nonzero polynomials over one ring. Order matters:
/// border selections index into it.
class PolySystem {
 public:
  PolySystem(Ring ring, std::vector<Polynomial> polys);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
  std::size_t size() const { return polys_.size(); }
  std::size_t n_vars() const { return ring_.size(); }

 private:
  Ring ring_;
  std::vector<Polynomial> polys_;
};

TermSet system_support(const PolySystem& F);

}  // namespace bbd
