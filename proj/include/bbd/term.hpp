// Monomial terms over a fixed, finite set of indeterminates.
//
// A Term is just an exponent vector; it carries no reference to its ring.
// Ring consistency is enforced by the containers (PolySystem, TermSet) and by
// the binary operations, which reject operands of different lengths.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bbd {

using Exponent = std::uint32_t;
using ExponentVector = boost::container::small_vector<Exponent, 16>;

/// Raised when two objects built over rings of different size are combined.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The set of indeterminates of a polynomial ring, identified by name.
class Ring {
 public:
  explicit Ring(std::vector<std::string> var_names);

  /// x1, x2, ..., xN.
  static Ring with_default_names(std::size_t n_vars);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Ring&) const = default;

 private:
  std::vector<std::string> names_;
};

class Term {
 public:
  Term() = default;
  explicit Term(ExponentVector exponents) : exps_(std::move(exponents)) {}
  Term(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  /// The term 1 in a ring with `n_vars` indeterminates.
  static Term one(std::size_t n_vars);
  /// The indeterminate x_i (0-based).
  static Term variable(std::size_t n_vars, std::size_t i);

  std::size_t n_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const ExponentVector& exponents() const { return exps_; }

  bool is_one() const;

  /// t * x_i. Throws std::overflow_error past the 32-bit exponent bound.
  Term times_var(std::size_t i) const;
  /// t / x_i. Throws std::domain_error if x_i does not divide t.
  Term over_var(std::size_t i) const;

  // Lexicographic on exponent vectors; the canonical order everywhere.
  std::strong_ordering operator<=>(const Term& other) const;
  bool operator==(const Term& other) const { return exps_ == other.exps_; }

 private:
  ExponentVector exps_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

std::uint64_t total_degree(const Term& t);

/// Number of indeterminates dividing t, I(t).
std::size_t indeterminate_count(const Term& t);

/// Componentwise a <= b.
bool divides(const Term& a, const Term& b);

Term mul(const Term& a, const Term& b);

/// a / b; throws std::domain_error unless b divides a.
Term div(const Term& a, const Term& b);

/// { t / x_i : x_i divides t }, in increasing variable index.
std::vector<Term> children(const Term& t);

/// { t * x_i : 1 <= i <= N }; always exactly N terms.
std::vector<Term> parents(const Term& t);

/// Number of terms of total degree d in n_vars indeterminates, C(n+d-1, d).
/// Saturates at UINT64_MAX.
std::uint64_t count_terms_of_degree(std::size_t n_vars, std::uint64_t d);

/// Lazy, lexicographically ascending range over all terms of total degree d.
class TermsOfDegree {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Term;
    using difference_type = std::ptrdiff_t;
    using pointer = const Term*;
    using reference = const Term&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || current_ == other.current_); }

   private:
    friend class TermsOfDegree;
    Term current_;
    bool done_ = true;
  };

  TermsOfDegree(std::size_t n_vars, std::uint64_t degree);

  iterator begin() const;
  iterator end() const { return iterator{}; }

 private:
  std::size_t n_vars_;
  std::uint64_t degree_;
};

TermsOfDegree terms_of_degree(const Ring& ring, std::uint64_t d);

/// Human-readable form such as "x1^2*x3"; the unit term prints as "1".
std::string to_string(const Term& t, const Ring& ring);

}  // namespace bbd
