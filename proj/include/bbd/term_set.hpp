#pragma once

#include <cstddef>
#include <initializer_list>
#include <unordered_set>
#include <vector>

#include "bbd/term.hpp"

namespace bbd {

/// A finite set of terms from one ring with expected O(1) membership tests.
/// Iteration order is unspecified; use sorted() for anything observable.
class TermSet {
 public:
  using Storage = std::unordered_set<Term, TermHash>;
  using const_iterator = Storage::const_iterator;

  TermSet() = default;
  TermSet(std::initializer_list<Term> terms);
  explicit TermSet(const std::vector<Term>& terms);

  /// Returns false if the term was already present. Throws RingMismatch if
  /// the term's length differs from the terms already stored.
  bool insert(const Term& t);
  bool erase(const Term& t);
  bool contains(const Term& t) const { return terms_.find(t) != terms_.end(); }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Number of indeterminates of the stored terms; 0 when empty.
  std::size_t n_vars() const { return n_vars_; }

  void reserve(std::size_t n) { terms_.reserve(n); }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  /// Lexicographically ascending.
  std::vector<Term> sorted() const;

  bool operator==(const TermSet& other) const { return terms_ == other.terms_; }

 private:
  Storage terms_;
  std::size_t n_vars_ = 0;
};

bool is_subset(const TermSet& a, const TermSet& b);

}  // namespace bbd
