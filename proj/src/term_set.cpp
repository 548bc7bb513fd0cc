#include "bbd/term_set.hpp"

#include <algorithm>

namespace bbd {

TermSet::TermSet(std::initializer_list<Term> terms) {
  for (const auto& t : terms) insert(t);
}

TermSet::TermSet(const std::vector<Term>& terms) {
  terms_.reserve(terms.size());
  for (const auto& t : terms) insert(t);
}

bool TermSet::insert(const Term& t) {
  if (terms_.empty()) {
    n_vars_ = t.n_vars();
  } else if (t.n_vars() != n_vars_) {
    throw RingMismatch("term set mixes rings of different size");
  }
  return terms_.insert(t).second;
}

bool TermSet::erase(const Term& t) {
  const bool removed = terms_.erase(t) > 0;
  if (terms_.empty()) n_vars_ = 0;
  return removed;
}

std::vector<Term> TermSet::sorted() const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subset(const TermSet& a, const TermSet& b) {
  if (a.size() > b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Term& t) { return b.contains(t); });
}

}  // namespace bbd
