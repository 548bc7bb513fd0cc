// Order ideals, borders, and the three-condition test that decides whether a
// finite term set is the border of some order ideal.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbd/term.hpp"
#include "bbd/term_set.hpp"

namespace bbd {

/// True iff S is closed under taking divisors. Throws on an empty set.
bool is_order_ideal(const TermSet& S);

/// (x_1 O u ... u x_N O) \ O. Throws std::invalid_argument unless O is an
/// order ideal.
TermSet border(const TermSet& order_ideal);

/// O u border(O).
TermSet border_closure(const TermSet& order_ideal);

/// Largest total degree in S. Throws on an empty set.
std::uint64_t maxdeg(const TermSet& S);

/// One failed border condition at `term`.
///
///   condition 1: x = `divisor_var`, y = `other_var`; none of t*y, t*y/x, t/x
///                is in B.
///   condition 2: every child of t is in B.
///   condition 3: `lower` (t') is in B and divides t, `middle` (t'') is a
///                parent of t' dividing t, and t'' is not in B.
struct BorderViolation {
  int condition = 0;
  Term term;
  std::optional<std::size_t> divisor_var;
  std::optional<std::size_t> other_var;
  std::optional<Term> lower;
  std::optional<Term> middle;

  std::string describe(const Ring& ring) const;
};

struct BorderCheckReport {
  bool is_border = true;
  std::vector<BorderViolation> violations;
};

enum class CheckMode {
  kAllViolations,  // every violation, terms visited in lex order
  kFirstViolation,  // stop at the first one found
};

/// Checks the three border conditions on every term of B. is_border holds
/// iff B is the border of some order ideal.
BorderCheckReport check_border_conditions(const TermSet& B, CheckMode mode = CheckMode::kAllViolations);

/// Condition 3 via the sets S_t = { t'' : t'' | t, some t' in B divides t'' }:
/// true iff S_t is a subset of B for all t in B. A brute-force formulation
/// kept independent of check_border_conditions so the two can be compared.
bool condition3_via_st(const TermSet& B);

/// { t : t divides some b in B, t not in B }. Throws std::invalid_argument if
/// B fails the border conditions.
TermSet reconstruct_order_ideal(const TermSet& B);

/// Same set without checking the conditions first.
TermSet proper_divisors_outside(const TermSet& B);

struct EnumerationBudget {
  std::size_t max_terms = 64;  // size of T_{<=d} we are willing to branch over
  std::size_t max_ideals = 5'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Calls `visit` once for every non-empty order ideal contained in the terms
/// of degree <= max_degree. Throws BudgetExceeded past either limit.
void for_each_order_ideal(std::size_t n_vars, std::uint64_t max_degree,
                          const std::function<void(const TermSet&)>& visit, EnumerationBudget budget = {});

std::vector<TermSet> enumerate_order_ideals(std::size_t n_vars, std::uint64_t max_degree,
                                            EnumerationBudget budget = {});

/// All terms of total degree <= d, graded then lex ascending.
std::vector<Term> terms_up_to_degree(std::size_t n_vars, std::uint64_t d);

}  // namespace bbd
