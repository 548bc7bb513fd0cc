// Polynomial-time reduction from 3,4-SAT to border basis detection, plus the
// maps between satisfying assignments and border certificates of the reduced
// system.
//
// Ring variables are laid out as
//   x_1..x_n, xb_1..xb_n, c_1..c_m, xc_1..xc_m, X      (N = 2n + 2m + 1)
// and reduced systems list their polynomials as
//   v-polynomials (one per variable), c-polynomials (one per clause),
//   region t-polynomials (lex order), then every degree-8 term (lex order).

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbd/border_basis.hpp"
#include "bbd/polynomial.hpp"
#include "bbd/sat.hpp"
#include "bbd/term.hpp"
#include "bbd/term_set.hpp"

namespace bbd {

class InvalidInstance : public std::invalid_argument {
 public:
  InvalidInstance(const std::string& what, std::vector<std::string> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class ReductionRing {
 public:
  ReductionRing(std::size_t n, std::size_t m);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const Ring& ring() const { return ring_; }
  std::size_t size() const { return ring_.size(); }

  std::size_t x(std::size_t i) const { return i; }
  std::size_t x_bar(std::size_t i) const { return n_ + i; }
  std::size_t c(std::size_t l) const { return 2 * n_ + l; }
  std::size_t x_c(std::size_t l) const { return 2 * n_ + m_ + l; }
  std::size_t big_x() const { return 2 * n_ + 2 * m_; }

 private:
  std::size_t n_;
  std::size_t m_;
  Ring ring_;
};

struct VariableGadget {
  std::size_t var = 0;               // 0-based variable index
  std::vector<std::size_t> clauses;  // clauses mentioning X_i or ~X_i, ascending
  Term t_clause;                     // product of their c_l, padded with X to degree 4
  Term t_pos;                        // x_i * xb_i^2 * t_clause
  Term t_neg;                        // x_i^2 * xb_i * t_clause
  TermSet k_pos, k_neg, k_all;       // k_all also holds t_pos and t_neg
  TermSet p_pos, p_neg, p_all;
  TermSet region;                    // children of p_all
};

VariableGadget build_gadget(const CnfInstance& I, const ReductionRing& rr, std::size_t i);

/// t * x_{c_l} / c_l.
Term clause_variant(const ReductionRing& rr, const Term& t, std::size_t l);

struct ReductionOptions {
  std::uint64_t max_degree8_terms = 1'000'000;
};

struct ReducedInstance {
  CnfInstance instance;
  ReductionRing rr;
  std::vector<VariableGadget> gadgets;
  PolySystem system;
  std::size_t region_count = 0;   // region t-polynomials
  std::size_t degree8_count = 0;  // degree-8 t-polynomials

  std::size_t v_index(std::size_t i) const { return i; }
  std::size_t c_index(std::size_t l) const { return rr.n() + l; }
  std::size_t region_begin() const { return rr.n() + rr.m(); }
  std::size_t degree8_begin() const { return region_begin() + region_count; }

  const Term& literal_term(const Literal& lit) const;
};

/// Throws InvalidInstance if validate_34 fails, std::length_error if the
/// degree-8 terms exceed the configured cap.
ReducedInstance reduce(const CnfInstance& I, const ReductionOptions& options = {});

/// v-polynomial of X_i chooses t_pos when A(X_i) is false and t_neg otherwise;
/// each c-polynomial chooses the term of its first literal made true by A;
/// t-polynomials choose their only term. Throws std::invalid_argument if A
/// does not satisfy the instance.
BorderSelection assignment_to_border(const ReducedInstance& R, const Assignment& A);

/// X_i is true iff t_pos lies in the certificate's order ideal. Throws
/// std::invalid_argument if the certificate does not put exactly one of
/// t_pos, t_neg in the order ideal.
Assignment border_to_assignment(const ReducedInstance& R, const BorderCertificate& cert);

/// For every literal occurrence of X_i (resp. ~X_i) in clause l, not both the
/// gadget term and its clause variant lie in the border.
bool check_varclause_property(const ReducedInstance& R, const BorderCertificate& cert);

}  // namespace bbd
