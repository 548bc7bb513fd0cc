// Border prebases, neighbor S-polynomials, the Buchberger criterion for border
// bases, certificate verification and the exhaustive detection search.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bbd/order_ideal.hpp"
#include "bbd/polynomial.hpp"
#include "bbd/term.hpp"
#include "bbd/term_set.hpp"

namespace bbd {

/// The designated border term of each polynomial, parallel to PolySystem::polys.
struct BorderSelection {
  std::vector<Term> chosen;

  bool operator==(const BorderSelection&) const = default;
};

struct BorderCertificate {
  BorderSelection selection;
  TermSet order_ideal;
  TermSet border;
};

/// Two polynomials whose border terms satisfy
///   across:   x_i * b_k == x_j * b_l   (k_multiplier = i, l_multiplier = j)
///   adjacent: x_i * b_k == b_l         (k_multiplier = i, no l_multiplier)
struct NeighborPair {
  enum class Kind { kAcross, kAdjacent };

  std::size_t k = 0;
  std::size_t l = 0;
  Kind kind = Kind::kAcross;
  std::size_t k_multiplier = 0;
  std::optional<std::size_t> l_multiplier;

  bool operator==(const NeighborPair&) const = default;
};

/// Border terms indexed for neighbor lookups.
class BorderIndex {
 public:
  explicit BorderIndex(const BorderSelection& sel);

  std::optional<std::size_t> owner(const Term& t) const;
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, std::size_t, TermHash> owner_;
};

/// Calls `fn` for every neighbor pair having polynomial j as one side. Across
/// pairs are reported with k = j; adjacent pairs with the lower-degree side as k.
void for_each_neighbor_of(const BorderIndex& index, std::size_t j, const std::function<void(const NeighborPair&)>& fn);

/// Every unordered neighbor pair once, sorted by (k, l).
std::vector<NeighborPair> neighbors(const BorderSelection& sel);

/// x_i g_k - x_j g_l (across) or x_i g_k - g_l (adjacent). Both inputs must be
/// monic at their border terms b_k, b_l. Throws std::invalid_argument if the
/// pair does not describe them.
Polynomial s_polynomial(const Polynomial& g_k, const Term& b_k, const Polynomial& g_l, const Term& b_l,
                        const NeighborPair& pair);

struct BuchbergerResult {
  bool ok = true;
  std::optional<NeighborPair> failing_pair;
  Polynomial remainder;
  std::size_t pairs_checked = 0;
  /// A term of some S-polynomial outside O u border(O). Impossible for a valid
  /// prebasis; reported rather than asserted.
  std::optional<Term> outside_closure;
};

/// For every neighbor pair, subtracts from S the combination sum c_j g_j with
/// c_j the coefficient of b_j in S, and requires a zero remainder.
/// `normalized[j]` must be monic at cert.selection.chosen[j].
BuchbergerResult buchberger_check(const std::vector<Polynomial>& normalized, const BorderCertificate& cert);

/// Selection shape checks plus the three border conditions and the prebasis
/// test (every non-border support term divides a border term).
bool is_prebasis(const PolySystem& F, const BorderSelection& sel);

enum class FailureKind {
  kMalformedSelection,   // wrong length
  kTermNotInSupport,     // chosen term absent from its polynomial
  kDuplicateBorderTerm,  // two polynomials chose the same term
  kSeveralBorderTerms,   // a polynomial meets the border in more than one term
  kBorderCondition,      // the chosen terms are not the border of an order ideal
  kNotPrebasis,          // a non-border support term lies outside the order ideal
  kBuchberger,           // an S-polynomial is not a combination of the g_j
  kCertificateMismatch,  // stated border / order ideal differ from the selection's
};

std::string to_string(FailureKind kind);

struct VerificationFailure {
  FailureKind kind;
  std::optional<std::size_t> poly_index;
  std::optional<std::size_t> other_index;
  std::vector<Term> terms;
  std::optional<BorderViolation> violation;
  std::optional<NeighborPair> pair;
  Polynomial remainder;

  std::string describe(const Ring& ring) const;
};

struct VerificationReport {
  std::vector<VerificationFailure> failures;
  std::optional<BorderCertificate> certificate;  // set when accepted

  bool accepted() const { return failures.empty(); }
};

/// Full re-check of a proposed selection without search. Stops at the first
/// failing stage; the failure carries a witness.
VerificationReport verify_selection(const PolySystem& F, const BorderSelection& sel);

bool verify_certificate(const PolySystem& F, const BorderSelection& sel);

/// As verify_selection, and additionally requires the certificate's stated
/// border and order ideal to be exactly the ones induced by its selection.
VerificationReport verify_certificate_report(const PolySystem& F, const BorderCertificate& cert);

struct SearchBudget {
  std::uint64_t max_candidates = 1'000'000;  // complete selections fully checked
  double timeout_secs = 600.0;
};

struct SearchStats {
  std::uint64_t candidates = 0;  // complete selections that reached the full check
  std::uint64_t nodes = 0;       // partial selections visited
  std::uint64_t pruned = 0;      // partial selections cut by local checks
  double elapsed_secs = 0.0;
};

enum class DetectOutcome { kYes, kNo, kBudgetExceeded };

std::string to_string(DetectOutcome outcome);

struct DetectionResult {
  DetectOutcome outcome = DetectOutcome::kNo;
  std::optional<BorderCertificate> certificate;
  SearchStats stats;
};

/// Exhaustive backtracking over border selections. Returns the first passing
/// selection in search order: polynomials by ascending support size (ties by
/// index), candidate terms by descending degree then ascending lex.
DetectionResult detect(const PolySystem& F, const SearchBudget& budget = {});

/// Runs the same search past the first certificate; `on_certificate` returns
/// false to stop. Outcome is kBudgetExceeded if the budget ran out first,
/// otherwise kYes iff at least one certificate was found.
DetectionResult detect_all(const PolySystem& F, const SearchBudget& budget,
                           const std::function<bool(const BorderCertificate&)>& on_certificate);

}  // namespace bbd
