#include "bbd/border_basis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <spdlog/spdlog.h>

namespace bbd {

// ---------------------------------------------------------------------------
// Neighbors and S-polynomials

BorderIndex::BorderIndex(const BorderSelection& sel) : terms_(sel.chosen) {
  owner_.reserve(terms_.size());
  for (std::size_t j = 0; j < terms_.size(); ++j) owner_.emplace(terms_[j], j);
}

std::optional<std::size_t> BorderIndex::owner(const Term& t) const {
  auto it = owner_.find(t);
  if (it == owner_.end()) return std::nullopt;
  return it->second;
}

void for_each_neighbor_of(const BorderIndex& index, std::size_t j,
                          const std::function<void(const NeighborPair&)>& fn) {
  const Term& b = index.terms().at(j);
  const std::size_t n = b.n_vars();
  for (std::size_t i = 0; i < n; ++i) {
    const Term up = b.times_var(i);
    // x_i b_j = b_l
    if (auto l = index.owner(up); l && *l != j) {
      fn(NeighborPair{j, *l, NeighborPair::Kind::kAdjacent, i, std::nullopt});
    }
    // x_i b_j = x_m b_l
    for (std::size_t m = 0; m < n; ++m) {
      if (m == i || b[m] == 0) continue;
      if (auto l = index.owner(up.over_var(m)); l && *l != j) {
        fn(NeighborPair{j, *l, NeighborPair::Kind::kAcross, i, m});
      }
    }
  }
  // x_i b_l = b_j
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] == 0) continue;
    if (auto l = index.owner(b.over_var(i)); l && *l != j) {
      fn(NeighborPair{*l, j, NeighborPair::Kind::kAdjacent, i, std::nullopt});
    }
  }
}

std::vector<NeighborPair> neighbors(const BorderSelection& sel) {
  const BorderIndex index(sel);
  std::vector<NeighborPair> out;
  for (std::size_t j = 0; j < sel.chosen.size(); ++j) {
    for_each_neighbor_of(index, j, [&](const NeighborPair& p) {
      const bool keep = p.kind == NeighborPair::Kind::kAcross ? p.k == j && j < p.l : p.k == j;
      if (keep) out.push_back(p);
    });
  }
  std::sort(out.begin(), out.end(), [](const NeighborPair& a, const NeighborPair& b) {
    return std::tie(a.k, a.l, a.k_multiplier) < std::tie(b.k, b.l, b.k_multiplier);
  });
  return out;
}

Polynomial s_polynomial(const Polynomial& g_k, const Term& b_k, const Polynomial& g_l, const Term& b_l,
                        const NeighborPair& pair) {
  if (pair.k == pair.l) throw std::invalid_argument("s_polynomial: a polynomial is not its own neighbor");
  if (g_k.coefficient_of(b_k) != 1 || g_l.coefficient_of(b_l) != 1) {
    throw std::invalid_argument("s_polynomial: inputs must be monic at their border terms");
  }
  const Term lifted_k = b_k.times_var(pair.k_multiplier);
  if (pair.kind == NeighborPair::Kind::kAcross) {
    if (!pair.l_multiplier || lifted_k != b_l.times_var(*pair.l_multiplier)) {
      throw std::invalid_argument("s_polynomial: border terms are not related across the given multipliers");
    }
    const std::size_t n = b_k.n_vars();
    return subtract(term_mul(g_k, Term::variable(n, pair.k_multiplier)),
                    term_mul(g_l, Term::variable(n, *pair.l_multiplier)));
  }
  if (pair.l_multiplier || lifted_k != b_l) {
    throw std::invalid_argument("s_polynomial: border terms are not adjacent via the given multiplier");
  }
  return subtract(term_mul(g_k, Term::variable(b_k.n_vars(), pair.k_multiplier)), g_l);
}

// ---------------------------------------------------------------------------
// Buchberger criterion

BuchbergerResult buchberger_check(const std::vector<Polynomial>& normalized, const BorderCertificate& cert) {
  const auto& chosen = cert.selection.chosen;
  if (normalized.size() != chosen.size()) {
    throw std::invalid_argument("buchberger_check: selection and system sizes differ");
  }
  const BorderIndex index(cert.selection);
  BuchbergerResult result;

  auto evaluate_pair = [&](const NeighborPair& pair) -> bool {
    ++result.pairs_checked;
    const Polynomial S = s_polynomial(normalized[pair.k], chosen[pair.k], normalized[pair.l], chosen[pair.l], pair);
    std::vector<Polynomial::Entry> acc(S.entries());
    for (const auto& [t, c] : S) {
      auto owner = index.owner(t);
      if (!owner) {
        if (!cert.order_ideal.contains(t)) {
          result.outside_closure = t;
          result.ok = false;
          result.failing_pair = pair;
          result.remainder = S;
          return false;
        }
        continue;
      }
      // S - c_j g_j with c_j the coefficient of b_j in S.
      for (const auto& [s, a] : normalized[*owner]) acc.emplace_back(s, -(c * a));
    }
    Polynomial remainder = Polynomial::from_entries(std::move(acc));
    if (!remainder.is_zero()) {
      result.ok = false;
      result.failing_pair = pair;
      result.remainder = std::move(remainder);
      return false;
    }
    return true;
  };

  // Pairs of bare border terms have an identically zero S-polynomial, so only
  // pairs touching a polynomial with a tail are formed.
  for (std::size_t j = 0; j < normalized.size() && result.ok; ++j) {
    if (normalized[j].size() == 1) continue;
    bool keep_going = true;
    for_each_neighbor_of(index, j, [&](const NeighborPair& pair) {
      if (!keep_going) return;
      const std::size_t other = pair.k == j ? pair.l : pair.k;
      if (normalized[other].size() > 1) {
        // Seen from both sides; form it from one.
        if (pair.kind == NeighborPair::Kind::kAcross && other < j) return;
        if (pair.kind == NeighborPair::Kind::kAdjacent && pair.k != j) return;
      }
      keep_going = evaluate_pair(pair);
    });
  }
  return result;
}

// ---------------------------------------------------------------------------
// Verification

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::kMalformedSelection:
      return "malformed-selection";
    case FailureKind::kTermNotInSupport:
      return "term-not-in-support";
    case FailureKind::kDuplicateBorderTerm:
      return "duplicate-border-term";
    case FailureKind::kSeveralBorderTerms:
      return "several-border-terms";
    case FailureKind::kBorderCondition:
      return "border-condition";
    case FailureKind::kNotPrebasis:
      return "not-prebasis";
    case FailureKind::kBuchberger:
      return "buchberger";
    case FailureKind::kCertificateMismatch:
      return "certificate-mismatch";
  }
  return "unknown";
}

std::string VerificationFailure::describe(const Ring& ring) const {
  std::ostringstream os;
  os << to_string(kind);
  if (poly_index) os << " [polynomial " << *poly_index;
  if (poly_index && other_index) os << ", polynomial " << *other_index;
  if (poly_index) os << "]";
  if (!terms.empty()) {
    os << " terms:";
    for (const auto& t : terms) os << ' ' << (t.n_vars() == ring.size() ? to_string(t, ring) : "<wrong ring>");
  }
  if (violation) os << "; " << violation->describe(ring);
  if (pair) {
    os << "; pair (" << pair->k << ", " << pair->l << ") "
       << (pair->kind == NeighborPair::Kind::kAcross ? "across" : "adjacent") << " remainder "
       << to_string(remainder, ring);
  }
  return os.str();
}

namespace {

VerificationFailure failure(FailureKind kind, std::optional<std::size_t> poly = std::nullopt,
                            std::vector<Term> terms = {}) {
  VerificationFailure f{kind, poly, std::nullopt, std::move(terms), std::nullopt, std::nullopt, {}};
  return f;
}

// Stages up to and including the prebasis test. On success fills B and O.
std::optional<VerificationFailure> check_prebasis(const PolySystem& F, const BorderSelection& sel, TermSet& B,
                                                  TermSet& O) {
  if (sel.chosen.size() != F.size()) {
    auto f = failure(FailureKind::kMalformedSelection);
    f.poly_index = std::min(sel.chosen.size(), F.size());
    return f;
  }
  if (F.size() == 0) return failure(FailureKind::kMalformedSelection);
  std::unordered_map<Term, std::size_t, TermHash> first_owner;
  first_owner.reserve(F.size());
  for (std::size_t j = 0; j < F.size(); ++j) {
    const Term& b = sel.chosen[j];
    if (b.n_vars() != F.n_vars() || !F[j].contains(b)) {
      return failure(FailureKind::kTermNotInSupport, j, {b});
    }
    auto [it, fresh] = first_owner.emplace(b, j);
    if (!fresh) {
      auto f = failure(FailureKind::kDuplicateBorderTerm, it->second, {b});
      f.other_index = j;
      return f;
    }
  }
  B = TermSet();
  B.reserve(F.size());
  for (const auto& b : sel.chosen) B.insert(b);

  for (std::size_t j = 0; j < F.size(); ++j) {
    for (const auto& [t, c] : F[j]) {
      if (t != sel.chosen[j] && B.contains(t)) {
        auto f = failure(FailureKind::kSeveralBorderTerms, j, {sel.chosen[j], t});
        f.other_index = first_owner.at(t);
        return f;
      }
    }
  }

  auto report = check_border_conditions(B, CheckMode::kFirstViolation);
  if (!report.is_border) {
    auto f = failure(FailureKind::kBorderCondition, std::nullopt, {report.violations.front().term});
    f.violation = report.violations.front();
    return f;
  }

  O = proper_divisors_outside(B);
  for (std::size_t j = 0; j < F.size(); ++j) {
    for (const auto& [t, c] : F[j]) {
      if (t != sel.chosen[j] && !O.contains(t)) return failure(FailureKind::kNotPrebasis, j, {t});
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_prebasis(const PolySystem& F, const BorderSelection& sel) {
  TermSet B, O;
  return !check_prebasis(F, sel, B, O).has_value();
}

VerificationReport verify_selection(const PolySystem& F, const BorderSelection& sel) {
  VerificationReport report;
  TermSet B, O;
  if (auto f = check_prebasis(F, sel, B, O)) {
    report.failures.push_back(std::move(*f));
    return report;
  }
  std::vector<Polynomial> normalized;
  normalized.reserve(F.size());
  for (std::size_t j = 0; j < F.size(); ++j) normalized.push_back(normalize_at(F[j], sel.chosen[j]));

  BorderCertificate cert{sel, std::move(O), std::move(B)};
  const BuchbergerResult bb = buchberger_check(normalized, cert);
  spdlog::debug("buchberger check: {} neighbor pairs formed", bb.pairs_checked);
  if (!bb.ok) {
    auto f = failure(FailureKind::kBuchberger, bb.failing_pair->k);
    f.other_index = bb.failing_pair->l;
    f.pair = bb.failing_pair;
    f.remainder = bb.remainder;
    if (bb.outside_closure) f.terms.push_back(*bb.outside_closure);
    report.failures.push_back(std::move(f));
    return report;
  }
  report.certificate = std::move(cert);
  return report;
}

bool verify_certificate(const PolySystem& F, const BorderSelection& sel) { return verify_selection(F, sel).accepted(); }

VerificationReport verify_certificate_report(const PolySystem& F, const BorderCertificate& cert) {
  // The stated border must be exactly the set of chosen terms.
  TermSet chosen;
  for (const auto& t : cert.selection.chosen) {
    if (t.n_vars() == F.n_vars()) chosen.insert(t);
  }
  for (const auto& t : cert.selection.chosen) {
    if (t.n_vars() == F.n_vars() && !cert.border.contains(t)) {
      VerificationReport r;
      r.failures.push_back(failure(FailureKind::kCertificateMismatch, std::nullopt, {t}));
      return r;
    }
  }
  for (const auto& t : cert.border.sorted()) {
    if (!chosen.contains(t)) {
      VerificationReport r;
      r.failures.push_back(failure(FailureKind::kCertificateMismatch, std::nullopt, {t}));
      return r;
    }
  }

  VerificationReport report = verify_selection(F, cert.selection);
  if (!report.accepted()) return report;

  const TermSet& induced = report.certificate->order_ideal;
  for (const auto& t : cert.order_ideal.sorted()) {
    if (!induced.contains(t)) {
      report.failures.push_back(failure(FailureKind::kCertificateMismatch, std::nullopt, {t}));
      report.certificate.reset();
      return report;
    }
  }
  if (induced.size() != cert.order_ideal.size()) {
    for (const auto& t : induced.sorted()) {
      if (!cert.order_ideal.contains(t)) {
        report.failures.push_back(failure(FailureKind::kCertificateMismatch, std::nullopt, {t}));
        report.certificate.reset();
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Detection

std::string to_string(DetectOutcome outcome) {
  switch (outcome) {
    case DetectOutcome::kYes:
      return "YES";
    case DetectOutcome::kNo:
      return "NO";
    case DetectOutcome::kBudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

namespace {

// Backtracking over one border term per polynomial.
//
// A term lying in two or more supports can never be a border term: it would
// meet one of its polynomials in a second border term. Every other term has a
// single owning polynomial, so membership in B is three-valued while the
// search runs: in, out, or unknown (owner undecided). Conditions 1 and 2 only
// look at neighbors one step away, so a decided term can be rejected as soon
// as they fail with unknowns resolved either way. Complete selections always
// go through verify_selection.
class SelectionSearch {
 public:
  SelectionSearch(const PolySystem& F, const SearchBudget& budget,
                  std::function<bool(const BorderCertificate&)> on_certificate)
      : F_(F), budget_(budget), on_certificate_(std::move(on_certificate)) {}

  DetectionResult run() {
    start_ = std::chrono::steady_clock::now();
    DetectionResult result;
    if (F_.size() == 0) throw std::invalid_argument("detect: empty polynomial system");

    index_owners();
    decided_.assign(F_.size(), 0);
    chosen_.assign(F_.size(), Term{});

    std::vector<std::size_t> open;
    bool feasible = true;
    for (std::size_t j = 0; j < F_.size(); ++j) {
      if (candidates_[j].empty()) {
        feasible = false;
      } else if (candidates_[j].size() == 1) {
        decided_[j] = 1;
        chosen_[j] = candidates_[j].front();
      } else {
        open.push_back(j);
      }
    }
    // Only forced terms are in B so far; everything else is out for good or
    // still unknown and gets rechecked when its owner is decided.
    if (feasible) {
      for (std::size_t j = 0; j < F_.size() && feasible; ++j) {
        if (decided_[j] && !conditions_hold_at(chosen_[j])) feasible = false;
      }
    }
    std::stable_sort(open.begin(), open.end(),
                     [&](std::size_t a, std::size_t b) { return F_[a].size() < F_[b].size(); });
    order_ = std::move(open);

    if (feasible) search(0);

    result.stats = stats_;
    result.stats.elapsed_secs = elapsed();
    if (budget_hit_) {
      result.outcome = DetectOutcome::kBudgetExceeded;
    } else {
      result.outcome = found_ ? DetectOutcome::kYes : DetectOutcome::kNo;
    }
    result.certificate = std::move(first_);
    return result;
  }

 private:
  enum class Membership { kOut, kIn, kUnknown };

  void index_owners() {
    owner_.reserve(F_.size() * 2);
    for (std::size_t j = 0; j < F_.size(); ++j) {
      for (const auto& [t, c] : F_[j]) {
        auto [it, fresh] = owner_.emplace(t, static_cast<std::int64_t>(j));
        if (!fresh && it->second != static_cast<std::int64_t>(j)) it->second = -1;
      }
    }
    candidates_.resize(F_.size());
    for (std::size_t j = 0; j < F_.size(); ++j) {
      for (const auto& [t, c] : F_[j]) {
        if (owner_.at(t) == static_cast<std::int64_t>(j)) candidates_[j].push_back(t);
      }
      std::sort(candidates_[j].begin(), candidates_[j].end(), [](const Term& a, const Term& b) {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db) return da > db;
        return a < b;
      });
    }
  }

  Membership membership(const Term& t) const {
    auto it = owner_.find(t);
    if (it == owner_.end() || it->second < 0) return Membership::kOut;
    const auto j = static_cast<std::size_t>(it->second);
    if (!decided_[j]) return Membership::kUnknown;
    return chosen_[j] == t ? Membership::kIn : Membership::kOut;
  }

  // Conditions 1 and 2 at t, failing only when no resolution of the unknowns
  // could satisfy them.
  bool conditions_hold_at(const Term& t) const {
    if (membership(t) != Membership::kIn) return true;
    const std::size_t n = t.n_vars();
    bool some_child_may_be_out = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (t[x] == 0) continue;
      const Term child = t.over_var(x);
      const Membership mc = membership(child);
      if (mc != Membership::kIn) some_child_may_be_out = true;
      if (mc != Membership::kOut) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        if (membership(child.times_var(y)) != Membership::kOut) continue;
        if (membership(t.times_var(y)) != Membership::kOut) continue;
        return false;
      }
    }
    return some_child_may_be_out;
  }

  // Every term whose condition 1 or 2 reads the membership of s.
  bool locally_consistent(const Term& s) const {
    if (!conditions_hold_at(s)) return false;
    const std::size_t n = s.n_vars();
    for (std::size_t i = 0; i < n; ++i) {
      const Term up = s.times_var(i);
      if (!conditions_hold_at(up)) return false;
      if (s[i] == 0) continue;
      const Term down = s.over_var(i);
      if (!conditions_hold_at(down)) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        if (!conditions_hold_at(down.times_var(k))) return false;
      }
    }
    return true;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  // Returns false to unwind the whole search.
  bool search(std::size_t depth) {
    if (elapsed() > budget_.timeout_secs) {
      budget_hit_ = true;
      return false;
    }
    if (depth == order_.size()) return evaluate_complete();

    const std::size_t j = order_[depth];
    for (const auto& b : candidates_[j]) {
      ++stats_.nodes;
      decided_[j] = 1;
      chosen_[j] = b;
      bool consistent = true;
      for (const auto& [t, c] : F_[j]) {
        if (!locally_consistent(t)) {
          consistent = false;
          break;
        }
      }
      bool keep_going = true;
      if (consistent) {
        keep_going = search(depth + 1);
      } else {
        ++stats_.pruned;
      }
      decided_[j] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  bool evaluate_complete() {
    if (stats_.candidates >= budget_.max_candidates) {
      budget_hit_ = true;
      return false;
    }
    ++stats_.candidates;
    BorderSelection sel{chosen_};
    VerificationReport report = verify_selection(F_, sel);
    if (!report.accepted()) {
      spdlog::debug("candidate {} rejected: {}", stats_.candidates, to_string(report.failures.front().kind));
      return true;
    }
    found_ = true;
    const bool keep_going = on_certificate_ ? on_certificate_(*report.certificate) : false;
    if (!first_) first_ = std::move(report.certificate);
    return keep_going;
  }

  const PolySystem& F_;
  SearchBudget budget_;
  std::function<bool(const BorderCertificate&)> on_certificate_;

  std::unordered_map<Term, std::int64_t, TermHash> owner_;  // -1: several owners
  std::vector<std::vector<Term>> candidates_;
  std::vector<char> decided_;
  std::vector<Term> chosen_;
  std::vector<std::size_t> order_;

  std::chrono::steady_clock::time_point start_;
  SearchStats stats_;
  bool found_ = false;
  bool budget_hit_ = false;
  std::optional<BorderCertificate> first_;
};

}  // namespace

DetectionResult detect(const PolySystem& F, const SearchBudget& budget) {
  return SelectionSearch(F, budget, nullptr).run();
}

DetectionResult detect_all(const PolySystem& F, const SearchBudget& budget,
                           const std::function<bool(const BorderCertificate&)>& on_certificate) {
  return SelectionSearch(F, budget, on_certificate).run();
}

}  // namespace bbd
