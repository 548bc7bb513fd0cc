#include "bbd/order_ideal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include <cassert>

namespace bbd {

namespace {

void require_nonempty(const TermSet& S, const char* what) {
  if (S.empty()) throw std::invalid_argument(std::string(what) + ": term set is empty");
}

// Terms of B bucketed by total degree, each bucket lex-sorted.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(const std::vector<Term>& sorted_terms) {
    for (const auto& t : sorted_terms) buckets_[total_degree(t)].push_back(t);
    std::size_t running = 0;
    for (const auto& [d, terms] : buckets_) {
      below_[d] = running;
      running += terms.size();
    }
  }

  std::uint64_t min_degree() const { return buckets_.begin()->first; }

  // Number of stored terms with degree strictly below d.
  std::size_t count_below(std::uint64_t d) const {
    auto it = below_.lower_bound(d);
    if (it == below_.end()) return total();
    return it->second;
  }

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [d, terms] : buckets_) n += terms.size();
    return n;
  }

  template <typename Fn>
  void for_each_below(std::uint64_t d, Fn&& fn) const {
    for (const auto& [deg, terms] : buckets_) {
      if (deg >= d) break;
      for (const auto& t : terms) fn(t);
    }
  }

 private:
  std::map<std::uint64_t, std::vector<Term>> buckets_;
  std::map<std::uint64_t, std::size_t> below_;
};

std::uint64_t divisor_count(const Term& t) {
  unsigned __int128 n = 1;
  for (Exponent e : t.exponents()) {
    n *= std::uint64_t{e} + 1;
    if (n > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(n);
}

// Visits every proper divisor of t with total degree >= min_deg.
template <typename Fn>
void for_each_proper_divisor(const Term& t, std::uint64_t min_deg, Fn&& fn) {
  const std::size_t n = t.n_vars();
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + t[i];
  const std::uint64_t full = suffix[0];
  ExponentVector scratch(n, 0);

  auto rec = [&](auto&& self, std::size_t i, std::uint64_t deg) -> void {
    if (deg + suffix[i] < min_deg) return;
    if (i == n) {
      if (deg != full) fn(Term(scratch));
      return;
    }
    for (Exponent e = 0; e <= t[i]; ++e) {
      scratch[i] = e;
      self(self, i + 1, deg + e);
    }
    scratch[i] = 0;
  };
  rec(rec, 0, 0);
}

class ConditionChecker {
 public:
  ConditionChecker(const TermSet& B, CheckMode mode)
      : B_(B), mode_(mode), sorted_(B.sorted()), buckets_(sorted_) {}

  BorderCheckReport run() {
    for (const auto& t : sorted_) {
      check_neighbor_condition(t);
      if (stop()) break;
      check_outside_child(t);
      if (stop()) break;
      check_between_closed(t);
      if (stop()) break;
    }
    report_.is_border = report_.violations.empty();
    return std::move(report_);
  }

 private:
  bool stop() const { return mode_ == CheckMode::kFirstViolation && !report_.violations.empty(); }

  // For x | t and y != x, one of t*y, t*y/x, t/x must be in B.
  void check_neighbor_condition(const Term& t) {
    const std::size_t n = t.n_vars();
    for (std::size_t x = 0; x < n; ++x) {
      if (t[x] == 0) continue;
      const Term child = t.over_var(x);
      if (B_.contains(child)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        if (B_.contains(child.times_var(y))) continue;
        if (B_.contains(t.times_var(y))) continue;
        BorderViolation v;
        v.condition = 1;
        v.term = t;
        v.divisor_var = x;
        v.other_var = y;
        report_.violations.push_back(std::move(v));
        if (stop()) return;
      }
    }
  }

  // Some child of t lies outside B.
  void check_outside_child(const Term& t) {
    for (std::size_t x = 0; x < t.n_vars(); ++x) {
      if (t[x] > 0 && !B_.contains(t.over_var(x))) return;
    }
    BorderViolation v;
    v.condition = 2;
    v.term = t;
    report_.violations.push_back(std::move(v));
  }

  // For t' in B with t' | t, every parent of t' dividing t is in B.
  void check_between_closed(const Term& t) {
    const std::uint64_t deg = total_degree(t);
    const std::uint64_t min_deg = buckets_.min_degree();
    if (deg <= min_deg) return;

    auto visit_lower = [&](const Term& lower) {
      if (stop()) return;
      for (std::size_t i = 0; i < t.n_vars(); ++i) {
        if (lower[i] >= t[i]) continue;
        Term middle = lower.times_var(i);
        if (B_.contains(middle)) continue;
        BorderViolation v;
        v.condition = 3;
        v.term = t;
        v.lower = lower;
        v.middle = std::move(middle);
        report_.violations.push_back(std::move(v));
        if (stop()) return;
      }
    };

    if (divisor_count(t) <= buckets_.count_below(deg)) {
      for_each_proper_divisor(t, min_deg, [&](const Term& d) {
        if (B_.contains(d)) visit_lower(d);
      });
    } else {
      buckets_.for_each_below(deg, [&](const Term& d) {
        if (divides(d, t)) visit_lower(d);
      });
    }
  }

  const TermSet& B_;
  CheckMode mode_;
  std::vector<Term> sorted_;
  DegreeBuckets buckets_;
  BorderCheckReport report_;
};

}  // namespace

bool is_order_ideal(const TermSet& S) {
  require_nonempty(S, "is_order_ideal");
  for (const auto& t : S) {
    for (std::size_t i = 0; i < t.n_vars(); ++i) {
      if (t[i] > 0 && !S.contains(t.over_var(i))) return false;
    }
  }
  return true;
}

TermSet border(const TermSet& order_ideal) {
  if (!is_order_ideal(order_ideal)) throw std::invalid_argument("border: input is not an order ideal");
  TermSet out;
  for (const auto& t : order_ideal) {
    for (std::size_t i = 0; i < t.n_vars(); ++i) {
      Term p = t.times_var(i);
      if (!order_ideal.contains(p)) out.insert(p);
    }
  }
  return out;
}

TermSet border_closure(const TermSet& order_ideal) {
  TermSet out = border(order_ideal);
  for (const auto& t : order_ideal) out.insert(t);
  return out;
}

std::uint64_t maxdeg(const TermSet& S) {
  require_nonempty(S, "maxdeg");
  std::uint64_t best = 0;
  for (const auto& t : S) best = std::max(best, total_degree(t));
  return best;
}

std::string BorderViolation::describe(const Ring& ring) const {
  std::ostringstream os;
  os << "condition " << condition << " fails at " << to_string(term, ring);
  switch (condition) {
    case 1: {
      const std::string x = ring.name(*divisor_var);
      const std::string y = ring.name(*other_var);
      os << ": with x=" << x << ", y=" << y << " none of t*" << y << ", t*" << y << "/" << x << ", t/" << x
         << " is in the set";
      break;
    }
    case 2:
      os << ": every child is in the set";
      break;
    case 3:
      os << ": " << to_string(*lower, ring) << " is in the set but its parent " << to_string(*middle, ring)
         << " (which divides the term) is not";
      break;
    default:
      break;
  }
  return os.str();
}

BorderCheckReport check_border_conditions(const TermSet& B, CheckMode mode) {
  require_nonempty(B, "check_border_conditions");
  return ConditionChecker(B, mode).run();
}

bool condition3_via_st(const TermSet& B) {
  require_nonempty(B, "condition3_via_st");
  const std::vector<Term> members = B.sorted();
  for (const auto& t : members) {
    // Every divisor t'' of t, including t itself.
    ExponentVector e(t.n_vars(), 0);
    while (true) {
      const Term candidate(e);
      const bool in_st = std::any_of(members.begin(), members.end(),
                                     [&](const Term& lower) { return divides(lower, candidate); });
      if (in_st && !B.contains(candidate)) return false;
      // Odometer increment bounded by t's exponents.
      std::size_t i = 0;
      while (i < e.size() && e[i] == t[i]) e[i++] = 0;
      if (i == e.size()) break;
      ++e[i];
    }
  }
  return true;
}

TermSet proper_divisors_outside(const TermSet& B) {
  TermSet closure;
  closure.reserve(B.size() * 2);
  std::deque<Term> queue;
  for (const auto& b : B) {
    closure.insert(b);
    queue.push_back(b);
  }
  while (!queue.empty()) {
    const Term t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < t.n_vars(); ++i) {
      if (t[i] == 0) continue;
      Term c = t.over_var(i);
      if (closure.insert(c)) queue.push_back(std::move(c));
    }
  }
  TermSet out;
  out.reserve(closure.size());
  for (const auto& t : closure) {
    if (!B.contains(t)) out.insert(t);
  }
  return out;
}

TermSet reconstruct_order_ideal(const TermSet& B) {
  const auto report = check_border_conditions(B, CheckMode::kFirstViolation);
  if (!report.is_border) {
    throw std::invalid_argument("reconstruct_order_ideal: set fails border condition " +
                                std::to_string(report.violations.front().condition));
  }
  TermSet O = proper_divisors_outside(B);
#ifndef NDEBUG
  assert(is_order_ideal(O));
  assert(border(O) == B);
#endif
  return O;
}

std::vector<Term> terms_up_to_degree(std::size_t n_vars, std::uint64_t d) {
  std::vector<Term> out;
  for (std::uint64_t k = 0; k <= d; ++k) {
    for (const auto& t : TermsOfDegree(n_vars, k)) out.push_back(t);
  }
  return out;
}

void for_each_order_ideal(std::size_t n_vars, std::uint64_t max_degree,
                          const std::function<void(const TermSet&)>& visit, EnumerationBudget budget) {
  const std::uint64_t universe = [&] {
    std::uint64_t n = 0;
    for (std::uint64_t k = 0; k <= max_degree; ++k) {
      n += count_terms_of_degree(n_vars, k);
      if (n > budget.max_terms) break;
    }
    return n;
  }();
  if (universe > budget.max_terms) {
    throw BudgetExceeded("order ideal enumeration: " + std::to_string(universe) + "+ terms exceed the budget of " +
                         std::to_string(budget.max_terms));
  }

  const std::vector<Term> terms = terms_up_to_degree(n_vars, max_degree);
  std::unordered_map<Term, std::size_t, TermHash> position;
  for (std::size_t i = 0; i < terms.size(); ++i) position.emplace(terms[i], i);
  // Graded order puts every child before its parent.
  std::vector<std::vector<std::size_t>> child_pos(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (const auto& c : children(terms[i])) child_pos[i].push_back(position.at(c));
  }

  std::vector<char> included(terms.size(), 0);
  std::size_t yielded = 0;

  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == terms.size()) {
      if (++yielded > budget.max_ideals) {
        throw BudgetExceeded("order ideal enumeration exceeded " + std::to_string(budget.max_ideals) + " ideals");
      }
      TermSet ideal;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (included[i]) ideal.insert(terms[i]);
      }
      visit(ideal);
      return;
    }
    const bool allowed = std::all_of(child_pos[p].begin(), child_pos[p].end(),
                                     [&](std::size_t c) { return included[c] != 0; });
    if (allowed) {
      included[p] = 1;
      self(self, p + 1);
      included[p] = 0;
    }
    // The unit term must be present in a non-empty order ideal.
    if (p != 0) self(self, p + 1);
  };
  rec(rec, 0);
}

std::vector<TermSet> enumerate_order_ideals(std::size_t n_vars, std::uint64_t max_degree,
                                            EnumerationBudget budget) {
  std::vector<TermSet> out;
  for_each_order_ideal(n_vars, max_degree, [&](const TermSet& s) { out.push_back(s); }, budget);
  return out;
}

}  // namespace bbd
