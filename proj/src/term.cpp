#include "bbd/term.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace bbd {

namespace {

void require_same_ring(const Term& a, const Term& b) {
  if (a.n_vars() != b.n_vars()) {
    throw RingMismatch("terms belong to rings of different size (" + std::to_string(a.n_vars()) + " vs " +
                       std::to_string(b.n_vars()) + ")");
  }
}

}  // namespace

Ring::Ring(std::vector<std::string> var_names) : names_(std::move(var_names)) {
  if (names_.empty()) {
    throw std::invalid_argument("a ring needs at least one indeterminate");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) {
      throw std::invalid_argument("indeterminate names must be non-empty");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate indeterminate name '" + name + "'");
    }
  }
}

Ring Ring::with_default_names(std::size_t n_vars) {
  std::vector<std::string> names;
  names.reserve(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) {
    names.push_back("x" + std::to_string(i + 1));
  }
  return Ring(std::move(names));
}

Term Term::one(std::size_t n_vars) { return Term(ExponentVector(n_vars, 0)); }

Term Term::variable(std::size_t n_vars, std::size_t i) {
  if (i >= n_vars) {
    throw std::out_of_range("indeterminate index out of range");
  }
  ExponentVector e(n_vars, 0);
  e[i] = 1;
  return Term(std::move(e));
}

bool Term::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Term Term::times_var(std::size_t i) const {
  Term out = *this;
  if (out.exps_.at(i) == std::numeric_limits<Exponent>::max()) {
    throw std::overflow_error("exponent overflow");
  }
  ++out.exps_[i];
  return out;
}

Term Term::over_var(std::size_t i) const {
  if (exps_.at(i) == 0) {
    throw std::domain_error("indeterminate does not divide term");
  }
  Term out = *this;
  --out.exps_[i];
  return out;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(), other.exps_.begin(),
                                                other.exps_.end());
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ t.n_vars();
  for (Exponent e : t.exponents()) {
    h ^= e + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  // splitmix64 finalizer
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBULL;
  h ^= h >> 31;
  return static_cast<std::size_t>(h);
}

std::uint64_t total_degree(const Term& t) {
  return std::accumulate(t.exponents().begin(), t.exponents().end(), std::uint64_t{0});
}

std::size_t indeterminate_count(const Term& t) {
  return static_cast<std::size_t>(
      std::count_if(t.exponents().begin(), t.exponents().end(), [](Exponent e) { return e > 0; }));
}

bool divides(const Term& a, const Term& b) {
  require_same_ring(a, b);
  for (std::size_t i = 0; i < a.n_vars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Term mul(const Term& a, const Term& b) {
  require_same_ring(a, b);
  ExponentVector e(a.n_vars());
  for (std::size_t i = 0; i < a.n_vars(); ++i) {
    const std::uint64_t s = std::uint64_t{a[i]} + b[i];
    if (s > std::numeric_limits<Exponent>::max()) {
      throw std::overflow_error("exponent overflow");
    }
    e[i] = static_cast<Exponent>(s);
  }
  return Term(std::move(e));
}

Term div(const Term& a, const Term& b) {
  if (!divides(b, a)) {
    throw std::domain_error("division by a non-divisor term");
  }
  ExponentVector e(a.n_vars());
  for (std::size_t i = 0; i < a.n_vars(); ++i) e[i] = a[i] - b[i];
  return Term(std::move(e));
}

std::vector<Term> children(const Term& t) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < t.n_vars(); ++i) {
    if (t[i] > 0) out.push_back(t.over_var(i));
  }
  return out;
}

std::vector<Term> parents(const Term& t) {
  std::vector<Term> out;
  out.reserve(t.n_vars());
  for (std::size_t i = 0; i < t.n_vars(); ++i) out.push_back(t.times_var(i));
  return out;
}

std::uint64_t count_terms_of_degree(std::size_t n_vars, std::uint64_t d) {
  if (n_vars == 0) return d == 0 ? 1 : 0;
  // C(n-1+d, d) built incrementally; each partial product is itself a binomial.
  const std::uint64_t k = std::min<std::uint64_t>(d, n_vars - 1);
  const std::uint64_t top = n_vars - 1 + d;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (top - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

TermsOfDegree::TermsOfDegree(std::size_t n_vars, std::uint64_t degree) : n_vars_(n_vars), degree_(degree) {
  if (n_vars == 0) throw std::invalid_argument("terms_of_degree needs at least one indeterminate");
  if (degree > std::numeric_limits<Exponent>::max()) throw std::overflow_error("degree exceeds exponent bound");
}

TermsOfDegree::iterator TermsOfDegree::begin() const {
  iterator it;
  ExponentVector e(n_vars_, 0);
  e.back() = static_cast<Exponent>(degree_);
  it.current_ = Term(std::move(e));
  it.done_ = false;
  return it;
}

TermsOfDegree::iterator& TermsOfDegree::iterator::operator++() {
  // Ascending lex successor: bump the slot just left of the rightmost nonzero
  // entry and push the remaining mass into the last slot.
  ExponentVector e = current_.exponents();
  const std::size_t n = e.size();
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;) {
    if (e[i] > 0) {
      k = i;
      break;
    }
  }
  if (k == 0 || k == n) {
    done_ = true;
    return *this;
  }
  const std::size_t pivot = k - 1;
  Exponent tail = 0;
  for (std::size_t i = pivot + 1; i < n; ++i) {
    tail += e[i];
    e[i] = 0;
  }
  ++e[pivot];
  e[n - 1] = tail - 1;
  current_ = Term(std::move(e));
  return *this;
}

TermsOfDegree terms_of_degree(const Ring& ring, std::uint64_t d) { return TermsOfDegree(ring.size(), d); }

std::string to_string(const Term& t, const Ring& ring) {
  if (t.n_vars() != ring.size()) throw RingMismatch("term does not belong to ring");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < t.n_vars(); ++i) {
    if (t[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ring.name(i);
    if (t[i] > 1) os << '^' << t[i];
  }
  if (first) return "1";
  return os.str();
}

}  // namespace bbd
