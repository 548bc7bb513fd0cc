#include "bbd/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bbd {

namespace {

void require_compatible(const Polynomial& f, const Polynomial& g) {
  if (!f.is_zero() && !g.is_zero() && f.n_vars() != g.n_vars()) {
    throw RingMismatch("polynomials belong to rings of different size");
  }
}

const Polynomial::Entry* find_entry(const std::vector<Polynomial::Entry>& entries, const Term& t) {
  auto it = std::lower_bound(entries.begin(), entries.end(), t,
                             [](const Polynomial::Entry& e, const Term& key) { return e.first < key; });
  if (it == entries.end() || it->first != t) return nullptr;
  return &*it;
}

Polynomial combine(const Polynomial& f, const Polynomial& g, bool negate_g) {
  require_compatible(f, g);
  std::vector<Polynomial::Entry> out;
  out.reserve(f.size() + g.size());
  auto a = f.begin();
  auto b = g.begin();
  while (a != f.end() || b != g.end()) {
    if (b == g.end() || (a != f.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == f.end() || b->first < a->first) {
      out.emplace_back(b->first, negate_g ? Rational(-b->second) : b->second);
      ++b;
    } else {
      Rational c = negate_g ? Rational(a->second - b->second) : Rational(a->second + b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return Polynomial::from_canonical(std::move(out));
}

}  // namespace

Polynomial Polynomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (!merged.empty() && merged.front().first.n_vars() != e.first.n_vars()) {
      throw RingMismatch("mixed rings in polynomial");
    }
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
  for (auto& e : merged) e.second.canonicalize();
  return from_canonical(std::move(merged));
}

Polynomial Polynomial::from_canonical(std::vector<Entry> entries) {
  Polynomial p;
  p.entries_ = std::move(entries);
  return p;
}

Polynomial Polynomial::monomial(Term t, Rational c) {
  std::vector<Entry> e;
  e.emplace_back(std::move(t), std::move(c));
  return from_entries(std::move(e));
}

bool Polynomial::contains(const Term& t) const { return find_entry(entries_, t) != nullptr; }

Rational Polynomial::coefficient_of(const Term& t) const {
  const Entry* e = find_entry(entries_, t);
  return e ? e->second : Rational(0);
}

std::size_t PolynomialHash::operator()(const Polynomial& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  TermHash th;
  std::hash<std::string> sh;
  for (const auto& [t, c] : f) {
    h = (h * 1099511628211ULL) ^ th(t);
    h = (h * 1099511628211ULL) ^ sh(c.get_str());
  }
  return h;
}

TermSet support(const Polynomial& f) {
  TermSet s;
  s.reserve(f.size());
  for (const auto& e : f) s.insert(e.first);
  return s;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return combine(f, g, false); }

Polynomial subtract(const Polynomial& f, const Polynomial& g) { return combine(f, g, true); }

Polynomial scale(const Polynomial& f, const Rational& c) {
  if (c == 0) return {};
  std::vector<Polynomial::Entry> out;
  out.reserve(f.size());
  for (const auto& [t, a] : f) out.emplace_back(t, a * c);
  return Polynomial::from_canonical(std::move(out));
}

Polynomial term_mul(const Polynomial& f, const Term& t) {
  if (!f.is_zero() && f.n_vars() != t.n_vars()) throw RingMismatch("term and polynomial belong to different rings");
  std::vector<Polynomial::Entry> out;
  out.reserve(f.size());
  // Multiplication by a term is monotone for lex order; order is preserved.
  for (const auto& [s, a] : f) out.emplace_back(mul(s, t), a);
  return Polynomial::from_canonical(std::move(out));
}

Polynomial normalize_at(const Polynomial& f, const Term& b) {
  const Rational c = f.coefficient_of(b);
  if (c == 0) throw std::invalid_argument("normalization term is not in the support");
  if (c == 1) return f;
  return scale(f, Rational(1) / c);
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
  Rational acc = 0;
  for (const auto& [t, c] : f) {
    if (t.n_vars() != point.size()) throw RingMismatch("evaluation point has the wrong dimension");
    Rational v = c;
    for (std::size_t i = 0; i < t.n_vars(); ++i) {
      for (Exponent k = 0; k < t[i]; ++k) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

std::string to_string(const Polynomial& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  // Highest term first reads more naturally.
  bool first = true;
  for (auto it = f.entries().rbegin(); it != f.entries().rend(); ++it) {
    const auto& [t, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (t.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << to_string(t, ring);
    }
  }
  return os.str();
}

PolySystem::PolySystem(Ring ring, std::vector<Polynomial> polys) : ring_(std::move(ring)), polys_(std::move(polys)) {
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (polys_[i].is_zero()) {
      throw std::invalid_argument("polynomial " + std::to_string(i) + " of the system is zero");
    }
    if (polys_[i].n_vars() != ring_.size()) {
      throw RingMismatch("polynomial " + std::to_string(i) + " does not belong to the system ring");
    }
  }
}

TermSet system_support(const PolySystem& F) {
  TermSet s;
  for (const auto& f : F.polys()) {
    for (const auto& e : f) s.insert(e.first);
  }
  return s;
}

}  // namespace bbd
