#include "doctest.h"
#include "test_support.hpp"

using namespace bbd;
using namespace bbd::testing;

namespace {

const Term kOne = T({0, 0});
const Term kX = T({1, 0});
const Term kY = T({0, 1});

Polynomial random_poly(std::mt19937_64& rng) {
  const auto terms = terms_up_to_degree(2, 3);
  std::vector<Polynomial::Entry> e;
  const int k = static_cast<int>(rng() % 5);
  for (int i = 0; i < k; ++i) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 4) + 1;
    Rational q(num, den);
    q.canonicalize();
    e.emplace_back(terms[rng() % terms.size()], q);
  }
  return Polynomial::from_entries(std::move(e));
}

}  // namespace

TEST_CASE("support") {
  CHECK(support(Polynomial{}).empty());
  CHECK(support(P({{1, kX}, {-1, kOne}})) == S({kX, kOne}));
}

TEST_CASE("add, scale, term_mul") {
  CHECK(add(P({{1, kX}, {-1, kOne}}), P({{1, kOne}, {-1, kX}})).is_zero());
  CHECK(term_mul(P({{1, kX}, {-1, kOne}}), kY) == P({{1, T({1, 1})}, {-1, kY}}));
  CHECK(scale(P({{2, kX}}), Q("1/2")) == P({{1, kX}}));
  CHECK(scale(P({{2, kX}}), 0).is_zero());
  CHECK_THROWS_AS(add(P({{1, kX}}), P({{1, T({1})}})), RingMismatch);
}

TEST_CASE("coefficient_of") {
  CHECK(P({{1, kX}, {-1, kOne}}).coefficient_of(kX) == 1);
  CHECK(P({{1, kX}, {-1, kOne}}).coefficient_of(kY) == 0);
  CHECK(P({{3, T({1, 1})}, {2, kOne}}).coefficient_of(kOne) == 2);
}

TEST_CASE("normalize_at") {
  CHECK(normalize_at(P({{2, kX}, {-4, kOne}}), kX) == P({{1, kX}, {-2, kOne}}));
  CHECK(normalize_at(P({{1, kX}, {-1, kOne}}), kX) == P({{1, kX}, {-1, kOne}}));
  CHECK_THROWS_AS(normalize_at(P({{1, kX}, {-1, kOne}}), kY), std::invalid_argument);
}

TEST_CASE("exact thirds") {
  const Polynomial third = P({{Q("1/3"), kX}});
  CHECK(add(add(third, third), third) == P({{1, kX}}));
  CHECK(P({{Q("1/3"), kX}, {Q("1/3"), kX}, {Q("1/3"), kX}}).coefficient_of(kX) == 1);
}

TEST_CASE("from_entries merges duplicates and drops zeros") {
  const Polynomial f = P({{2, kX}, {-2, kX}, {1, kY}});
  CHECK(f.size() == 1);
  CHECK(f.entries().front().first == kY);
}

TEST_CASE("arithmetic laws on random samples") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Polynomial f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    CHECK(add(f, g) == add(g, f));
    CHECK(add(add(f, g), h) == add(f, add(g, h)));
    CHECK(add(f, scale(f, -1)).is_zero());
    CHECK(subtract(f, g) == add(f, scale(g, -1)));
    const Term t = T({static_cast<Exponent>(rng() % 3), static_cast<Exponent>(rng() % 3)});
    const Polynomial ft = term_mul(f, t);
    CHECK(ft.size() == f.size());
    TermSet shifted;
    for (const auto& s : support(f)) shifted.insert(mul(s, t));
    CHECK(support(ft) == shifted);
  }
}

TEST_CASE("evaluate") {
  const Polynomial f = P({{1, T({2, 0})}, {-1, kY}, {Q("1/2"), kOne}});
  CHECK(evaluate(f, {Rational(3), Rational(2)}) == Q("15/2"));
}

TEST_CASE("hash agrees with equality") {
  const Polynomial a = P({{1, kX}, {2, kY}});
  const Polynomial b = P({{2, kY}, {1, kX}});
  CHECK(a == b);
  CHECK(PolynomialHash{}(a) == PolynomialHash{}(b));
}

TEST_CASE("poly system") {
  CHECK_THROWS_AS(PolySystem(xy(), {Polynomial{}}), std::invalid_argument);
  CHECK_THROWS_AS(PolySystem(xy(), {P({{1, T({1})}})}), std::invalid_argument);
  const PolySystem F(xy(), {P({{1, kX}, {-1, kOne}}), P({{1, kY}, {-2, kOne}})});
  CHECK(system_support(F) == S({kX, kY, kOne}));
  CHECK(to_string(F[1], F.ring()) == "y - 2");
}
