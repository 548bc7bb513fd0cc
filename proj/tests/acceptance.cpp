// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bbd/border_basis.hpp"
#include "bbd/order_ideal.hpp"
#include "bbd/polynomial.hpp"
#include "bbd/reduction.hpp"
#include "bbd/sat.hpp"

using namespace bbd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int g_failed = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Term T(std::initializer_list<Exponent> e) { return Term(e); }

Polynomial P(std::initializer_list<std::pair<Rational, Term>> entries) {
  std::vector<Polynomial::Entry> v;
  for (const auto& [c, t] : entries) v.emplace_back(t, c);
  return Polynomial::from_entries(std::move(v));
}

Literal lit(int v) { return {static_cast<std::size_t>(std::abs(v) - 1), v < 0}; }

CnfInstance cnf(std::size_t n, std::vector<std::vector<int>> clauses) {
  CnfInstance I{n, {}};
  for (const auto& c : clauses) {
    Clause cl;
    for (int v : c) cl.push_back(lit(v));
    I.clauses.push_back(cl);
  }
  return I;
}

std::vector<CnfInstance> corpus() {
  std::vector<CnfInstance> out{
      cnf(3, {{1, 2, 3}, {-1, -2, -3}}),
      cnf(3, {{1, -2, 3}, {-1, 2, -3}}),
      cnf(3, {{1, -2, 3}, {-1, 2, 3}, {1, 2, -3}}),
      cnf(3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}}),
  };
  auto add = [&](const CnfInstance& I) {
    if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(I);
  };
  for (std::uint64_t seed = 0; out.size() < 24 && seed < 1000; ++seed) add(random_34(3, 2 + seed % 2, seed));
  return out;
}

// ---------------------------------------------------------------------------

void criterion1() {
  const auto t0 = Clock::now();
  const auto universe = terms_up_to_degree(2, 3);
  std::set<std::vector<Term>> borders;
  for (const auto& O : enumerate_order_ideals(2, 3)) borders.insert(border(O).sorted());
  std::size_t sets = 0, disagreements = 0;
  const std::size_t k = universe.size();
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    TermSet B;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) B.insert(universe[i]);
    }
    ++sets;
    const bool oracle = borders.count(B.sorted()) > 0;
    if (check_border_conditions(B).is_border != oracle) ++disagreements;
  }
  const double secs = seconds_since(t0);
  report(1, "border characterization vs order-ideal enumeration", disagreements == 0 && secs < 60,
         std::to_string(sets) + " sets, " + std::to_string(disagreements) + " disagreements, " + fmt("%.2f s", secs));
}

void criterion2() {
  std::size_t checked = 0, failures = 0;
  auto check = [&](const TermSet& O) {
    ++checked;
    const TermSet B = border(O);
    if (!check_border_conditions(B).is_border || reconstruct_order_ideal(B) != O) ++failures;
  };
  for (const auto& O : enumerate_order_ideals(2, 4)) check(O);
  const std::size_t two_var = checked;

  std::mt19937_64 rng(20240601);
  const auto universe = terms_up_to_degree(3, 3);
  for (int i = 0; i < 200; ++i) {
    // Divisor closure of a few random terms.
    TermSet O;
    O.insert(Term::one(3));
    const int gens = 1 + static_cast<int>(rng() % 4);
    for (int g = 0; g < gens; ++g) {
      const Term& top = universe[rng() % universe.size()];
      for (const auto& t : universe) {
        if (divides(t, top)) O.insert(t);
      }
    }
    check(O);
  }
  report(2, "reconstruction round trip", failures == 0,
         std::to_string(two_var) + " ideals in 2 vars (deg <= 4) + 200 random in 3 vars (deg <= 3), " +
             std::to_string(failures) + " failures");
}

// Commuting-matrices oracle: for a prebasis with order ideal O, the
// multiplication matrices built from the rewrite rules must commute.
bool multiplication_matrices_commute(const PolySystem& F, const BorderSelection& sel, const std::vector<Term>& O) {
  auto index = [&](const Term& t) { return static_cast<std::size_t>(std::find(O.begin(), O.end(), t) - O.begin()); };
  const std::size_t n = O.size();
  // Normal form of a term of O u border(O) as a vector over O.
  auto nf = [&](const Term& t) {
    std::vector<Rational> v(n);
    const std::size_t i = index(t);
    if (i < n) {
      v[i] = 1;
      return v;
    }
    for (std::size_t j = 0; j < F.size(); ++j) {
      if (sel.chosen[j] != t) continue;
      const Polynomial g = normalize_at(F[j], t);
      for (const auto& [s, c] : g) {
        if (s != t) v[index(s)] -= c;
      }
    }
    return v;
  };
  std::vector<std::vector<std::vector<Rational>>> M;
  for (std::size_t var = 0; var < F.n_vars(); ++var) {
    std::vector<std::vector<Rational>> m;
    for (const auto& o : O) m.push_back(nf(o.times_var(var)));  // column per basis term
    M.push_back(m);
  }
  auto apply = [&](const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& v) {
    std::vector<Rational> r(n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t row = 0; row < n; ++row) r[row] += m[c][row] * v[c];
    }
    return r;
  };
  for (std::size_t a = 0; a < M.size(); ++a) {
    for (std::size_t b = a + 1; b < M.size(); ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> e(n);
        e[c] = 1;
        if (apply(M[a], apply(M[b], e)) != apply(M[b], apply(M[a], e))) return false;
      }
    }
  }
  return true;
}

Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

void criterion3() {
  const Ring ring({"x", "y"});
  const Term one = T({0, 0}), x = T({1, 0}), y = T({0, 1}), xy = T({1, 1});
  const Term x2 = T({2, 0}), x2y = T({2, 1}), xy2 = T({1, 2}), y2 = T({0, 2});
  const std::vector<Term> O{one, x, y, xy};
  const std::vector<std::vector<Rational>> grid{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

  const PolySystem F(ring, {P({{1, x2}, {-1, x}}), P({{1, x2y}, {-1, xy}}), P({{1, xy2}, {-1, xy}}), P({{1, y2}, {-1, y}})});
  const PolySystem G(ring,
                     {P({{1, x2}, {-1, y}, {-1, x}}), P({{1, x2y}, {-1, xy}}), P({{1, xy2}, {-1, xy}}), P({{1, y2}, {-1, y}})});
  const BorderSelection sel{{x2, x2y, xy2, y2}};

  // Oracle for F: every generator vanishes on the grid and the O-evaluation
  // matrix is invertible, so F is the O-border basis of the grid's ideal.
  bool vanishes = true;
  for (const auto& f : F.polys()) {
    for (const auto& p : grid) vanishes = vanishes && evaluate(f, p) == 0;
  }
  std::vector<std::vector<Rational>> E;
  for (const auto& p : grid) {
    std::vector<Rational> row;
    for (const auto& o : O) row.push_back(evaluate(Polynomial::monomial(o), p));
    E.push_back(row);
  }
  const bool invertible = det(E) != 0;
  const bool f_oracle = vanishes && invertible && multiplication_matrices_commute(F, sel, O);

  const auto df = detect(F);
  const bool f_ok = df.outcome == DetectOutcome::kYes && df.certificate->order_ideal == TermSet(O) && f_oracle;

  // Oracle for G: its O-multiplication matrices do not commute, and it does
  // not vanish on the grid, so it is not an O-border basis.
  const bool g_commutes = multiplication_matrices_commute(G, sel, O);
  bool g_vanishes = true;
  for (const auto& p : grid) g_vanishes = g_vanishes && evaluate(G[0], p) == 0;
  const auto dg = detect(G);
  const bool g_detect_not_O = dg.outcome == DetectOutcome::kNo ||
                              (dg.certificate && dg.certificate->order_ideal != TermSet(O));
  const bool g_ok = !g_commutes && !g_vanishes && g_detect_not_O && dg.outcome != DetectOutcome::kBudgetExceeded;

  report(3, "Buchberger criterion on the 2x2 grid", f_ok && g_ok,
         std::string("grid: ") + to_string(df.outcome) + (f_oracle ? " (evaluation oracle agrees)" : " (oracle disagrees)") +
             "; perturbed: " + to_string(dg.outcome) + (g_commutes ? " (oracle: commuting)" : " (oracle: not a basis for O)"));
}

struct CorpusRun {
  CnfInstance I;
  std::optional<Assignment> least;
  ReducedInstance R;
  DetectionResult det;
  double secs;
};

std::vector<CorpusRun> g_runs;

void criterion4() {
  std::size_t agree = 0, sat = 0, unsat = 0;
  double worst = 0;
  bool within = true;
  for (const auto& I : corpus()) {
    const auto t0 = Clock::now();
    auto least = brute_force_sat(I);
    ReducedInstance R = reduce(I);
    SearchBudget b;
    b.max_candidates = (std::uint64_t{1} << I.n_vars) * static_cast<std::uint64_t>(std::pow(3, I.clauses.size()));
    b.timeout_secs = 120;
    DetectionResult det = detect(R.system, b);
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    within = within && secs < 120 && det.outcome != DetectOutcome::kBudgetExceeded;
    if (least.has_value() == (det.outcome == DetectOutcome::kYes)) ++agree;
    (least ? sat : unsat)++;
    g_runs.push_back({I, std::move(least), std::move(R), std::move(det), secs});
  }
  const std::size_t n = g_runs.size();
  report(4, "SAT iff reduced system is a border basis", n >= 20 && agree == n && within,
         std::to_string(agree) + "/" + std::to_string(n) + " agree (" + std::to_string(sat) + " SAT, " +
             std::to_string(unsat) + " UNSAT), slowest " + fmt("%.2f s", worst));
}

void criterion5() {
  std::size_t ok = 0, total = 0;
  for (const auto& run : g_runs) {
    if (!run.least) continue;
    ++total;
    const auto rep = verify_selection(run.R.system, assignment_to_border(run.R, *run.least));
    if (rep.accepted() && eval(run.I, border_to_assignment(run.R, *rep.certificate)) &&
        check_varclause_property(run.R, *rep.certificate)) {
      ++ok;
    }
  }
  report(5, "satisfying assignment -> certificate -> satisfying assignment", total > 0 && ok == total,
         std::to_string(ok) + "/" + std::to_string(total) + " instances");
}

void criterion6() {
  std::size_t violations = 0;
  for (const auto& run : g_runs) {
    const auto& R = run.R;
    const std::size_t N = R.rr.size();
    for (const auto& g : R.gadgets) {
      if (total_degree(g.t_clause) != 4) ++violations;
      if (total_degree(g.t_pos) != 7 || total_degree(g.t_neg) != 7) ++violations;
      if (g.p_all.size() > 4) ++violations;
      for (const auto& t : g.region) {
        if (indeterminate_count(t) < g.p_all.size() + 2) ++violations;
      }
    }
    for (std::size_t i = 0; i < R.gadgets.size(); ++i) {
      for (std::size_t j = i + 1; j < R.gadgets.size(); ++j) {
        for (const auto& t : R.gadgets[i].region) violations += R.gadgets[j].region.contains(t) ? 1 : 0;
      }
    }
    TermSet seen;
    for (const auto& f : R.system.polys()) {
      for (const auto& [t, c] : f) {
        const auto d = total_degree(t);
        if (d != 7 && d != 8) ++violations;
        if (!seen.insert(t)) ++violations;
      }
    }
    std::uint64_t f1 = 0;
    for (std::size_t j = R.degree8_begin(); j < R.system.size(); ++j) f1 += R.system[j].size() == 1 ? 1 : 0;
    if (f1 != R.degree8_count) ++violations;
    // |F1| = C(N+7, 8), by the product formula.
    double binom = 1;
    for (int k = 1; k <= 8; ++k) binom = binom * static_cast<double>(N - 1 + k) / k;
    if (static_cast<double>(R.degree8_count) != std::round(binom)) ++violations;
  }
  report(6, "reduction structural invariants", violations == 0,
         std::to_string(g_runs.size()) + " instances, " + std::to_string(violations) + " violations");
}

double best_of_3(const std::function<bool()>& f, bool& ok) {
  double best = 1e300;
  for (int i = 0; i < 3; ++i) {
    const auto t0 = Clock::now();
    ok = f() && ok;
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

void criterion7() {
  // Largest corpus instance: n = 3, m = 3, N = 13.
  const CorpusRun* big = nullptr;
  for (const auto& run : g_runs) {
    if (run.least && run.R.rr.size() == 13) big = &run;
  }
  bool ok = big != nullptr;
  double t_big = 0;
  if (big) {
    const auto sel = assignment_to_border(big->R, *big->least);
    t_big = best_of_3([&] { return verify_certificate(big->R.system, sel); }, ok);
    ok = ok && big->R.degree8_count == 125970;
  }

  // Staircase family F = T_8 in N variables with O = T_{<=7}; defined for
  // every N, unlike reduced systems whose N = 2n + 2m + 1 starts at 11.
  std::vector<double> times, sizes;
  for (std::size_t N : {9u, 11u, 13u}) {
    std::vector<Polynomial> polys;
    BorderSelection sel;
    for (const auto& t : TermsOfDegree(N, 8)) {
      polys.push_back(Polynomial::monomial(t));
      sel.chosen.push_back(t);
    }
    const PolySystem F(Ring::with_default_names(N), std::move(polys));
    times.push_back(best_of_3([&] { return verify_certificate(F, sel); }, ok));
    sizes.push_back(static_cast<double>(F.size()));
  }
  const double exponent = std::log(times[2] / times[0]) / std::log(sizes[2] / sizes[0]);
  const bool fit_ok = exponent <= 3.0;
  report(7, "verifier time budget and polynomial growth", ok && t_big < 30 && fit_ok,
         "reduced N=13: " + fmt("%.2f s", t_big) + "; staircase N=9/11/13: " + fmt("%.3f", times[0]) + "/" +
             fmt("%.3f", times[1]) + "/" + fmt("%.3f s", times[2]) + ", fitted exponent in size " +
             fmt("%.2f", exponent));
}

void criterion8() {
  std::mt19937_64 rng(8);
  std::vector<std::pair<const PolySystem*, BorderCertificate>> sources;
  for (const auto& run : g_runs) {
    if (run.det.certificate && sources.size() < 3) sources.emplace_back(&run.R.system, *run.det.certificate);
  }
  const Ring ring({"x", "y"});
  const PolySystem grid(ring, {P({{1, T({2, 0})}, {-1, T({1, 0})}}), P({{1, T({2, 1})}, {-1, T({1, 1})}}),
                               P({{1, T({1, 2})}, {-1, T({1, 1})}}), P({{1, T({0, 2})}, {-1, T({0, 1})}})});
  const auto gd = detect(grid);
  if (gd.certificate) sources.emplace_back(&grid, *gd.certificate);

  std::size_t rejected = 0, with_witness = 0, total = 0;
  std::size_t swaps = 0, removals = 0, duplicates = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& [F, cert] = sources[static_cast<std::size_t>(i) % sources.size()];
    BorderCertificate bad = cert;
    const std::size_t n = bad.selection.chosen.size();
    // Bias picks towards the polynomials with several terms.
    const std::size_t a = (i % 2 == 0) ? rng() % std::min<std::size_t>(n, 6) : rng() % n;
    std::size_t b = rng() % n;
    while (b == a) b = rng() % n;
    std::set<FailureKind> expected;
    switch (i % 3) {
      case 0:
        std::swap(bad.selection.chosen[a], bad.selection.chosen[b]);
        expected = {FailureKind::kTermNotInSupport};
        ++swaps;
        break;
      case 1:
        bad.border.erase(bad.selection.chosen[a]);
        expected = {FailureKind::kCertificateMismatch};
        ++removals;
        break;
      default:
        bad.selection.chosen[a] = bad.selection.chosen[b];
        expected = {FailureKind::kCertificateMismatch, FailureKind::kTermNotInSupport,
                    FailureKind::kDuplicateBorderTerm};
        ++duplicates;
        break;
    }
    ++total;
    const auto rep = verify_certificate_report(*F, bad);
    if (rep.accepted()) continue;
    ++rejected;
    const auto& f = rep.failures.front();
    if (expected.count(f.kind) && !f.terms.empty()) ++with_witness;
  }
  report(8, "tampered certificates rejected", rejected == total && with_witness == total && total == 50,
         std::to_string(rejected) + "/" + std::to_string(total) + " rejected, " + std::to_string(with_witness) +
             " with the expected witness (" + std::to_string(swaps) + " swaps, " + std::to_string(removals) +
             " removals, " + std::to_string(duplicates) + " duplicates)");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%s: %d of 8 criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
  return g_failed ? 1 : 0;
}
