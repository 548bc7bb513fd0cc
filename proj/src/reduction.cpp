#include "bbd/reduction.hpp"

#include <algorithm>

namespace bbd {

namespace {

std::vector<std::string> reduction_names(std::size_t n, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("xb" + std::to_string(i + 1));
  for (std::size_t l = 0; l < m; ++l) names.push_back("c" + std::to_string(l + 1));
  for (std::size_t l = 0; l < m; ++l) names.push_back("xc" + std::to_string(l + 1));
  names.push_back("X");
  return names;
}

void require_valid(const CnfInstance& I) {
  auto v = validate_34(I);
  if (!v.ok) {
    std::string msg = "not a valid 3,4-SAT instance";
    if (!v.violations.empty()) msg += ": " + v.violations.front();
    throw InvalidInstance(msg, std::move(v.violations));
  }
}

}  // namespace

ReductionRing::ReductionRing(std::size_t n, std::size_t m) : n_(n), m_(m), ring_(reduction_names(n, m)) {}

Term clause_variant(const ReductionRing& rr, const Term& t, std::size_t l) {
  return t.times_var(rr.x_c(l)).over_var(rr.c(l));
}

VariableGadget build_gadget(const CnfInstance& I, const ReductionRing& rr, std::size_t i) {
  if (i >= I.n_vars) throw std::out_of_range("build_gadget: variable index out of range");
  const std::size_t N = rr.size();
  VariableGadget g;
  g.var = i;

  std::vector<std::size_t> pos_clauses, neg_clauses;
  for (std::size_t l = 0; l < I.clauses.size(); ++l) {
    for (const auto& lit : I.clauses[l]) {
      if (lit.var != i) continue;
      (lit.negated ? neg_clauses : pos_clauses).push_back(l);
      g.clauses.push_back(l);
    }
  }
  std::sort(g.clauses.begin(), g.clauses.end());
  g.clauses.erase(std::unique(g.clauses.begin(), g.clauses.end()), g.clauses.end());
  if (g.clauses.size() > 4) throw InvalidInstance("variable occurs in more than four clauses", {});

  ExponentVector e(N, 0);
  for (std::size_t l : g.clauses) e[rr.c(l)] = 1;
  e[rr.big_x()] = static_cast<Exponent>(4 - g.clauses.size());
  g.t_clause = Term(e);

  ExponentVector pos = e;
  pos[rr.x(i)] += 1;
  pos[rr.x_bar(i)] += 2;
  g.t_pos = Term(pos);
  ExponentVector neg = e;
  neg[rr.x(i)] += 2;
  neg[rr.x_bar(i)] += 1;
  g.t_neg = Term(neg);

  for (std::size_t l : pos_clauses) {
    g.k_pos.insert(clause_variant(rr, g.t_pos, l));
    g.p_pos.insert(g.t_pos.times_var(rr.x_c(l)));
  }
  for (std::size_t l : neg_clauses) {
    g.k_neg.insert(clause_variant(rr, g.t_neg, l));
    g.p_neg.insert(g.t_neg.times_var(rr.x_c(l)));
  }
  for (const auto* part : {&g.k_pos, &g.k_neg}) {
    for (const auto& t : *part) g.k_all.insert(t);
  }
  g.k_all.insert(g.t_pos);
  g.k_all.insert(g.t_neg);
  for (const auto* part : {&g.p_pos, &g.p_neg}) {
    for (const auto& t : *part) g.p_all.insert(t);
  }
  for (const auto& p : g.p_all) {
    for (auto& c : children(p)) g.region.insert(c);
  }
  return g;
}

const Term& ReducedInstance::literal_term(const Literal& lit) const {
  const auto& g = gadgets.at(lit.var);
  return lit.negated ? g.t_neg : g.t_pos;
}

ReducedInstance reduce(const CnfInstance& I, const ReductionOptions& options) {
  require_valid(I);
  ReductionRing rr(I.n_vars, I.clauses.size());
  const std::size_t N = rr.size();
  const std::uint64_t degree8 = count_terms_of_degree(N, 8);
  if (degree8 > options.max_degree8_terms) {
    throw std::length_error("reduction needs " + std::to_string(degree8) + " degree-8 terms, cap is " +
                            std::to_string(options.max_degree8_terms));
  }

  std::vector<VariableGadget> gadgets;
  gadgets.reserve(I.n_vars);
  for (std::size_t i = 0; i < I.n_vars; ++i) gadgets.push_back(build_gadget(I, rr, i));

  std::vector<Polynomial> polys;
  polys.reserve(I.n_vars + I.clauses.size() + static_cast<std::size_t>(degree8) + 4 * N * I.n_vars);

  for (const auto& g : gadgets) {
    polys.push_back(Polynomial::from_entries({{g.t_pos, Rational(1)}, {g.t_neg, Rational(1)}}));
  }
  for (std::size_t l = 0; l < I.clauses.size(); ++l) {
    std::vector<Polynomial::Entry> entries;
    for (const auto& lit : I.clauses[l]) {
      const auto& g = gadgets[lit.var];
      entries.emplace_back(clause_variant(rr, lit.negated ? g.t_neg : g.t_pos, l), Rational(1));
    }
    polys.push_back(Polynomial::from_entries(std::move(entries)));
  }

  std::vector<Term> region_terms;
  for (const auto& g : gadgets) {
    for (const auto& t : g.region) {
      if (!g.k_all.contains(t)) region_terms.push_back(t);
    }
  }
  std::sort(region_terms.begin(), region_terms.end());
  for (const auto& t : region_terms) polys.push_back(Polynomial::monomial(t));

  for (const auto& t : TermsOfDegree(N, 8)) polys.push_back(Polynomial::monomial(t));

  ReducedInstance R{I, rr, std::move(gadgets), PolySystem(rr.ring(), std::move(polys)), region_terms.size(),
                    static_cast<std::size_t>(degree8)};
  return R;
}

BorderSelection assignment_to_border(const ReducedInstance& R, const Assignment& A) {
  const CnfInstance& I = R.instance;
  if (A.values.size() != I.n_vars) throw std::invalid_argument("assignment length does not match instance");
  BorderSelection sel;
  sel.chosen.reserve(R.system.size());
  for (std::size_t i = 0; i < I.n_vars; ++i) {
    const auto& g = R.gadgets[i];
    sel.chosen.push_back(A.values[i] ? g.t_neg : g.t_pos);
  }
  for (std::size_t l = 0; l < I.clauses.size(); ++l) {
    const Clause& c = I.clauses[l];
    // A true literal's gadget term stays out of the border.
    auto it = std::find_if(c.begin(), c.end(), [&](const Literal& lit) { return A.values[lit.var] != lit.negated; });
    if (it == c.end()) {
      throw std::invalid_argument("assignment falsifies clause " + std::to_string(l + 1) + " " + to_string(c));
    }
    sel.chosen.push_back(clause_variant(R.rr, R.literal_term(*it), l));
  }
  for (std::size_t j = R.region_begin(); j < R.system.size(); ++j) {
    sel.chosen.push_back(R.system[j].entries().front().first);
  }
  return sel;
}

Assignment border_to_assignment(const ReducedInstance& R, const BorderCertificate& cert) {
  Assignment A;
  A.values.resize(R.instance.n_vars);
  for (std::size_t i = 0; i < R.instance.n_vars; ++i) {
    const auto& g = R.gadgets[i];
    const bool pos_in = cert.order_ideal.contains(g.t_pos);
    const bool neg_in = cert.order_ideal.contains(g.t_neg);
    if (pos_in == neg_in) {
      throw std::invalid_argument("certificate puts " + std::string(pos_in ? "both" : "neither") +
                                  " gadget term(s) of X" + std::to_string(i + 1) + " in the order ideal");
    }
    A.values[i] = pos_in;
  }
  return A;
}

bool check_varclause_property(const ReducedInstance& R, const BorderCertificate& cert) {
  for (std::size_t l = 0; l < R.instance.clauses.size(); ++l) {
    for (const auto& lit : R.instance.clauses[l]) {
      const Term& t = R.literal_term(lit);
      if (cert.border.contains(t) && cert.border.contains(clause_variant(R.rr, t, l))) return false;
    }
  }
  return true;
}

}  // namespace bbd
