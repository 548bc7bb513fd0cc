#include "bbd/sat.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace bbd {

Validation34 validate_34(const CnfInstance& I) {
  Validation34 v;
  auto report = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };
  if (I.n_vars == 0) report("instance has no variables");

  std::vector<std::size_t> total(I.n_vars, 0), positive(I.n_vars, 0), negative(I.n_vars, 0);
  for (std::size_t l = 0; l < I.clauses.size(); ++l) {
    const Clause& c = I.clauses[l];
    const std::string where = "clause " + std::to_string(l + 1) + " " + to_string(c);
    if (c.size() != 3) report(where + ": has " + std::to_string(c.size()) + " literals, expected 3");
    std::set<std::size_t> vars;
    for (const auto& lit : c) {
      if (lit.var >= I.n_vars) {
        report(where + ": variable " + std::to_string(lit.var + 1) + " out of range");
        continue;
      }
      if (!vars.insert(lit.var).second) {
        const bool complementary = std::any_of(c.begin(), c.end(), [&](const Literal& o) {
          return o.var == lit.var && o.negated != lit.negated;
        });
        if (complementary) {
          report(where + ": contains X" + std::to_string(lit.var + 1) + " and its complement");
        } else {
          report(where + ": repeats variable X" + std::to_string(lit.var + 1));
        }
        continue;
      }
      ++total[lit.var];
      ++(lit.negated ? negative : positive)[lit.var];
    }
  }
  for (std::size_t i = 0; i < I.n_vars; ++i) {
    const std::string name = "X" + std::to_string(i + 1);
    if (total[i] > 4) report(name + " occurs in " + std::to_string(total[i]) + " clauses, more than 4");
    if (positive[i] == 0) report(name + " never occurs positively");
    if (negative[i] == 0) report(name + " never occurs negatively");
  }
  return v;
}

bool eval(const CnfInstance& I, const Assignment& A) {
  if (A.values.size() != I.n_vars) throw std::invalid_argument("assignment length does not match instance");
  return std::all_of(I.clauses.begin(), I.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& lit) { return A.values.at(lit.var) != lit.negated; });
  });
}

std::optional<Assignment> brute_force_sat(const CnfInstance& I, std::size_t max_vars) {
  if (I.n_vars > max_vars || I.n_vars >= 63) {
    throw SatLimitExceeded("brute force limited to " + std::to_string(max_vars) + " variables, instance has " +
                           std::to_string(I.n_vars));
  }
  const std::size_t n = I.n_vars;
  // Bit (n-1-i) of the counter holds X_{i+1}, so counting up walks
  // assignments in lexicographic order.
  Assignment a;
  a.values.assign(n, false);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < limit; ++code) {
    for (std::size_t i = 0; i < n; ++i) a.values[i] = ((code >> (n - 1 - i)) & 1U) != 0;
    if (eval(I, a)) return a;
  }
  return std::nullopt;
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  CnfInstance I;
  Clause current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == 'c') continue;
    if (first == "%") break;  // SATLIB trailer
    if (first == "p") {
      std::string fmt;
      long long nv = -1, nc = -1;
      if (have_header || !(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0) {
        throw DimacsError("line " + std::to_string(line_no) + ": malformed problem line");
      }
      have_header = true;
      I.n_vars = static_cast<std::size_t>(nv);
      declared_clauses = static_cast<std::size_t>(nc);
      continue;
    }
    if (!have_header) throw DimacsError("line " + std::to_string(line_no) + ": clause before problem line");
    std::istringstream cs(line);
    std::string tok;
    while (cs >> tok) {
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw DimacsError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (v == 0) {
        I.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > I.n_vars) {
        throw DimacsError("line " + std::to_string(line_no) + ": variable " + std::to_string(var) +
                          " exceeds declared count " + std::to_string(I.n_vars));
      }
      current.push_back(Literal{var - 1, v < 0});
    }
  }
  if (!have_header) throw DimacsError("missing problem line");
  if (!current.empty()) throw DimacsError("last clause is not terminated by 0");
  if (I.clauses.size() != declared_clauses) {
    throw DimacsError("declared " + std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(I.clauses.size()));
  }
  return I;
}

std::string to_dimacs(const CnfInstance& I) {
  std::ostringstream os;
  os << "p cnf " << I.n_vars << ' ' << I.clauses.size() << '\n';
  for (const auto& c : I.clauses) {
    for (const auto& lit : c) os << (lit.negated ? "-" : "") << lit.var + 1 << ' ';
    os << "0\n";
  }
  return os.str();
}

CnfInstance random_34(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t max_attempts) {
  if (n < 3) throw std::invalid_argument("random_34 needs at least 3 variables");
  std::mt19937_64 rng(seed);
  // Reduction modulo a small bound; the engine's output is fixed by the
  // standard, unlike std::uniform_int_distribution.
  auto draw = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    CnfInstance I;
    I.n_vars = n;
    for (std::size_t l = 0; l < m; ++l) {
      Clause c;
      while (c.size() < 3) {
        const std::size_t v = draw(n);
        if (std::any_of(c.begin(), c.end(), [&](const Literal& lit) { return lit.var == v; })) continue;
        c.push_back(Literal{v, draw(2) == 1});
      }
      I.clauses.push_back(std::move(c));
    }
    if (validate_34(I).ok) return I;
  }
  throw std::runtime_error("random_34: no valid instance with n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                           " within " + std::to_string(max_attempts) + " attempts");
}

std::string to_string(const Literal& lit) { return (lit.negated ? "~X" : "X") + std::to_string(lit.var + 1); }

std::string to_string(const Clause& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += " v ";
    s += to_string(c[i]);
  }
  return s + ")";
}

}  // namespace bbd
