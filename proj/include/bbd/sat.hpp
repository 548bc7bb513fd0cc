// 3,4-SAT instances: representation, syntactic validation, DIMACS I/O, a
// seeded generator and a brute-force satisfiability oracle.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbd {

struct Literal {
  std::size_t var = 0;  // 0-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct CnfInstance {
  std::size_t n_vars = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfInstance&) const = default;
};

struct Assignment {
  std::vector<bool> values;

  bool operator==(const Assignment&) const = default;
};

struct Validation34 {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Exactly three distinct variables per clause, no complementary pair in a
/// clause, each variable used at most four times in total, and each variable
/// occurring at least once positively and at least once negatively.
Validation34 validate_34(const CnfInstance& I);

/// Throws std::invalid_argument if the lengths differ.
bool eval(const CnfInstance& I, const Assignment& A);

class SatLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least satisfying assignment, ordering assignments lexicographically with
/// false < true and X1 most significant; nullopt if unsatisfiable.
std::optional<Assignment> brute_force_sat(const CnfInstance& I, std::size_t max_vars = 24);

class DimacsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CnfInstance parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfInstance& I);

/// Random 3,4-SAT instance, deterministic per seed. Draws clauses until
/// validate_34 passes; throws std::runtime_error after max_attempts draws.
CnfInstance random_34(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t max_attempts = 100000);

std::string to_string(const Literal& lit);
std::string to_string(const Clause& c);

}  // namespace bbd
