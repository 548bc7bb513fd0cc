// JSON and file I/O for terms, term sets, polynomial systems, certificates,
// reports and CNF instances.
//
//   term         [e_1, ..., e_N]
//   term set     [term, ...] in lex order, or {"vars": [...], "terms": [...]}
//   system       {"vars": [...], "polys": [[[num, den, term], ...], ...]}
//                plus an optional "reduction" block for reduced instances
//   certificate  {"selection": [...], "order_ideal": [...], "border": [...]}
//
// Coefficient numerators and denominators are JSON integers when they fit in
// 64 bits and decimal strings otherwise.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bbd/border_basis.hpp"
#include "bbd/order_ideal.hpp"
#include "bbd/polynomial.hpp"
#include "bbd/reduction.hpp"
#include "bbd/sat.hpp"
#include "bbd/term.hpp"
#include "bbd/term_set.hpp"

namespace bbd::io {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Term& t);
/// n_vars == 0 accepts any length.
Term term_from_json(const Json& j, std::size_t n_vars = 0);

Json to_json(const TermSet& S);

struct TermSetFile {
  std::optional<Ring> ring;
  TermSet terms;
};
TermSetFile termset_from_json(const Json& j);

Json to_json(const Rational& q, const Term& t);
Json to_json(const Polynomial& f);
Json to_json(const PolySystem& F);
PolySystem system_from_json(const Json& j);

/// System JSON with the "reduction" block: n, m, variable-name map, clauses,
/// section sizes and per-variable gadget data.
Json to_json(const ReducedInstance& R);

Json to_json(const BorderCertificate& cert);
/// Terms must have n_vars entries.
BorderCertificate certificate_from_json(const Json& j, std::size_t n_vars);

Json to_json(const BorderViolation& v, const Ring& ring);
Json to_json(const BorderCheckReport& report, const Ring& ring);
Json to_json(const VerificationReport& report, const Ring& ring);
Json to_json(const SearchStats& stats);

/// {"n_vars": n, "clauses": [[1, -2, 3], ...]} with DIMACS literal numbering.
Json to_json(const CnfInstance& I);
CnfInstance cnf_from_json(const Json& j);

Json to_json(const Assignment& A);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
Json parse_json(const std::string& text, const std::string& what);

}  // namespace bbd::io
