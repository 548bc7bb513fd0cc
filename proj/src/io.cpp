#include "bbd/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace bbd::io {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()), 10);
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    mpz_class z(static_cast<long>(v));
    return z;
  }
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw FormatError("not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  throw FormatError("expected an integer, got " + j.dump());
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw FormatError(msg);
}

Json terms_to_json(const std::vector<Term>& terms) {
  Json a = Json::array();
  for (const auto& t : terms) a.push_back(to_json(t));
  return a;
}

TermSet termset_body(const Json& j, std::size_t n_vars) {
  require(j.is_array(), "term set must be an array");
  TermSet S;
  for (const auto& e : j) {
    Term t = term_from_json(e, n_vars);
    if (n_vars == 0) n_vars = t.n_vars();
    S.insert(std::move(t));
  }
  return S;
}

}  // namespace

Json to_json(const Term& t) {
  Json a = Json::array();
  for (auto e : t.exponents()) a.push_back(e);
  return a;
}

Term term_from_json(const Json& j, std::size_t n_vars) {
  require(j.is_array(), "term must be an array of exponents, got " + j.dump());
  require(n_vars == 0 || j.size() == n_vars,
          "term " + j.dump() + " has " + std::to_string(j.size()) + " exponents, expected " + std::to_string(n_vars));
  ExponentVector e;
  e.reserve(j.size());
  for (const auto& x : j) {
    require(x.is_number_unsigned() || (x.is_number_integer() && x.get<std::int64_t>() >= 0),
            "exponent must be a non-negative integer, got " + x.dump());
    const auto v = x.get<std::uint64_t>();
    require(v <= std::numeric_limits<Exponent>::max(), "exponent too large: " + x.dump());
    e.push_back(static_cast<Exponent>(v));
  }
  return Term(std::move(e));
}

Json to_json(const TermSet& S) { return terms_to_json(S.sorted()); }

TermSetFile termset_from_json(const Json& j) {
  TermSetFile f;
  if (j.is_object()) {
    require(j.contains("terms"), "term set object needs a \"terms\" array");
    std::size_t n = 0;
    if (j.contains("vars")) {
      f.ring = Ring(j.at("vars").get<std::vector<std::string>>());
      n = f.ring->size();
    }
    f.terms = termset_body(j.at("terms"), n);
  } else {
    f.terms = termset_body(j, 0);
  }
  return f;
}

Json to_json(const Rational& q, const Term& t) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den()), to_json(t)});
}

Json to_json(const Polynomial& f) {
  Json a = Json::array();
  for (const auto& [t, c] : f) a.push_back(to_json(c, t));
  return a;
}

Json to_json(const PolySystem& F) {
  Json polys = Json::array();
  for (const auto& f : F.polys()) polys.push_back(to_json(f));
  return Json{{"vars", F.ring().names()}, {"polys", std::move(polys)}};
}

PolySystem system_from_json(const Json& j) {
  require(j.is_object(), "system must be a JSON object");
  require(j.contains("vars") && j.at("vars").is_array(), "system needs a \"vars\" array");
  require(j.contains("polys") && j.at("polys").is_array(), "system needs a \"polys\" array");
  Ring ring(j.at("vars").get<std::vector<std::string>>());
  std::vector<Polynomial> polys;
  polys.reserve(j.at("polys").size());
  for (const auto& pj : j.at("polys")) {
    require(pj.is_array(), "polynomial must be an array of [num, den, term] entries");
    std::vector<Polynomial::Entry> entries;
    entries.reserve(pj.size());
    for (const auto& ej : pj) {
      require(ej.is_array() && ej.size() == 3, "entry must be [num, den, term], got " + ej.dump());
      mpz_class num = integer_from_json(ej[0]);
      mpz_class den = integer_from_json(ej[1]);
      require(den != 0, "zero denominator in " + ej.dump());
      Rational q(num, den);
      q.canonicalize();
      entries.emplace_back(term_from_json(ej[2], ring.size()), std::move(q));
    }
    polys.push_back(Polynomial::from_entries(std::move(entries)));
  }
  return PolySystem(std::move(ring), std::move(polys));
}

Json to_json(const ReducedInstance& R) {
  Json j = to_json(R.system);
  const auto& rr = R.rr;
  Json var_map = Json::object();
  for (std::size_t i = 0; i < rr.n(); ++i) {
    var_map["X" + std::to_string(i + 1)] = {{"x", rr.ring().name(rr.x(i))}, {"x_bar", rr.ring().name(rr.x_bar(i))}};
  }
  Json clause_map = Json::object();
  for (std::size_t l = 0; l < rr.m(); ++l) {
    clause_map["C" + std::to_string(l + 1)] = {{"c", rr.ring().name(rr.c(l))}, {"x_c", rr.ring().name(rr.x_c(l))}};
  }
  Json gadgets = Json::array();
  for (const auto& g : R.gadgets) {
    Json clauses = Json::array();
    for (auto l : g.clauses) clauses.push_back(l + 1);
    gadgets.push_back({{"var", g.var + 1},
                       {"clauses", clauses},
                       {"t_clause", to_json(g.t_clause)},
                       {"t_pos", to_json(g.t_pos)},
                       {"t_neg", to_json(g.t_neg)},
                       {"k_size", g.k_all.size()},
                       {"p_size", g.p_all.size()},
                       {"region_size", g.region.size()}});
  }
  j["reduction"] = {{"n", rr.n()},
                    {"m", rr.m()},
                    {"N", rr.size()},
                    {"variables", var_map},
                    {"clause_variables", clause_map},
                    {"big_x", rr.ring().name(rr.big_x())},
                    {"cnf", to_json(R.instance)},
                    {"sections",
                     {{"v", rr.n()}, {"c", rr.m()}, {"region", R.region_count}, {"degree8", R.degree8_count}}},
                    {"gadgets", gadgets}};
  return j;
}

Json to_json(const BorderCertificate& cert) {
  return Json{{"selection", terms_to_json(cert.selection.chosen)},
              {"order_ideal", to_json(cert.order_ideal)},
              {"border", to_json(cert.border)}};
}

BorderCertificate certificate_from_json(const Json& j, std::size_t n_vars) {
  require(j.is_object(), "certificate must be a JSON object");
  for (const char* key : {"selection", "order_ideal", "border"}) {
    require(j.contains(key) && j.at(key).is_array(), std::string("certificate needs a \"") + key + "\" array");
  }
  BorderCertificate cert;
  for (const auto& tj : j.at("selection")) cert.selection.chosen.push_back(term_from_json(tj, n_vars));
  cert.order_ideal = termset_body(j.at("order_ideal"), n_vars);
  cert.border = termset_body(j.at("border"), n_vars);
  return cert;
}

Json to_json(const BorderViolation& v, const Ring& ring) {
  Json j{{"condition", v.condition}, {"term", to_json(v.term)}, {"text", v.describe(ring)}};
  if (v.divisor_var) j["divisor_var"] = ring.name(*v.divisor_var);
  if (v.other_var) j["other_var"] = ring.name(*v.other_var);
  if (v.lower) j["lower"] = to_json(*v.lower);
  if (v.middle) j["middle"] = to_json(*v.middle);
  return j;
}

Json to_json(const BorderCheckReport& report, const Ring& ring) {
  Json vs = Json::array();
  for (const auto& v : report.violations) vs.push_back(to_json(v, ring));
  return Json{{"is_border", report.is_border}, {"violations", vs}};
}

Json to_json(const VerificationReport& report, const Ring& ring) {
  Json fs = Json::array();
  for (const auto& f : report.failures) {
    Json fj{{"kind", to_string(f.kind)}, {"text", f.describe(ring)}, {"terms", terms_to_json(f.terms)}};
    if (f.poly_index) fj["poly"] = *f.poly_index;
    if (f.other_index) fj["other_poly"] = *f.other_index;
    if (f.violation) fj["violation"] = to_json(*f.violation, ring);
    if (f.pair) fj["pair"] = {f.pair->k, f.pair->l};
    if (!f.remainder.is_zero()) fj["remainder"] = to_json(f.remainder);
    fs.push_back(std::move(fj));
  }
  return Json{{"accepted", report.accepted()}, {"failures", fs}};
}

Json to_json(const SearchStats& stats) {
  return Json{{"candidates", stats.candidates},
              {"nodes", stats.nodes},
              {"pruned", stats.pruned},
              {"elapsed_secs", stats.elapsed_secs}};
}

Json to_json(const CnfInstance& I) {
  Json clauses = Json::array();
  for (const auto& c : I.clauses) {
    Json cj = Json::array();
    for (const auto& lit : c) {
      const auto v = static_cast<std::int64_t>(lit.var + 1);
      cj.push_back(lit.negated ? -v : v);
    }
    clauses.push_back(std::move(cj));
  }
  return Json{{"n_vars", I.n_vars}, {"clauses", clauses}};
}

CnfInstance cnf_from_json(const Json& j) {
  require(j.is_object() && j.contains("n_vars") && j.contains("clauses"), "CNF needs \"n_vars\" and \"clauses\"");
  CnfInstance I;
  I.n_vars = j.at("n_vars").get<std::size_t>();
  for (const auto& cj : j.at("clauses")) {
    require(cj.is_array(), "clause must be an array of literals");
    Clause c;
    for (const auto& lj : cj) {
      require(lj.is_number_integer(), "literal must be an integer, got " + lj.dump());
      const auto v = lj.get<std::int64_t>();
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      require(v != 0 && var <= I.n_vars, "literal out of range: " + lj.dump());
      c.push_back(Literal{var - 1, v < 0});
    }
    I.clauses.push_back(std::move(c));
  }
  return I;
}

Json to_json(const Assignment& A) {
  Json a = Json::array();
  for (bool b : A.values) a.push_back(b);
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("error writing " + path);
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(what + ": " + e.what());
  }
}

}  // namespace bbd::io
