#include "bbd/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"

#include "bbd/io.hpp"
#include "bbd/reduction.hpp"

namespace bbd::cli {

namespace {

using io::Json;

std::string join_terms(const std::vector<Term>& terms, const Ring& ring) {
  std::string s = "{";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ", ";
    s += to_string(terms[i], ring);
  }
  return s + "}";
}

std::vector<Term> graded(const TermSet& S) {
  auto v = S.sorted();
  std::stable_sort(v.begin(), v.end(),
                   [](const Term& a, const Term& b) { return total_degree(a) < total_degree(b); });
  return v;
}

std::string format_assignment(const Assignment& A) {
  std::string s;
  for (std::size_t i = 0; i < A.values.size(); ++i) {
    if (i) s += ' ';
    s += "X" + std::to_string(i + 1) + "=" + (A.values[i] ? "T" : "F");
  }
  return s.empty() ? "(no variables)" : s;
}

CnfInstance load_cnf(const std::string& path) {
  const std::string text = io::read_file(path);
  const auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return io::cnf_from_json(io::parse_json(text, path));
  return parse_dimacs(text);
}

PolySystem load_system(const std::string& path) { return io::system_from_json(io::parse_json(io::read_file(path), path)); }

SearchBudget budget_of(const RunConfig& cfg) {
  SearchBudget b;
  b.max_candidates = cfg.max_candidates;
  b.timeout_secs = cfg.timeout_secs;
  return b;
}

int exit_for(DetectOutcome o) {
  switch (o) {
    case DetectOutcome::kYes:
      return kExitYes;
    case DetectOutcome::kNo:
      return kExitNo;
    case DetectOutcome::kBudgetExceeded:
      return kExitBudget;
  }
  return kExitError;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int reduce_cmd() {
    const CnfInstance I = load_cnf(cfg_.inputs.at(0));
    const ReducedInstance R = reduce(I);
    const std::string body = io::to_json(R).dump() + "\n";
    Json summary{{"n", R.rr.n()},
                 {"m", R.rr.m()},
                 {"N", R.rr.size()},
                 {"F_v", R.rr.n()},
                 {"F_c", R.rr.m()},
                 {"F1", R.degree8_count},
                 {"F2", R.region_count},
                 {"polys", R.system.size()}};
    // Without --out the system itself goes to stdout and the summary to stderr.
    std::ostream& sink = cfg_.out_path.empty() ? err_ : out_;
    if (cfg_.out_path.empty()) {
      out_ << body;
    } else {
      io::write_file(cfg_.out_path, body);
    }
    if (cfg_.json) {
      sink << summary.dump() << "\n";
    } else {
      sink << "n=" << R.rr.n() << " m=" << R.rr.m() << " N=" << R.rr.size() << " |F_v|=" << R.rr.n()
           << " |F_c|=" << R.rr.m() << " |F1|=" << R.degree8_count << " |F2|=" << R.region_count << "\n";
    }
    return kExitYes;
  }

  int detect_cmd() {
    const PolySystem F = load_system(cfg_.inputs.at(0));
    const DetectionResult res = detect(F, budget_of(cfg_));
    if (res.certificate && !cfg_.out_path.empty()) {
      io::write_file(cfg_.out_path, io::to_json(*res.certificate).dump() + "\n");
    }
    if (cfg_.json) {
      Json j{{"outcome", to_string(res.outcome)}, {"stats", io::to_json(res.stats)}};
      if (res.certificate && cfg_.out_path.empty()) j["certificate"] = io::to_json(*res.certificate);
      out_ << j.dump() << "\n";
    } else {
      out_ << to_string(res.outcome) << "\n";
      if (res.certificate) {
        const auto& c = *res.certificate;
        out_ << "order ideal: " << c.order_ideal.size() << " terms";
        if (c.order_ideal.size() <= 32) out_ << " " << join_terms(graded(c.order_ideal), F.ring());
        out_ << "\nborder: " << c.border.size() << " terms\n";
      }
      out_ << "candidates: " << res.stats.candidates << " nodes: " << res.stats.nodes
           << " pruned: " << res.stats.pruned << "\n";
    }
    return exit_for(res.outcome);
  }

  int verify_cmd() {
    if (cfg_.inputs.size() != 2) {
      err_ << "verify needs a system file and a certificate file\n";
      return kExitUsage;
    }
    const PolySystem F = load_system(cfg_.inputs[0]);
    const BorderCertificate cert =
        io::certificate_from_json(io::parse_json(io::read_file(cfg_.inputs[1]), cfg_.inputs[1]), F.n_vars());
    const VerificationReport rep = verify_certificate_report(F, cert);
    if (cfg_.json) {
      out_ << io::to_json(rep, F.ring()).dump() << "\n";
    } else if (rep.accepted()) {
      out_ << "ACCEPTED\n";
    } else {
      out_ << "REJECTED\n";
      for (const auto& f : rep.failures) out_ << to_string(f.kind) << ": " << f.describe(F.ring()) << "\n";
    }
    return rep.accepted() ? kExitYes : kExitNo;
  }

  int border_cmd() {
    const auto file = io::termset_from_json(io::parse_json(io::read_file(cfg_.inputs.at(0)), cfg_.inputs.at(0)));
    const TermSet& B = file.terms;
    if (B.empty()) {
      if (cfg_.json) {
        out_ << Json{{"is_border", false}, {"violations", Json::array()}}.dump() << "\n";
      } else {
        out_ << "the empty set is not the border of any order ideal\n";
      }
      return kExitNo;
    }
    const Ring ring = file.ring ? *file.ring : Ring::with_default_names(B.n_vars());
    if (ring.size() != B.n_vars()) throw io::FormatError("\"vars\" does not match the term length");
    const BorderCheckReport rep = check_border_conditions(B);
    if (cfg_.json) {
      Json j = io::to_json(rep, ring);
      if (rep.is_border) j["order_ideal"] = io::to_json(reconstruct_order_ideal(B));
      out_ << j.dump() << "\n";
    } else if (rep.is_border) {
      out_ << "is border of order ideal " << join_terms(graded(reconstruct_order_ideal(B)), ring) << "\n";
    } else {
      out_ << "not a border\n";
      for (const auto& v : rep.violations) out_ << v.describe(ring) << "\n";
    }
    return rep.is_border ? kExitYes : kExitNo;
  }

  int sat_cmd() {
    const CnfInstance I = load_cnf(cfg_.inputs.at(0));
    const auto A = brute_force_sat(I);
    if (cfg_.json) {
      Json j{{"satisfiable", A.has_value()}};
      if (A) j["assignment"] = io::to_json(*A);
      out_ << j.dump() << "\n";
    } else if (A) {
      out_ << "SAT " << format_assignment(*A) << "\n";
    } else {
      out_ << "UNSAT\n";
    }
    return A ? kExitYes : kExitNo;
  }

  int roundtrip_cmd() {
    const CnfInstance I = load_cnf(cfg_.inputs.at(0));
    const ReducedInstance R = reduce(I);
    const auto A = brute_force_sat(I);
    const DetectionResult det = detect(R.system, budget_of(cfg_));
    Json checks = Json::object();
    bool ok = true;
    auto record = [&](const std::string& name, bool pass) {
      checks[name] = pass;
      ok = ok && pass;
    };

    if (det.outcome == DetectOutcome::kBudgetExceeded) {
      report_roundtrip(A.has_value(), det, checks, false);
      return kExitBudget;
    }
    const bool yes = det.outcome == DetectOutcome::kYes;
    record("agreement", A.has_value() == yes);
    if (A) {
      const VerificationReport rep = verify_selection(R.system, assignment_to_border(R, *A));
      record("assignment_certificate_verifies", rep.accepted());
      if (rep.certificate) {
        record("certificate_assignment_satisfies", eval(I, border_to_assignment(R, *rep.certificate)));
      }
    }
    if (det.certificate) {
      record("detected_assignment_satisfies", eval(I, border_to_assignment(R, *det.certificate)));
      record("varclause_property", check_varclause_property(R, *det.certificate));
    }
    report_roundtrip(A.has_value(), det, checks, ok);
    return ok ? kExitYes : kExitNo;
  }

  int gen_cmd() {
    const CnfInstance I = random_34(cfg_.gen_n, cfg_.gen_m, cfg_.seed);
    const std::string body = cfg_.json ? io::to_json(I).dump() + "\n" : to_dimacs(I);
    if (cfg_.out_path.empty()) {
      out_ << body;
    } else {
      io::write_file(cfg_.out_path, body);
    }
    return kExitYes;
  }

 private:
  void report_roundtrip(bool satisfiable, const DetectionResult& det, const Json& checks, bool ok) {
    if (cfg_.json) {
      out_ << Json{{"satisfiable", satisfiable},
                   {"detect", to_string(det.outcome)},
                   {"checks", checks},
                   {"ok", ok},
                   {"stats", io::to_json(det.stats)}}
                  .dump()
           << "\n";
      return;
    }
    out_ << "brute force: " << (satisfiable ? "SAT" : "UNSAT") << "\n";
    out_ << "detect: " << to_string(det.outcome) << " (" << det.stats.candidates << " candidates)\n";
    for (const auto& [name, pass] : checks.items()) out_ << name << ": " << (pass.get<bool>() ? "ok" : "FAIL") << "\n";
    out_ << (ok ? "roundtrip ok" : "roundtrip FAILED") << "\n";
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

void configure_logging_from_env() {
  auto logger = spdlog::get("bbd");
  if (!logger) {
    logger = spdlog::stderr_logger_st("bbd");
    spdlog::set_default_logger(logger);
  }
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("BBD_LOG")) {
    const auto parsed = spdlog::level::from_str(env);
    // from_str maps unknown names to "off"; only honour it when asked for.
    if (parsed != spdlog::level::off || std::string(env) == "off") level = parsed;
  }
  spdlog::set_level(level);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging_from_env();
  RunConfig cfg;
  std::string format = "text";

  CLI::App app{"Border basis detection toolkit"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--max-candidates,--budget", cfg.max_candidates, "Complete selections to check before giving up")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--timeout-secs", cfg.timeout_secs, "Wall-clock limit for detection")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", cfg.out_path, "Output file");

  auto sub = [&](const std::string& name, const std::string& desc, const std::string& input_desc, int n_inputs) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    if (n_inputs > 0) s->add_option("inputs", cfg.inputs, input_desc)->required()->expected(n_inputs);
    return s;
  };
  sub("reduce", "Reduce a 3,4-SAT instance to a polynomial system", "DIMACS or CNF JSON file", 1);
  sub("detect", "Search for a border basis certificate", "system JSON file", 1);
  sub("verify", "Check a certificate against a system", "system JSON file, certificate JSON file", 2);
  sub("border", "Test whether a term set is the border of an order ideal", "term set JSON file", 1);
  sub("sat", "Brute-force satisfiability", "DIMACS or CNF JSON file", 1);
  sub("roundtrip", "Compare brute force with detection on the reduced system", "DIMACS or CNF JSON file", 1);
  CLI::App* gen = sub("gen", "Random 3,4-SAT instance", "", 0);
  gen->add_option("--n", cfg.gen_n, "Variables")->capture_default_str();
  gen->add_option("--m", cfg.gen_m, "Clauses")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.json = format == "json";

  Runner runner(cfg, out, err);
  try {
    if (cfg.subcommand == "reduce") return runner.reduce_cmd();
    if (cfg.subcommand == "detect") return runner.detect_cmd();
    if (cfg.subcommand == "verify") return runner.verify_cmd();
    if (cfg.subcommand == "border") return runner.border_cmd();
    if (cfg.subcommand == "sat") return runner.sat_cmd();
    if (cfg.subcommand == "roundtrip") return runner.roundtrip_cmd();
    if (cfg.subcommand == "gen") return runner.gen_cmd();
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << "\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return kExitInvalidInput;
  } catch (const DimacsError& e) {
    err << "bad DIMACS input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const io::FormatError& e) {
    err << "bad input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const RingMismatch& e) {
    err << "bad input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << "unknown subcommand " << cfg.subcommand << "\n";
  return kExitUsage;
}

}  // namespace bbd::cli
