// census: count right ideals of F_q<a, b, a^-1, b^-1>, run the bijection
// between regular right congruences and indecomposable permutations, verify
// the identities behind them, and export tables.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid arguments, 3 budget
// exceeded, 4 cross-check mismatch, 5 decomposable permutation, 6 congruence
// not regular, 7 output path not writable.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "census/congruence.hpp"
#include "census/errors.hpp"
#include "census/ideals.hpp"
#include "census/serialize.hpp"
#include "census/verify.hpp"

namespace {

using namespace census;

constexpr const char* kVersion = "1.0.0";

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadArgs = 2,
  kBudget = 3,
  kMismatch = 4,
  kDecomposable = 5,
  kNotRegular = 6,
  kUnwritable = 7,
};

struct ExitError {
  int code;
  std::string message;
};

struct Global {
  std::string format = "text";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  bool no_header = false;
};

void header(std::ostream& os, const Global& g) {
  if (g.no_header || g.format == "json") return;
  os << "# census " << kVersion << '\n';
}

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void print_text_table(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << out << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

std::uint32_t prime_arg(std::int64_t q) {
  if (q < 2 || q > 0xFFFFFFFF || !is_prime(static_cast<std::uint32_t>(q))) {
    throw ExitError{kBadArgs, "--q must be a prime, got " + std::to_string(q)};
  }
  return static_cast<std::uint32_t>(q);
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
  int codim = -1;
  std::int64_t q = 0;
  std::string method = "formula";
  bool cross_check = false;
};

void print_report_text(std::ostream& os, const IdealCountReport& r) {
  const std::string name = "A_" + std::to_string(r.n);
  if (const auto* poly = std::get_if<LaurentPoly>(&r.total)) {
    os << name << "(q) = " << poly->to_string() << '\n';
    os << "factored: " << factor_out_q_and_q_minus_one(*poly).to_string() << '\n';
  } else {
    os << name << '(' << *r.q << ") = " << to_string(r.total) << '\n';
  }
  if (r.trees.empty()) return;
  os << "trees: " << r.trees.size() << '\n';
  for (const auto& t : r.trees) {
    std::ostringstream sig;
    for (std::size_t h = 0; h < t.signature.ranks.size(); ++h) {
      sig << (h ? " " : "") << t.signature.ranks[h] << ':' << t.signature.lengths[h];
    }
    os << "  [" << sig.str() << "] k=" << t.k << " N=" << t.N << " M=" << t.M << " lambda=(" << t.lambda.to_string()
       << ") -> " << to_string(t.contribution) << '\n';
  }
}

int cmd_count(const CountArgs& a, const Global& g) {
  if (a.codim < 0) throw ExitError{kBadArgs, "--codim must be a nonnegative integer"};
  const CountMethod method = parse_count_method(a.method);
  std::optional<std::uint32_t> q;
  if (a.q != 0) q = prime_arg(a.q);
  if (method == CountMethod::BruteForce && !q) throw ExitError{kBadArgs, "--method bruteforce needs --q"};

  IdealCountReport report;
  switch (method) {
    case CountMethod::Formula: report = formula_report(a.codim); break;
    case CountMethod::Structural: report = A_structural(a.codim); break;
    case CountMethod::BruteForce: report = brute_force_A(a.codim, *q, g.budget); break;
  }

  std::string cross;
  if (a.cross_check) {
    const LaurentPoly formula = A_formula(a.codim);
    if (A_formula_p(a.codim) != formula) throw ExitError{kMismatch, "cross-check: the two forms of the formula differ"};
    const IdealCountReport structural = A_structural(a.codim);
    if (std::get<LaurentPoly>(structural.total) != formula || !structural.breakdown_consistent()) {
      throw ExitError{kMismatch, "cross-check: structural sum " + to_string(structural.total) + " != formula " +
                                     formula.to_string()};
    }
    cross = "cross-check: formula = p-form = structural";
    if (q) {
      const IdealCountReport brute = method == CountMethod::BruteForce ? report : brute_force_A(a.codim, *q, g.budget);
      const mpz_class expected = formula.eval_integer(*q);
      if (std::get<mpz_class>(brute.total) != expected) {
        throw ExitError{kMismatch, "cross-check: brute force " + to_string(brute.total) + " != formula " +
                                       expected.get_str() + " at q=" + std::to_string(*q)};
      }
      cross += " = bruteforce at q=" + std::to_string(*q);
    }
    cross += ": OK";
  }

  header(std::cout, g);
  if (g.format == "json") {
    print_json(std::cout, report_to_json(report));
  } else if (g.format == "csv") {
    write_csv(std::cout, report_table(report));
  } else {
    print_report_text(std::cout, report);
    if (q && method != CountMethod::BruteForce) {
      std::cout << "A_" << a.codim << '(' << *q << ") = " << std::get<LaurentPoly>(report.total).eval_integer(*q)
                << '\n';
    }
  }
  if (!cross.empty()) std::cerr << cross << '\n';
  return kOk;
}

// ---- bijection --------------------------------------------------------------

struct BijectionArgs {
  std::string theta;
  std::string congruence_file;
  bool roundtrip = false;
};

int cmd_bijection(const BijectionArgs& a, const Global& g) {
  if (a.theta.empty() == a.congruence_file.empty()) {
    throw ExitError{kBadArgs, "give exactly one of --theta and --congruence-file"};
  }
  if (!a.theta.empty()) {
    const Permutation theta = Permutation::parse(a.theta);
    const RightCongruence rc = from_indecomposable(theta);
    header(std::cout, g);
    if (a.roundtrip) {
      if (to_indecomposable(rc) != theta) throw ExitError{kMismatch, "round trip returned a different permutation"};
      std::cout << "OK\n";
      return kOk;
    }
    if (g.format == "json") {
      print_json(std::cout, Json{{"theta", theta.to_string()}, {"pairs", congruence_to_json(rc)}});
    } else if (g.format == "csv") {
      Table t{{"c", "f_c"}, {}};
      for (std::size_t i = 0; i < rc.tree().leaves().size(); ++i) {
        t.rows.push_back({rc.tree().leaves()[i].to_power_string(), rc.images()[i].to_power_string()});
      }
      write_csv(std::cout, t);
    } else {
      std::cout << rc.to_text();
    }
    return kOk;
  }
  std::ifstream in(a.congruence_file);
  if (!in) throw ExitError{kBadArgs, "cannot read " + a.congruence_file};
  std::stringstream text;
  text << in.rdbuf();
  const RightCongruence rc = RightCongruence::parse(text.str());
  const Permutation theta = to_indecomposable(rc);
  header(std::cout, g);
  if (a.roundtrip) {
    if (from_indecomposable(theta).to_text() != rc.to_text()) {
      throw ExitError{kMismatch, "round trip returned a different congruence"};
    }
    std::cout << "OK\n";
    return kOk;
  }
  if (g.format == "json") {
    print_json(std::cout, Json{{"theta", theta.to_string()}});
  } else if (g.format == "csv") {
    write_csv(std::cout, Table{{"theta"}, {{theta.to_string()}}});
  } else {
    std::cout << theta.to_string() << '\n';
  }
  return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 5;
  std::vector<std::int64_t> primes{2, 3};
};

int cmd_verify(const VerifyArgs& a, const Global& g) {
  VerifyOptions o;
  o.suite = a.suite;
  o.max_n = a.max_n;
  o.primes.clear();
  for (auto p : a.primes) o.primes.push_back(prime_arg(p));
  o.budget = g.budget;
  o.seed = g.seed;
  std::vector<CheckResult> results;
  try {
    results = run_verify(o);
  } catch (const std::invalid_argument& e) {
    throw ExitError{kBadArgs, e.what()};
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.outcome.passed; });

  header(std::cout, g);
  if (g.format == "json") {
    Json out = Json::array();
    for (const auto& r : results) {
      Json row{{"suite", r.suite}, {"check", r.name}, {"passed", r.outcome.passed}, {"seconds", r.seconds}};
      if (!r.outcome.passed) row["counterexample"] = r.outcome.counterexample;
      out.push_back(std::move(row));
    }
    print_json(std::cout, out);
  } else if (g.format == "csv") {
    Table t{{"suite", "check", "status", "seconds", "counterexample"}, {}};
    for (const auto& r : results) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.seconds;
      t.rows.push_back({r.suite, r.name, r.outcome.passed ? "PASS" : "FAIL", secs.str(), r.outcome.counterexample});
    }
    write_csv(std::cout, t);
  } else {
    for (const auto& r : results) {
      std::cout << (r.outcome.passed ? "PASS " : "FAIL ") << std::left << std::setw(11) << r.suite << r.name << " ("
                << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
      if (!r.outcome.passed) std::cout << "     counterexample: " << r.outcome.counterexample << '\n';
    }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << '/' << results.size() << " checks passed\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

// ---- export -----------------------------------------------------------------

struct ExportArgs {
  std::string object;
  int n = 3;
  std::string out;
  std::string method = "structural";
  std::int64_t q = 0;
};

int cmd_export(const ExportArgs& a, const Global& g) {
  if (a.n < 1) throw ExitError{kBadArgs, "--n must be at least 1"};
  Json json;
  Table table;
  const bool want_json = g.format == "json";
  if (a.object == "indec-polys") {
    want_json ? void(json = indec_polys_json(a.n)) : void(table = indec_polys_table(a.n));
  } else if (a.object == "ideal-census") {
    IdealCountReport report;
    switch (parse_count_method(a.method)) {
      case CountMethod::Formula: report = formula_report(a.n); break;
      case CountMethod::Structural: report = A_structural(a.n); break;
      case CountMethod::BruteForce:
        if (a.q == 0) throw ExitError{kBadArgs, "--method bruteforce needs --q"};
        report = brute_force_A(a.n, prime_arg(a.q), g.budget);
        break;
    }
    want_json ? void(json = report_to_json(report)) : void(table = report_table(report));
  } else if (a.object == "cells") {
    want_json ? void(json = cells_json(a.n)) : void(table = cells_table(a.n));
  } else if (a.object == "congruences") {
    want_json ? void(json = congruences_json(a.n)) : void(table = congruences_table(a.n));
  } else if (a.object == "subgroups") {
    want_json ? void(json = subgroups_json(a.n)) : void(table = subgroups_table(a.n));
  } else {
    throw ExitError{kBadArgs, "unknown object '" + a.object + "'"};
  }

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::out | std::ios::trunc);
    if (!file) throw ExitError{kUnwritable, "cannot write " + a.out};
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  header(os, g);
  if (want_json) {
    print_json(os, json);
  } else if (g.format == "csv") {
    write_csv(os, table);
  } else {
    print_text_table(os, table);
  }
  os.flush();
  if (!os) throw ExitError{kUnwritable, "write to " + (a.out.empty() ? std::string("stdout") : a.out) + " failed"};
  return kOk;
}

constexpr const char* kCsvColumns = R"(CSV columns:
  count, export ideal-census: row, ranks, lengths, k, N, M, lambda, contribution
      (one row per code tree, then a "total" row; lists are space separated)
  export indec-polys: m, count, inv_poly, p_poly
  export cells:       theta, torus_rank, affine_dim
  export congruences: theta, c, f_c
  export subgroups:   theta, generators (A = a^-1, B = b^-1, space separated)
  bijection:          c, f_c  (from --theta) or theta (from --congruence-file)
  verify:             suite, check, status, seconds, counterexample
Exit codes: 0 ok, 1 verification failed, 2 invalid arguments, 3 budget
exceeded, 4 cross-check mismatch, 5 decomposable permutation, 6 congruence
not regular, 7 output not writable.
Environment: CENSUS_THREADS sets the worker count.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of finite-codimension right ideals of F_q<a, b, a^-1, b^-1>", "census"};
  app.footer(kCsvColumns);
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--budget", g.budget, "Largest brute-force enumeration allowed per code tree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized property checks")->capture_default_str();
  app.add_flag("--no-header", g.no_header, "Omit the version header line");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count right ideals of codimension n");
  c->add_option("--codim", count.codim, "Codimension n")->required();
  c->add_option("--q", count.q, "Prime field size; evaluates the count");
  c->add_option("--method", count.method, "Counting route")
      ->check(CLI::IsMember({"formula", "structural", "bruteforce"}))
      ->capture_default_str();
  c->add_flag("--cross-check", count.cross_check, "Compare all routes; exit 4 on disagreement");

  BijectionArgs bij;
  auto* b = app.add_subcommand("bijection", "Map an indecomposable permutation to its regular right congruence or back");
  b->add_option("--theta", bij.theta, "Indecomposable permutation, e.g. 325461 or 3,2,5,4,6,1");
  b->add_option("--congruence-file", bij.congruence_file, "File of lines \"c -> f(c)\"");
  b->add_flag("--roundtrip", bij.roundtrip, "Apply the inverse map too and print OK on agreement");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run exhaustive verification suites");
  v->add_option("--suite", ver.suite, "Suite")
      ->check(CLI::IsMember({"all", "permstat", "words", "congruence", "haglund", "ideals"}))
      ->capture_default_str();
  v->add_option("--max-n", ver.max_n, "Largest codimension or index examined")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  v->add_option("--primes", ver.primes, "Primes for brute-force checks")->delimiter(',')->capture_default_str();

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "Write a table of objects as JSON or CSV");
  e->add_option("--object", exp.object, "Object")
      ->required()
      ->check(CLI::IsMember({"indec-polys", "ideal-census", "cells", "congruences", "subgroups"}));
  e->add_option("--n", exp.n, "Size parameter (codimension, index, or largest m)")->capture_default_str();
  e->add_option("--out", exp.out, "Output file (default stdout)");
  e->add_option("--method", exp.method, "Counting route for ideal-census")
      ->check(CLI::IsMember({"formula", "structural", "bruteforce"}))
      ->capture_default_str();
  e->add_option("--q", exp.q, "Prime for --method bruteforce");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForVersion& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kBadArgs;
  }

  try {
    if (c->parsed()) return cmd_count(count, g);
    if (b->parsed()) return cmd_bijection(bij, g);
    if (v->parsed()) return cmd_verify(ver, g);
    return cmd_export(exp, g);
  } catch (const ExitError& err) {
    std::cerr << "census: " << err.message << '\n';
    return err.code;
  } catch (const TooLarge& err) {
    std::cerr << "census: " << err.what() << " (raise --budget)\n";
    return kBudget;
  } catch (const NotIndecomposable& err) {
    std::cerr << "census: " << err.what() << '\n';
    return kDecomposable;
  } catch (const NotRegular& err) {
    std::cerr << "census: " << err.what() << '\n';
    return kNotRegular;
  } catch (const Error& err) {
    std::cerr << "census: " << err.what() << '\n';
    return kBadArgs;
  } catch (const std::invalid_argument& err) {
    std::cerr << "census: " << err.what() << '\n';
    return kBadArgs;
  }
}
