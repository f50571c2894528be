// matroots command-line tool: root enumeration, optimum searches,
// canonicalization, and the built-in reference-result suite.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matroots/canon.hpp"
#include "matroots/catalog.hpp"
#include "matroots/error.hpp"
#include "matroots/refsuite.hpp"
#include "matroots/roots.hpp"
#include "matroots/search.hpp"
#include "matroots/serialize.hpp"
#include "matroots/version.hpp"

using json = nlohmann::json;
using namespace matroots;

namespace {

// --matrix takes inline text or a path; file contents may be text or JSON
std::string load_matrix_arg(const std::string& s) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) {
    std::ifstream in(s);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + s);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return s;
}

IntMatrix matrix_arg(const std::string& s) { return parse_matrix_auto(load_matrix_arg(s)); }

struct Out {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) fail(ErrorCode::InvalidArgument, "cannot write " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

void text_header(std::ostream& os, const json& cfg) {
  os << "# matroots " << kVersion << "\n# config " << cfg.dump() << "\n";
}

json wrap(const json& cfg) { return json{{"version", kVersion}, {"config", cfg}}; }

MatrixOrder order_from_name(const std::string& name) {
  if (name == "row-major") return MatrixOrder::RowMajorLex;
  if (name == "structural") return MatrixOrder::StructuralKey;
  fail(ErrorCode::InvalidArgument, "unknown order " + name);
}

std::vector<Int> parse_lambda(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) fail(ErrorCode::ParseError, "empty lambda entry");
    out.push_back(parse_int(item));
  }
  if (out.empty()) fail(ErrorCode::ParseError, "empty lambda list");
  return out;
}

std::string norm_str(const std::optional<Int>& v) { return v ? v->get_str() : "-"; }

// ---------------------------------------------------------------- roots ----

struct RootsArgs {
  std::string matrix;
  bool c_matrix = false;
  long n = 0;
  bool real_only = false;
  std::string u, v;
};

void print_root_text(std::ostream& os, const Root& r) {
  os << "root (";
  for (size_t i = 0; i < r.indices.size(); i++) os << (i ? "," : "") << r.indices[i];
  os << ")";
  if (r.integral) os << " integral";
  else if (r.rational) os << " rational";
  else if (r.is_real) os << " real";
  os << "\n";
  std::istringstream rows(r.integral ? format_matrix_block(*r.integral) : r.matrix.str());
  std::string line;
  while (std::getline(rows, line)) os << "  " << line << "\n";
}

int cmd_roots_family(Out& out, const json& cfg, const std::string& fmt, const RootsArgs& a) {
  if (a.u.empty() || a.v.empty())
    fail(ErrorCode::InvalidArgument,
         "even exponents take the two-parameter family: provide --u and --v");
  CycNumber u = parse_cyc12(a.u), v = parse_cyc12(a.v);
  CycMatrix y = even_family(a.n, u, v);
  bool ok = verify_power(y, c_matrix(), static_cast<unsigned long>(a.n));
  std::ostream& os = out.stream();
  if (fmt == "text") {
    text_header(os, cfg);
    os << "family member for exponent " << a.n << " (u=" << u.str() << ", v=" << v.str()
       << ")\n";
    std::istringstream rows(y.str());
    std::string line;
    while (std::getline(rows, line)) os << "  " << line << "\n";
    os << "real: " << (y.is_real() ? "true" : "false") << "\n";
    os << "verified: X^" << a.n << " = C^" << a.n << (ok ? " holds" : " FAILS") << "\n";
  } else {
    json o = wrap(cfg);
    o["exponent"] = a.n;
    o["u"] = u.str();
    o["v"] = v.str();
    std::vector<std::vector<std::string>> entries(static_cast<size_t>(y.dim()));
    for (int i = 0; i < y.dim(); i++)
      for (int j = 0; j < y.dim(); j++)
        entries[static_cast<size_t>(i)].push_back(y.at(i, j).str());
    o["matrix"] = entries;
    json ap = json::array();
    for (const auto& row : y.approx()) {
      json r = json::array();
      for (const auto& z : row) r.push_back(json::array({z.real(), z.imag()}));
      ap.push_back(r);
    }
    o["approx"] = ap;
    o["real"] = y.is_real();
    o["verified"] = ok;
    os << o.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_roots(Out& out, const json& cfg, const std::string& fmt, const RootsArgs& a) {
  if (a.n < 1) fail(ErrorCode::InvalidArgument, "exponent must be >= 1");
  if (a.c_matrix && !a.matrix.empty())
    fail(ErrorCode::InvalidArgument, "--matrix and --c-matrix are mutually exclusive");
  if (!a.c_matrix && a.matrix.empty())
    fail(ErrorCode::InvalidArgument, "one of --matrix or --c-matrix is required");

  if (a.c_matrix && a.n % 2 == 0) return cmd_roots_family(out, cfg, fmt, a);

  RootSet rs;
  if (a.c_matrix) {
    rs = odd_c_roots(a.n);
  } else {
    IntMatrix m = matrix_arg(a.matrix);
    rs = enumerate_roots(integer_spectrum(m), a.n);
  }
  for (const Root& r : rs.roots)
    if (!verify_power(r.matrix, rs.base, static_cast<unsigned long>(rs.exponent))) {
      std::cerr << "error: internal verification X^n = A^n failed\n";
      return 1;
    }

  size_t total = rs.roots.size();
  RootSet shown = rs;
  if (a.real_only) shown.roots = real_roots(rs);

  std::ostream& os = out.stream();
  if (fmt == "text") {
    text_header(os, cfg);
    os << "base: " << format_matrix_text(rs.base) << "\n";
    os << "exponent: " << rs.exponent << "\n";
    os << "conductor: " << rs.field->conductor() << "\n";
    if (a.real_only)
      os << "roots: " << shown.roots.size() << " real (of " << total << " total)\n";
    else {
      size_t nreal = real_roots(rs).size();
      os << "roots: " << total << " (" << nreal << " real)\n";
    }
    for (const Root& r : shown.roots) print_root_text(os, r);
  } else {
    json o = wrap(cfg);
    o["total_roots"] = total;
    o["report"] = to_json(shown);
    os << o.dump(2) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- search ----

void print_report_text(std::ostream& os, const SearchReport& rep, bool list_solutions) {
  os << "status: " << rep.status << "\n";
  os << "minimal norm: " << norm_str(rep.minimal_norm) << "\n";
  os << "count: " << rep.count << "\n";
  os << "explored: " << rep.explored << "\n";
  os << "complete: " << (rep.complete ? "true" : "false") << "\n";
  if (rep.seed) {
    os << "seed: " << *rep.seed << "\n";
    os << "iterations: " << rep.iterations_done << "\n";
  }
  os << "runtime_sec: " << rep.runtime_sec << "\n";
  if (rep.classes) {
    os << "classes: " << rep.classes->size() << "\n";
    for (const EquivClass& c : *rep.classes)
      os << "  class size " << c.count
         << " representative: " << format_matrix_text(c.representative) << "\n";
  }
  if (!list_solutions) return;
  if (rep.solutions.size() > 64) {
    os << "solutions: " << rep.solutions.size()
       << " distinct (list suppressed in text mode; use --format jsonl)\n";
    return;
  }
  for (const Solution& s : rep.solutions)
    os << "solution norm " << s.norm.get_str() << ": " << format_matrix_text(s.matrix)
       << "\n";
}

void emit_report(Out& out, const json& cfg, const std::string& fmt, const SearchReport& rep) {
  std::ostream& os = out.stream();
  if (fmt == "jsonl") {
    write_jsonl(os, rep, wrap(cfg));
  } else if (fmt == "json") {
    json o = wrap(cfg);
    o["report"] = to_json(rep);
    os << o.dump(2) << "\n";
  } else {
    text_header(os, cfg);
    print_report_text(os, rep, true);
  }
}

struct SearchArgs {
  std::string problem;
  int dim = 0;
  long b_max = 8;
  std::string lambda;
  long m_bound = 3;
  bool classes = false;
  std::string order = "structural";
};

int cmd_search(Out& out, const json& cfg, const std::string& fmt, const SearchArgs& a,
               int workers) {
  SearchOptions opt;
  opt.workers = workers;
  opt.classes = a.classes;
  opt.order = order_from_name(a.order);

  SearchReport rep;
  if (a.problem == "i") {
    if (a.dim < 1) fail(ErrorCode::InvalidArgument, "--dim is required for problem i");
    if (!a.lambda.empty())
      fail(ErrorCode::InvalidArgument, "--lambda applies to problems ii/iii only");
    rep = exhaustive_problem_i(a.dim, a.b_max, opt);
  } else {
    if (a.lambda.empty())
      fail(ErrorCode::InvalidArgument, "--lambda is required for problems ii/iii");
    std::vector<Int> lam = parse_lambda(a.lambda);
    if (a.dim && a.dim != static_cast<int>(lam.size()))
      fail(ErrorCode::InvalidArgument, "--dim disagrees with the lambda list");
    rep = exhaustive_problem_ii(lam, a.m_bound, a.problem == "iii", opt);
  }
  emit_report(out, cfg, fmt, rep);
  return 0;
}

// ---------------------------------------------------------------- canon ----

struct CanonArgs {
  std::string order;
  std::string matrix;
  std::vector<std::string> equivalent;
  bool orbit = false;
};

int cmd_canon(Out& out, const json& cfg, const std::string& fmt, const CanonArgs& a) {
  MatrixOrder order = order_from_name(a.order);
  std::ostream& os = out.stream();

  if (!a.equivalent.empty()) {
    if (a.equivalent.size() != 2)
      fail(ErrorCode::InvalidArgument, "--equivalent takes exactly two matrices");
    IntMatrix x = matrix_arg(a.equivalent[0]);
    IntMatrix y = matrix_arg(a.equivalent[1]);
    bool eq = equivalent(x, y, order);
    if (fmt == "text") {
      text_header(os, cfg);
      os << (eq ? "true" : "false") << "\n";
    } else {
      json o = wrap(cfg);
      o["equivalent"] = eq;
      os << o.dump(2) << "\n";
    }
    return 0;
  }

  if (a.matrix.empty()) fail(ErrorCode::InvalidArgument, "--matrix is required");
  IntMatrix m = matrix_arg(a.matrix);

  if (a.orbit) {
    std::vector<IntMatrix> orb = orbit(m);
    if (fmt == "text") {
      text_header(os, cfg);
      os << "orbit size: " << orb.size() << "\n";
      for (const IntMatrix& o : orb) os << format_matrix_text(o) << "\n";
    } else {
      json o = wrap(cfg);
      o["orbit_size"] = orb.size();
      json arr = json::array();
      for (const IntMatrix& e : orb) arr.push_back(to_json(e));
      o["orbit"] = arr;
      os << o.dump(2) << "\n";
    }
    return 0;
  }

  IntMatrix canon = canonicalize(m, order);
  if (fmt == "text") {
    text_header(os, cfg);
    os << format_matrix_block(canon) << "\n";
  } else {
    json o = wrap(cfg);
    o["input"] = to_json(m);
    o["canonical"] = to_json(canon);
    os << o.dump(2) << "\n";
  }
  return 0;
}

// -------------------------------------------------------- random search ----

struct RandomArgs {
  int dim = 0;
  std::string target;
  uint64_t budget = 10000;
  uint64_t seed = 1;
  bool seed_given = false;
  std::string checkpoint;
  bool resume = false;
};

int cmd_random(Out& out, const json& cfg, const std::string& fmt, const RandomArgs& a,
               int workers) {
  if (a.dim < 1) fail(ErrorCode::InvalidArgument, "--dim is required");
  std::optional<Int> target;
  if (!a.target.empty()) target = parse_int(a.target);

  RandomSearchState state;
  const RandomSearchState* resume = nullptr;
  uint64_t seed = a.seed;
  if (a.resume) {
    if (a.checkpoint.empty())
      fail(ErrorCode::InvalidArgument, "--resume requires --checkpoint");
    state = read_checkpoint(a.checkpoint);
    if (a.seed_given && a.seed != state.seed)
      fail(ErrorCode::InvalidArgument, "--seed disagrees with the checkpoint");
    seed = state.seed;
    resume = &state;
  }

  SearchOptions opt;
  opt.workers = workers;
  opt.classes = false;
  SearchReport rep = randomized_zerofree_search(a.dim, target, a.budget, seed, opt, {}, resume);
  if (!a.checkpoint.empty()) write_checkpoint(a.checkpoint, state_from_report(rep));
  emit_report(out, cfg, fmt, rep);
  return 0;
}

// ----------------------------------------------------------- reference -----

int cmd_verify(Out& out, const json& cfg, const std::string& fmt, bool slow, int workers) {
  std::vector<CheckResult> results = run_reference_suite(slow, workers);
  std::ostream& os = out.stream();
  bool all_pass = true;
  if (fmt == "text") {
    text_header(os, cfg);
    for (const CheckResult& r : results) {
      const char* tag = !r.ran ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      os << "[" << tag << "] " << r.id << " " << r.name;
      if (r.ran) {
        os << " (" << r.seconds << "s)";
        if (!r.pass) os << ": " << r.detail;
      } else {
        os << " (" << r.detail << ")";
      }
      os << "\n";
      all_pass = all_pass && r.pass;
    }
    os << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  } else {
    json o = wrap(cfg);
    json arr = json::array();
    for (const CheckResult& r : results) {
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"ran", r.ran},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    o["checks"] = arr;
    o["all_pass"] = all_pass;
    os << o.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact n-th roots of matrix n-th powers, optimum searches, and "
               "signed-permutation canonical forms"};
  app.fallthrough();
  app.set_version_flag("--version", std::string("matroots ") + kVersion);

  std::string output_path, format = "text";
  int workers = 1;
  app.add_option("-o,--output", output_path, "write the report to a file instead of stdout");
  app.add_option("-f,--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "jsonl"}));
  app.add_option("-w,--workers", workers, "worker thread count")
      ->envname("MATROOTS_WORKERS")
      ->check(CLI::PositiveNumber);

  RootsArgs ra;
  CLI::App* roots = app.add_subcommand("roots", "enumerate n-th roots of A^n");
  roots->add_option("--matrix", ra.matrix, "matrix, inline \"a b; c d\" or a file path");
  roots->add_flag("--c-matrix", ra.c_matrix,
                  "use the built-in (1 -2; 2 1)-type base with closed-form roots");
  roots->add_option("--n", ra.n, "the exponent n")->required();
  roots->add_flag("--real-only", ra.real_only, "print only the real roots");
  roots->add_option("--u", ra.u, "family parameter u (even exponents)");
  roots->add_option("--v", ra.v, "family parameter v (even exponents)");

  SearchArgs sa;
  CLI::App* search = app.add_subcommand("search", "exhaustive optimum searches");
  search->add_option("--problem", sa.problem, "which minimization to run")
      ->required()
      ->check(CLI::IsMember({"i", "ii", "iii"}));
  search->add_option("--dim", sa.dim, "matrix dimension (problem i)");
  search->add_option("--b-max", sa.b_max, "largest entry bound scanned (problem i)");
  search->add_option("--lambda", sa.lambda, "eigenvalues, comma separated (ii/iii)");
  search->add_option("--m-bound", sa.m_bound, "entry bound for the conjugating matrices");
  search->add_flag("--classes", sa.classes, "partition the optima into equivalence classes");
  search->add_option("--order", sa.order, "canonical order for class representatives")
      ->check(CLI::IsMember({"row-major", "structural"}));

  CanonArgs ca;
  CLI::App* canon = app.add_subcommand("canon", "canonical forms under the double action");
  canon->add_option("--order", ca.order, "total order on matrices")
      ->required()
      ->check(CLI::IsMember({"row-major", "structural"}));
  canon->add_option("--matrix", ca.matrix, "matrix to canonicalize");
  canon->add_option("--equivalent", ca.equivalent, "two matrices to compare")->expected(2);
  canon->add_flag("--orbit", ca.orbit, "print the whole orbit of --matrix");

  RandomArgs rnd;
  CLI::App* random = app.add_subcommand("random-search",
                                        "randomized search for zerofree unimodular matrices");
  random->add_option("--dim", rnd.dim, "matrix dimension")->required();
  random->add_option("--target-norm", rnd.target, "stop once the best norm is <= this");
  random->add_option("--budget", rnd.budget, "iteration budget for this run");
  CLI::Option* seed_opt = random->add_option("--seed", rnd.seed, "base seed");
  random->add_option("--checkpoint", rnd.checkpoint, "state file to write (and read with --resume)");
  random->add_flag("--resume", rnd.resume, "continue from the checkpoint state");

  bool slow = false;
  CLI::App* verify = app.add_subcommand("verify-paper",
                                        "re-check the built-in catalog of reference results");
  verify->add_flag("--slow", slow, "include the long-running exhaustive checks");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  rnd.seed_given = seed_opt->count() > 0;

  json cfg;
  cfg["workers"] = workers;
  cfg["format"] = format;
  if (!output_path.empty()) cfg["output"] = output_path;

  try {
    Out out;
    out.open(output_path);
    if (roots->parsed()) {
      cfg["command"] = "roots";
      if (!ra.matrix.empty()) cfg["matrix"] = ra.matrix;
      if (ra.c_matrix) cfg["c_matrix"] = true;
      cfg["n"] = ra.n;
      if (ra.real_only) cfg["real_only"] = true;
      if (!ra.u.empty()) cfg["u"] = ra.u;
      if (!ra.v.empty()) cfg["v"] = ra.v;
      return cmd_roots(out, cfg, format, ra);
    }
    if (search->parsed()) {
      cfg["command"] = "search";
      cfg["problem"] = sa.problem;
      if (sa.dim) cfg["dim"] = sa.dim;
      if (sa.problem == "i") cfg["b_max"] = sa.b_max;
      if (!sa.lambda.empty()) cfg["lambda"] = sa.lambda;
      if (sa.problem != "i") cfg["m_bound"] = sa.m_bound;
      if (sa.classes) {
        cfg["classes"] = true;
        cfg["order"] = sa.order;
      }
      return cmd_search(out, cfg, format, sa, workers);
    }
    if (canon->parsed()) {
      cfg["command"] = "canon";
      cfg["order"] = ca.order;
      if (!ca.matrix.empty()) cfg["matrix"] = ca.matrix;
      if (!ca.equivalent.empty()) cfg["equivalent"] = ca.equivalent;
      if (ca.orbit) cfg["orbit"] = true;
      return cmd_canon(out, cfg, format, ca);
    }
    if (random->parsed()) {
      cfg["command"] = "random-search";
      cfg["dim"] = rnd.dim;
      if (!rnd.target.empty()) cfg["target_norm"] = rnd.target;
      cfg["budget"] = rnd.budget;
      cfg["seed"] = rnd.seed;
      if (!rnd.checkpoint.empty()) cfg["checkpoint"] = rnd.checkpoint;
      if (rnd.resume) cfg["resume"] = true;
      return cmd_random(out, cfg, format, rnd, workers);
    }
    if (verify->parsed()) {
      cfg["command"] = "verify-paper";
      if (slow) cfg["slow"] = true;
      return cmd_verify(out, cfg, format, slow, workers);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
