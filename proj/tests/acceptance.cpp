// Reproduction gate: one pass/fail line per acceptance criterion.
// Criteria 1-15 are the built-in reference checks (the same ones behind
// `matroots verify-paper`); criterion 16 is the randomized property battery.
// The exhaustive 4x4 criterion runs only with --slow.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matroots/canon.hpp"
#include "matroots/cyclotomic.hpp"
#include "matroots/error.hpp"
#include "matroots/refsuite.hpp"
#include "matroots/search.hpp"

using namespace matroots;

namespace {

double now_sec() {
  using clk = std::chrono::steady_clock;
  static const clk::time_point t0 = clk::now();
  return std::chrono::duration<double>(clk::now() - t0).count();
}

IntMatrix random_matrix(int n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) m.at(i, j) = d(rng);
  return m;
}

IntMatrix random_equivalent(const IntMatrix& m, std::mt19937_64& rng) {
  int n = m.dim();
  std::vector<int> pl(n), pr(n), sl(n), sr(n);
  for (int i = 0; i < n; i++) pl[i] = pr[i] = i;
  std::shuffle(pl.begin(), pl.end(), rng);
  std::shuffle(pr.begin(), pr.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < n; i++) sl[i] = coin(rng) ? 1 : -1;
  for (int i = 0; i < n; i++) sr[i] = coin(rng) ? 1 : -1;
  IntMatrix out(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) out.at(i, j) = Int(sl[i] * sr[j]) * m.at(pl[i], pr[j]);
  return out;
}

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return make_rat(num(rng), den(rng));
}

CycNumber random_elem(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Rat> c(f->degree());
  for (auto& x : c) x = small_rat(rng);
  return CycNumber(f, std::move(c));
}

// 1000 random triples: ring/field identities, inverses, powers
std::string suite_field_axioms() {
  std::mt19937_64 rng(101);
  const long conductors[] = {5, 7, 8, 9, 12, 16};
  for (int rep = 0; rep < 1000; rep++) {
    FieldPtr f = CycField::get(conductors[rep % 6]);
    CycNumber a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
    CycNumber zero(f, Rat(0)), one(f, Rat(1));
    if ((a + b) + c != a + (b + c)) return "associativity (+) broke";
    if (a + b != b + a) return "commutativity (+) broke";
    if ((a * b) * c != a * (b * c)) return "associativity (*) broke";
    if (a * b != b * a) return "commutativity (*) broke";
    if (a * (b + c) != a * b + a * c) return "distributivity broke";
    if (a + (-a) != zero) return "additive inverse broke";
    if (a * one != a) return "multiplicative identity broke";
    if (!a.is_zero()) {
      if (a * a.inv() != one) return "multiplicative inverse broke";
      if ((b / a) * a != b) return "division broke";
      if (a.pow(-2) != (a * a).inv()) return "negative power broke";
    }
    if (a.pow(3) != a * a * a) return "power broke";
    if ((a * b).conj() != a.conj() * b.conj()) return "conjugation broke";
  }
  return "";
}

// 1000 random matrices: canon is idempotent and constant on the orbit
std::string suite_canon() {
  std::mt19937_64 rng(102);
  for (int rep = 0; rep < 1000; rep++) {
    int n = 2 + rep % 2;
    IntMatrix m = random_matrix(n, 3, rng);
    for (MatrixOrder o : {MatrixOrder::RowMajorLex, MatrixOrder::StructuralKey}) {
      IntMatrix c = canonicalize(m, o);
      if (canonicalize(c, o) != c) return "canonicalization is not idempotent";
      if (canonicalize(random_equivalent(m, rng), o) != c)
        return "canonical form varies over an orbit";
      if (!equivalent(m, c, o)) return "canonical form left the orbit";
    }
  }
  return "";
}

// the pruned DFS against the no-shared-logic brute force, whole small levels
std::string suite_search_oracle(long* cases) {
  auto sorted = [](std::vector<IntMatrix> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (auto [n, b] : {std::pair<int, long>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    long lattice = 1;
    for (int i = 0; i < n * n; i++) lattice *= 2 * b;
    *cases += lattice;  // candidates the oracle examines
    if (sorted(dfs_problem_i_level(n, b)) != sorted(naive_problem_i_level(n, b))) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "level n=%d b=%ld disagrees", n, b);
      return buf;
    }
  }
  return "";
}

// identical answers for every worker count, across all three engines
std::string suite_worker_determinism(long* cases) {
  std::vector<IntMatrix> base = dfs_problem_i_level(3, 3, 1);  // the 576-solution level
  std::sort(base.begin(), base.end());
  for (int w : {2, 3, 4}) {
    std::vector<IntMatrix> got = dfs_problem_i_level(3, 3, w);
    std::sort(got.begin(), got.end());
    *cases += static_cast<long>(got.size());
    if (got != base) return "DFS level depends on the worker count";
  }

  std::mt19937_64 rng(103);
  std::vector<IntMatrix> ms;
  for (int i = 0; i < 600; i++) ms.push_back(random_matrix(3, 3, rng));
  std::vector<EquivClass> one = partition_classes(ms, MatrixOrder::StructuralKey, 1);
  for (int w : {2, 4}) {
    std::vector<EquivClass> many = partition_classes(ms, MatrixOrder::StructuralKey, w);
    *cases += static_cast<long>(ms.size());
    if (many.size() != one.size()) return "class partition depends on the worker count";
    for (size_t i = 0; i < one.size(); i++)
      if (many[i].representative != one[i].representative || many[i].count != one[i].count)
        return "class partition depends on the worker count";
  }

  SearchOptions w1, w4;
  w1.workers = 1;
  w4.workers = 4;
  SearchReport r1 = randomized_zerofree_search(4, std::nullopt, 300, 17, w1);
  SearchReport r4 = randomized_zerofree_search(4, std::nullopt, 300, 17, w4);
  *cases += 300;
  RandomSearchState s1 = state_from_report(r1), s4 = state_from_report(r4);
  if (s1.best_norm != s4.best_norm || s1.witnesses != s4.witnesses ||
      s1.iterations_done != s4.iterations_done)
    return "randomized search depends on the worker count";

  SearchReport t1 = randomized_zerofree_search(5, Int(4), 2000, 1, w1);
  SearchReport t4 = randomized_zerofree_search(5, Int(4), 2000, 1, w4);
  if (state_from_report(t1).witnesses != state_from_report(t4).witnesses ||
      t1.iterations_done != t4.iterations_done)
    return "early-stop cut depends on the worker count";
  *cases += static_cast<long>(t1.iterations_done);
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  int workers = 1;
  for (int i = 1; i < argc; i++) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
      workers = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--slow] [--workers N]\n");
      return 2;
    }
  }
  if (workers < 1) workers = 1;

  int passed = 0, failed = 0, skipped = 0;

  for (const ReferenceCheck& chk : reference_checks()) {
    if (chk.slow && !slow) {
      std::printf("[SKIP] criterion %2d: %s (slow; rerun with --slow)\n", chk.id,
                  chk.name.c_str());
      skipped++;
      continue;
    }
    CheckResult r = run_reference_check(chk, workers);
    if (r.pass) {
      std::printf("[PASS] criterion %2d: %s (%.2fs)\n", r.id, r.name.c_str(), r.seconds);
      passed++;
    } else {
      std::printf("[FAIL] criterion %2d: %s (%.2fs) -- %s\n", r.id, r.name.c_str(), r.seconds,
                  r.detail.c_str());
      failed++;
    }
    std::fflush(stdout);
  }

  // criterion 16: property battery, pinned runtime budget
  const double kPropertyBudgetSec = 120.0;
  double t0 = now_sec();
  long oracle_cases = 0, det_cases = 0;
  std::string detail = suite_field_axioms();
  if (detail.empty()) detail = suite_canon();
  if (detail.empty()) detail = suite_search_oracle(&oracle_cases);
  if (detail.empty()) detail = suite_worker_determinism(&det_cases);
  double dt = now_sec() - t0;
  if (detail.empty() && dt > kPropertyBudgetSec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "over the %.0fs budget", kPropertyBudgetSec);
    detail = buf;
  }
  if (detail.empty()) {
    std::printf(
        "[PASS] criterion 16: property-suites (%.2fs) -- axioms=1000 canon=1000 "
        "oracle=%ld determinism=%ld\n",
        dt, oracle_cases, det_cases);
    passed++;
  } else {
    std::printf("[FAIL] criterion 16: property-suites (%.2fs) -- %s\n", dt, detail.c_str());
    failed++;
  }

  std::printf("acceptance: %d passed, %d failed, %d skipped\n", passed, failed, skipped);
  return failed == 0 ? 0 : 1;
}
