#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroots/canon.hpp"
#include "matroots/matrix.hpp"

namespace matroots {

enum class ProblemKind { MinConcatNorm, MinProductNorm, MinProductNormZerofree };

struct ProblemSpec {
  ProblemKind kind = ProblemKind::MinConcatNorm;
  int n = 2;
  std::vector<Int> lambda;  // (ii)/(iii) only; strictly increasing, positive
  long m_bound = 0;         // (ii)/(iii) entry bound for M
  long b_max = 0;           // (i) norm cap
};

struct Solution {
  IntMatrix matrix;  // M for (i); the product A for (ii)/(iii)
  std::optional<IntMatrix> inverse_int;  // set when the inverse is integral
  std::optional<RatMatrix> inverse_rat;  // set otherwise
  Int norm;  // concat norm for (i); ||A|| for (ii)/(iii)
};

struct SearchReport {
  ProblemSpec spec;
  bool found = false;
  std::optional<Int> minimal_norm;
  long count = 0;
  std::vector<Solution> solutions;  // deterministic order (search order / row-major)
  std::optional<std::vector<EquivClass>> classes;
  MatrixOrder class_order = MatrixOrder::StructuralKey;
  unsigned long long explored = 0;
  double runtime_sec = 0;
  std::optional<uint64_t> seed;        // randomized mode
  uint64_t iterations_done = 0;        // randomized mode
  bool complete = false;
  int workers = 1;
  std::string status;  // "ok" or "NoSolutionWithinBound"
};

struct SearchOptions {
  int workers = 1;
  bool classes = true;
  MatrixOrder order = MatrixOrder::StructuralKey;
};

// Problem (i): minimize the concatenated norm ||(M M^-1)|| over unimodular
// zerofree integer matrices.  Scans b = 1..b_max; at each level enumerates all
// M with entries in [-b,b]\{0} whose integer inverse also has entries in
// [-b,b]\{0}; stops at the first nonempty level.  complete=true whenever the
// scan ran to its end (found or not).  TooLarge for n > 4 or b_max > 16.
SearchReport exhaustive_problem_i(int n, long b_max, const SearchOptions& opt = {});

// Problems (ii)/(iii): over the same M pool with entries bounded by m_bound,
// minimize ||M diag(lambda) M^-1||.  Each optimal M is one solution instance
// (count); solutions lists the distinct products A, and class sizes count
// instances whose product lies in the class (several M share one A -- column
// sign flips alone give 2^n per product).  zerofree_product additionally
// requires A zerofree (problem (iii)).  Minimality is relative to m_bound,
// so complete=false always.
SearchReport exhaustive_problem_ii(const std::vector<Int>& lambda, long m_bound,
                                   bool zerofree_product, const SearchOptions& opt = {});

// one level of the pruned DFS: all unimodular M, entries and inverse entries
// in [-b,b]\{0} (exposed for the pruning-soundness oracle tests)
std::vector<IntMatrix> dfs_problem_i_level(int n, long b, int workers = 1,
                                           unsigned long long* explored = nullptr);

// independent brute force over every entry assignment; no shared logic with
// the DFS path (oracle)
std::vector<IntMatrix> naive_problem_i_level(int n, long b);

struct RandomWalkParams {
  int mult_min = -3;        // multiplier range for add-steps (0 is re-drawn)
  int mult_max = 3;
  unsigned swap_percent = 10;
  unsigned flip_percent = 10;
  int steps_min = 6;        // walk lengths used by randomized_zerofree_search
  int steps_max = 24;
  long norm_cap = 0;        // >0: add-steps that would push an entry past the
                            // cap are rejected (a few redraws, then skipped)
};

// random walk on elementary operations starting from the identity;
// det stays +-1; deterministic in (n, steps, seed)
IntMatrix random_unimodular(int n, long steps, uint64_t seed,
                            const RandomWalkParams& params = {});

struct RandomSearchState {
  uint64_t seed = 0;
  uint64_t iterations_done = 0;
  std::optional<Int> best_norm;
  std::vector<IntMatrix> witnesses;  // capped at kMaxWitnesses, row-major ascending
};

inline constexpr size_t kMaxWitnesses = 16;

// Heuristic search for zerofree unimodular matrices of small concat norm.
// Iterations are independent streams keyed by splitmix64(seed, index), so the
// report depends only on (n, target, budget, seed, params) — not on worker
// count or on how the budget is split across resumed runs (pass the previous
// state to resume).  When params keeps the stock norm_cap/steps, the walk is
// capped at target_norm (3n if none) and lengthened to [4n, 16n] steps.
// Stops early once target_norm is met; complete=false always.
SearchReport randomized_zerofree_search(int n, std::optional<Int> target_norm, uint64_t budget,
                                        uint64_t seed, const SearchOptions& opt = {},
                                        const RandomWalkParams& params = {},
                                        const RandomSearchState* resume = nullptr);

RandomSearchState state_from_report(const SearchReport& report);

}  // namespace matroots
