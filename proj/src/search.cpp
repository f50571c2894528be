#include "matroots/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace matroots {

namespace {

constexpr int kMaxDim = 4;
constexpr long kMaxBound = 16;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// value index t in [0, 2b) -> {-b..-1, 1..b}
inline int64_t value_of(long t, long b) { return t < b ? t - b : t - b + 1; }

// all candidate rows (entries nonzero, |.| <= b), flat with stride n,
// ascending lexicographic by entry values
std::vector<int64_t> candidate_rows(int n, long b) {
  long per = 2 * b;
  size_t count = 1;
  for (int i = 0; i < n; i++) count *= static_cast<size_t>(per);
  std::vector<int64_t> rows(count * static_cast<size_t>(n));
  std::vector<long> t(static_cast<size_t>(n), 0);
  for (size_t r = 0; r < count; r++) {
    for (int i = 0; i < n; i++) rows[r * n + static_cast<size_t>(i)] = value_of(t[static_cast<size_t>(i)], b);
    for (int i = n - 1; i >= 0; i--) {
      if (++t[static_cast<size_t>(i)] < per) break;
      t[static_cast<size_t>(i)] = 0;
    }
  }
  return rows;
}

// column-subset minor bookkeeping: masks per level and Laplace expansion of
// each k-subset minor along the newest row
struct Levels {
  int n = 0;
  std::vector<std::vector<int>> masks;                  // [k] -> subset masks
  std::vector<std::vector<std::array<int, 3>>> exp;     // [k][s*k+t] = {col, sign, prev_idx}
};

Levels build_levels(int n) {
  Levels L;
  L.n = n;
  L.masks.resize(static_cast<size_t>(n) + 1);
  L.exp.resize(static_cast<size_t>(n) + 1);
  std::vector<std::vector<int>> index_of(static_cast<size_t>(n) + 1,
                                         std::vector<int>(static_cast<size_t>(1) << n, -1));
  L.masks[0] = {0};
  index_of[0][0] = 0;
  for (int k = 1; k <= n; k++) {
    auto& masks = L.masks[static_cast<size_t>(k)];
    for (int mask = 0; mask < (1 << n); mask++)
      if (__builtin_popcount(static_cast<unsigned>(mask)) == k) {
        index_of[static_cast<size_t>(k)][static_cast<size_t>(mask)] = static_cast<int>(masks.size());
        masks.push_back(mask);
      }
    auto& exp = L.exp[static_cast<size_t>(k)];
    exp.resize(masks.size() * static_cast<size_t>(k));
    for (size_t s = 0; s < masks.size(); s++) {
      int mask = masks[s], t = 0;
      for (int col = 0; col < n; col++) {
        if (!(mask & (1 << col))) continue;
        int sign = ((k - 1) + t) % 2 ? -1 : 1;
        int prev = index_of[static_cast<size_t>(k - 1)][static_cast<size_t>(mask ^ (1 << col))];
        exp[s * static_cast<size_t>(k) + static_cast<size_t>(t)] = {col, sign, prev};
        t++;
      }
    }
  }
  return L;
}

// plain textbook determinant (n <= 4), used on leaf minors
int64_t det_small(const int64_t* a, int n) {
  switch (n) {
    case 0: return 1;
    case 1: return a[0];
    case 2: return a[0] * a[3] - a[1] * a[2];
    case 3:
      return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
             a[2] * (a[3] * a[7] - a[4] * a[6]);
    default: {
      int64_t d = 0;
      std::array<int64_t, 9> sub;
      for (int j = 0; j < n; j++) {
        for (int i = 1; i < n; i++) {
          int t = 0;
          for (int c = 0; c < n; c++) {
            if (c == j) continue;
            sub[static_cast<size_t>((i - 1) * (n - 1) + t++)] = a[i * n + c];
          }
        }
        int64_t m = a[j] * det_small(sub.data(), n - 1);
        d += (j % 2) ? -m : m;
      }
      return d;
    }
  }
}

// DFS over rows with subset-minor pruning.  bound_cof: inverse entries must
// lie in [-b, b] (problem (i)); otherwise they only need to be nonzero.
struct DfsEngine {
  int n;
  long b;
  bool bound_cof;
  const Levels& levels;
  const std::vector<int64_t>& rows;
  size_t nrows;

  std::vector<std::vector<int64_t>> minors;
  std::vector<size_t> chosen;
  std::vector<IntMatrix> out;
  unsigned long long explored = 0;

  DfsEngine(int n_, long b_, bool bound_cof_, const Levels& lv, const std::vector<int64_t>& rw)
      : n(n_), b(b_), bound_cof(bound_cof_), levels(lv), rows(rw),
        nrows(rw.size() / static_cast<size_t>(n_)) {
    minors.resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; k++) minors[static_cast<size_t>(k)].resize(levels.masks[static_cast<size_t>(k)].size());
    minors[0][0] = 1;
    chosen.resize(static_cast<size_t>(n));
  }

  void run(size_t lo, size_t hi) { rec(0, lo, hi); }

  void rec(int depth, size_t lo, size_t hi) {
    size_t begin = depth == 0 ? lo : 0;
    size_t end = depth == 0 ? hi : nrows;
    int k = depth + 1;
    auto& cur = minors[static_cast<size_t>(k)];
    const auto& prev = minors[static_cast<size_t>(depth)];
    const auto& masks = levels.masks[static_cast<size_t>(k)];
    const auto& exp = levels.exp[static_cast<size_t>(k)];
    for (size_t ri = begin; ri < end; ri++) {
      explored++;
      const int64_t* r = &rows[ri * static_cast<size_t>(n)];
      bool all_zero = true;
      int64_t g = 0;
      for (size_t s = 0; s < masks.size(); s++) {
        int64_t acc = 0;
        const std::array<int, 3>* e = &exp[s * static_cast<size_t>(k)];
        for (int t = 0; t < k; t++)
          acc += e[t][1] * r[e[t][0]] * prev[static_cast<size_t>(e[t][2])];
        cur[s] = acc;
        if (acc != 0) all_zero = false;
        g = std::gcd(g, acc < 0 ? -acc : acc);
      }
      if (all_zero) continue;  // completed rows are rank deficient
      if (g > 1) continue;     // every completion has determinant divisible by g
      if (k == n) {
        int64_t d = cur[0];
        if (d != 1 && d != -1) continue;
        chosen[static_cast<size_t>(depth)] = ri;
        finish(d);
        continue;
      }
      if (k == n - 1) {
        // these minors are the last-row cofactors of any completion
        bool ok = true;
        for (size_t s = 0; s < masks.size() && ok; s++) {
          int64_t a = cur[s] < 0 ? -cur[s] : cur[s];
          if (a == 0 || (bound_cof && a > b)) ok = false;
        }
        if (!ok) continue;
      }
      chosen[static_cast<size_t>(depth)] = ri;
      rec(depth + 1, 0, 0);
    }
  }

  void finish(int64_t det_val) {
    std::array<int64_t, 16> m;
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++)
        m[static_cast<size_t>(i * n + j)] = rows[chosen[static_cast<size_t>(i)] * static_cast<size_t>(n) + static_cast<size_t>(j)];
    // inverse entries are +-cofactors; screen them before emitting
    std::array<int64_t, 9> sub;
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        int t = 0;
        for (int r = 0; r < n; r++) {
          if (r == i) continue;
          for (int c = 0; c < n; c++) {
            if (c == j) continue;
            sub[static_cast<size_t>(t++)] = m[static_cast<size_t>(r * n + c)];
          }
        }
        int64_t cof = det_small(sub.data(), n - 1);
        int64_t a = cof < 0 ? -cof : cof;
        if (a == 0 || (bound_cof && a > b)) return;
      }
    (void)det_val;
    IntMatrix im(n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) im.at(i, j) = m[static_cast<size_t>(i * n + j)];
    out.push_back(std::move(im));
  }
};

struct LevelResult {
  std::vector<IntMatrix> found;
  unsigned long long explored = 0;
};

LevelResult run_level(int n, long b, bool bound_cof, int workers) {
  Levels levels = build_levels(n);
  std::vector<int64_t> rows = candidate_rows(n, b);
  size_t nrows = rows.size() / static_cast<size_t>(n);
  size_t w = std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(workers), nrows));
  std::vector<DfsEngine> engines;
  engines.reserve(w);
  for (size_t i = 0; i < w; i++) engines.emplace_back(n, b, bound_cof, levels, rows);
  if (w == 1) {
    engines[0].run(0, nrows);
  } else {
    std::vector<std::thread> pool;
    for (size_t i = 0; i < w; i++) {
      size_t lo = nrows * i / w, hi = nrows * (i + 1) / w;
      pool.emplace_back([&engines, i, lo, hi]() { engines[i].run(lo, hi); });
    }
    for (auto& th : pool) th.join();
  }
  LevelResult res;
  for (auto& e : engines) {
    res.explored += e.explored;
    std::move(e.out.begin(), e.out.end(), std::back_inserter(res.found));
  }
  return res;
}

void check_dim_bound(int n, long b) {
  if (n < 1 || n > kMaxDim)
    fail(ErrorCode::TooLarge, "exhaustive search supports 1 <= n <= 4 (randomized mode beyond)");
  if (b < 1 || b > kMaxBound) fail(ErrorCode::TooLarge, "entry bound must be in [1, 16]");
}

}  // namespace

std::vector<IntMatrix> dfs_problem_i_level(int n, long b, int workers,
                                           unsigned long long* explored) {
  check_dim_bound(n, b);
  if (workers < 1) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
  LevelResult res = run_level(n, b, /*bound_cof=*/true, workers);
  if (explored) *explored = res.explored;
  return std::move(res.found);
}

std::vector<IntMatrix> naive_problem_i_level(int n, long b) {
  check_dim_bound(n, b);
  double space = 1;
  for (int i = 0; i < n * n; i++) space *= static_cast<double>(2 * b);
  if (space > 2e7) fail(ErrorCode::TooLarge, "brute-force space too large");
  std::vector<long> t(static_cast<size_t>(n) * n, 0);
  std::vector<IntMatrix> out;
  std::array<int64_t, 16> m;
  while (true) {
    for (size_t k = 0; k < t.size(); k++) m[k] = value_of(t[k], b);
    int64_t d = det_small(m.data(), n);
    if (d == 1 || d == -1) {
      IntMatrix im(n);
      for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) im.at(i, j) = m[static_cast<size_t>(i * n + j)];
      ExactInverse inv = inverse_exact(im);
      bool ok = true;
      for (int i = 0; i < n && ok; i++)
        for (int j = 0; j < n && ok; j++) {
          const Int& v = inv.integral->at(i, j);
          if (v == 0 || cmp_abs(v, Int(b)) > 0) ok = false;
        }
      if (ok) out.push_back(std::move(im));
    }
    int pos = static_cast<int>(t.size()) - 1;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == 2 * b - 1) t[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    t[static_cast<size_t>(pos)]++;
  }
  return out;
}

SearchReport exhaustive_problem_i(int n, long b_max, const SearchOptions& opt) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "problem (i) needs n >= 2");
  check_dim_bound(n, b_max);
  if (opt.workers < 1) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.spec.kind = ProblemKind::MinConcatNorm;
  rep.spec.n = n;
  rep.spec.b_max = b_max;
  rep.workers = opt.workers;
  rep.class_order = opt.order;
  for (long b = 1; b <= b_max; b++) {
    LevelResult res = run_level(n, b, /*bound_cof=*/true, opt.workers);
    rep.explored += res.explored;
    if (res.found.empty()) continue;
    rep.found = true;
    rep.minimal_norm = Int(b);
    rep.count = static_cast<long>(res.found.size());
    rep.solutions.reserve(res.found.size());
    for (IntMatrix& m : res.found) {
      // independent re-verification of every reported optimum
      MatrixProfile p = profile(m);
      if (!p.unimodular || !p.zerofree || !p.concat_norm_int || *p.concat_norm_int != b)
        fail(ErrorCode::InvalidArgument, "search self-check failed");
      Solution s;
      s.norm = *p.concat_norm_int;
      s.inverse_int = inverse_exact(m).integral;
      s.matrix = std::move(m);
      rep.solutions.push_back(std::move(s));
    }
    if (opt.classes) {
      std::vector<IntMatrix> ms;
      ms.reserve(rep.solutions.size());
      for (const Solution& s : rep.solutions) ms.push_back(s.matrix);
      rep.classes = partition_classes(ms, opt.order, opt.workers);
    }
    break;
  }
  rep.complete = true;  // the scan over b <= b_max ran to its end either way
  rep.status = rep.found ? "ok" : "NoSolutionWithinBound";
  rep.runtime_sec = seconds_since(t0);
  return rep;
}

SearchReport exhaustive_problem_ii(const std::vector<Int>& lambda, long m_bound,
                                   bool zerofree_product, const SearchOptions& opt) {
  int n = static_cast<int>(lambda.size());
  check_dim_bound(n, m_bound);
  if (opt.workers < 1) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
  for (size_t i = 0; i < lambda.size(); i++) {
    if (lambda[i] <= 0) fail(ErrorCode::InvalidArgument, "lambda must be positive");
    if (i && lambda[i] <= lambda[i - 1])
      fail(ErrorCode::InvalidArgument, "lambda must be strictly increasing");
  }
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.spec.kind = zerofree_product ? ProblemKind::MinProductNormZerofree : ProblemKind::MinProductNorm;
  rep.spec.n = n;
  rep.spec.lambda = lambda;
  rep.spec.m_bound = m_bound;
  rep.workers = opt.workers;
  rep.class_order = opt.order;

  LevelResult res = run_level(n, m_bound, /*bound_cof=*/false, opt.workers);
  rep.explored = res.explored;

  IntMatrix lam(n);
  for (int i = 0; i < n; i++) lam.at(i, i) = lambda[static_cast<size_t>(i)];

  // A solution is a choice of M; distinct M can share a product A = M lam M^-1
  // (column sign flips alone give four M per A).  count tallies solution
  // instances, solutions lists the distinct products, and class sizes weight
  // each product by its number of realizations.
  std::optional<Int> best;
  std::map<IntMatrix, long> optima;  // distinct product -> #M realizing it
  long instances = 0;
  for (const IntMatrix& m : res.found) {
    ExactInverse inv = inverse_exact(m);
    IntMatrix a = m * lam * *inv.integral;
    if (zerofree_product && !profile(a).zerofree) continue;
    Int norm = a.max_abs();
    if (!best || norm < *best) {
      best = norm;
      optima.clear();
      instances = 0;
    }
    if (norm == *best) {
      optima[std::move(a)]++;
      instances++;
    }
  }
  rep.found = best.has_value();
  rep.minimal_norm = best;
  rep.count = instances;
  for (const auto& [a, mult] : optima) {
    Solution s;
    s.matrix = a;
    ExactInverse ai = inverse_exact(a);
    if (ai.integral) s.inverse_int = std::move(ai.integral);
    else s.inverse_rat = std::move(ai.inverse);
    s.norm = a.max_abs();
    rep.solutions.push_back(std::move(s));
  }
  if (opt.classes && !optima.empty()) {
    std::map<IntMatrix, long> by_canon;
    for (const auto& [a, mult] : optima) by_canon[canonicalize(a, opt.order)] += mult;
    std::vector<EquivClass> cls;
    cls.reserve(by_canon.size());
    for (auto& [c, cnt] : by_canon) cls.push_back({c, cnt});
    std::sort(cls.begin(), cls.end(), [&](const EquivClass& x, const EquivClass& y) {
      return compare(opt.order, x.representative, y.representative) < 0;
    });
    rep.classes = std::move(cls);
  }
  rep.complete = false;  // minimality is relative to m_bound
  rep.status = rep.found ? "ok" : "NoSolutionWithinBound";
  rep.runtime_sec = seconds_since(t0);
  return rep;
}

namespace {

IntMatrix random_walk(int n, long steps, std::mt19937_64& rng, const RandomWalkParams& p) {
  IntMatrix m = IntMatrix::identity(n);
  long span = static_cast<long>(p.mult_max) - p.mult_min + 1;
  if (span < 1 || (p.mult_min == 0 && p.mult_max == 0))
    fail(ErrorCode::InvalidArgument, "empty multiplier range");
  auto pick = [&](long k) { return static_cast<long>(rng() % static_cast<uint64_t>(k)); };
  for (long s = 0; s < steps; s++) {
    unsigned roll = static_cast<unsigned>(rng() % 100);
    bool cols = rng() % 2 == 0;
    if (n < 2 || roll < p.flip_percent) {
      int i = static_cast<int>(pick(n));
      for (int t = 0; t < n; t++) {
        if (cols) m.at(t, i) = -m.at(t, i);
        else m.at(i, t) = -m.at(i, t);
      }
      continue;
    }
    int i = static_cast<int>(pick(n));
    int j = static_cast<int>(pick(n - 1));
    if (j >= i) j++;
    if (roll < p.flip_percent + p.swap_percent) {
      for (int t = 0; t < n; t++) {
        if (cols) std::swap(m.at(t, i), m.at(t, j));
        else std::swap(m.at(i, t), m.at(j, t));
      }
      continue;
    }
    for (int attempt = 0; attempt < 8; attempt++) {
      long mult;
      do mult = p.mult_min + pick(span);
      while (mult == 0);
      bool fits = true;
      if (p.norm_cap > 0) {
        for (int t = 0; t < n && fits; t++) {
          Int e = cols ? m.at(t, i) + mult * m.at(t, j) : m.at(i, t) + mult * m.at(j, t);
          fits = abs_int(e) <= p.norm_cap;
        }
      }
      if (!fits) continue;  // redraw; rejection keeps the stream deterministic
      for (int t = 0; t < n; t++) {
        if (cols) m.at(t, i) += mult * m.at(t, j);
        else m.at(i, t) += mult * m.at(j, t);
      }
      break;
    }
  }
  return m;
}

// ---- int64 descent used inside each randomized-search iteration ----

// determinant of a k x k int64 matrix, Bareiss fraction-free elimination with
// row pivoting; destroys a.  Exact while minors fit int64 (Hadamard bound:
// fine for k <= 9 with |entries| <= 32).
int64_t det64_destructive(std::vector<int64_t>& a, int k) {
  if (k == 0) return 1;
  int64_t sign = 1, prev = 1;
  for (int p = 0; p + 1 < k; p++) {
    if (a[static_cast<size_t>(p) * k + p] == 0) {
      int r = p + 1;
      while (r < k && a[static_cast<size_t>(r) * k + p] == 0) r++;
      if (r == k) return 0;
      for (int c = p; c < k; c++)
        std::swap(a[static_cast<size_t>(p) * k + c], a[static_cast<size_t>(r) * k + c]);
      sign = -sign;
    }
    for (int r = p + 1; r < k; r++) {
      for (int c = p + 1; c < k; c++)
        a[static_cast<size_t>(r) * k + c] =
            (a[static_cast<size_t>(r) * k + c] * a[static_cast<size_t>(p) * k + p] -
             a[static_cast<size_t>(r) * k + p] * a[static_cast<size_t>(p) * k + c]) /
            prev;
      a[static_cast<size_t>(r) * k + p] = 0;
    }
    prev = a[static_cast<size_t>(p) * k + p];
  }
  return sign * a[static_cast<size_t>(k - 1) * k + (k - 1)];
}

// (zero entries in m and adj(m), max |entry| over both), ordered
// lexicographically; for |det| = 1 the adjugate is the inverse up to sign
struct Score {
  int zeros = 0;
  int64_t norm = 0;
  bool operator<=(const Score& o) const {
    return zeros != o.zeros ? zeros < o.zeros : norm <= o.norm;
  }
};

Score score64(const std::vector<int64_t>& m, int n, std::vector<int64_t>& scratch) {
  Score s;
  for (int64_t v : m) {
    if (v == 0) s.zeros++;
    s.norm = std::max(s.norm, v < 0 ? -v : v);
  }
  int k = n - 1;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      scratch.clear();
      for (int r = 0; r < n; r++) {
        if (r == i) continue;
        for (int c = 0; c < n; c++)
          if (c != j) scratch.push_back(m[static_cast<size_t>(r) * n + c]);
      }
      int64_t d = det64_destructive(scratch, k);
      if (d == 0) s.zeros++;
      s.norm = std::max(s.norm, d < 0 ? -d : d);
    }
  return s;
}

// one random elementary op on an int64 buffer, same mix and cap rules as
// random_walk
void op64(std::vector<int64_t>& m, int n, std::mt19937_64& rng, const RandomWalkParams& p) {
  long span = static_cast<long>(p.mult_max) - p.mult_min + 1;
  auto pick = [&](long k) { return static_cast<long>(rng() % static_cast<uint64_t>(k)); };
  unsigned roll = static_cast<unsigned>(rng() % 100);
  bool cols = rng() % 2 == 0;
  if (n < 2 || roll < p.flip_percent) {
    int i = static_cast<int>(pick(n));
    for (int t = 0; t < n; t++) {
      size_t idx = cols ? static_cast<size_t>(t) * n + i : static_cast<size_t>(i) * n + t;
      m[idx] = -m[idx];
    }
    return;
  }
  int i = static_cast<int>(pick(n));
  int j = static_cast<int>(pick(n - 1));
  if (j >= i) j++;
  if (roll < p.flip_percent + p.swap_percent) {
    for (int t = 0; t < n; t++) {
      size_t a = cols ? static_cast<size_t>(t) * n + i : static_cast<size_t>(i) * n + t;
      size_t b = cols ? static_cast<size_t>(t) * n + j : static_cast<size_t>(j) * n + t;
      std::swap(m[a], m[b]);
    }
    return;
  }
  for (int attempt = 0; attempt < 8; attempt++) {
    long mult;
    do mult = p.mult_min + pick(span);
    while (mult == 0);
    bool fits = true;
    if (p.norm_cap > 0) {
      for (int t = 0; t < n && fits; t++) {
        size_t a = cols ? static_cast<size_t>(t) * n + i : static_cast<size_t>(i) * n + t;
        size_t b = cols ? static_cast<size_t>(t) * n + j : static_cast<size_t>(j) * n + t;
        fits = std::max(m[a] + mult * m[b], -(m[a] + mult * m[b])) <= p.norm_cap;
      }
    }
    if (!fits) continue;
    for (int t = 0; t < n; t++) {
      size_t a = cols ? static_cast<size_t>(t) * n + i : static_cast<size_t>(i) * n + t;
      size_t b = cols ? static_cast<size_t>(t) * n + j : static_cast<size_t>(j) * n + t;
      m[a] += mult * m[b];
    }
    return;
  }
}

constexpr int kClimbProposals = 256;

// one iteration: capped random walk, then a greedy descent on (zeros, norm)
// with occasional uphill moves; returns the best zerofree candidate seen.
// Deterministic in the rng stream.
std::optional<IntMatrix> climb_iteration(int n, std::mt19937_64& rng, const RandomWalkParams& p,
                                         std::optional<int64_t> target) {
  long steps = p.steps_min +
               static_cast<long>(rng() % static_cast<uint64_t>(p.steps_max - p.steps_min + 1));
  IntMatrix start = random_walk(n, steps, rng, p);
  std::vector<int64_t> x(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) x[static_cast<size_t>(i) * n + j] = *to_int64(start.at(i, j));

  std::vector<int64_t> scratch, y, best_m;
  Score fx = score64(x, n, scratch);
  std::optional<int64_t> best;
  auto consider = [&](const Score& s, const std::vector<int64_t>& m) {
    if (s.zeros == 0 && (!best || s.norm < *best)) {
      best = s.norm;
      best_m = m;
    }
  };
  consider(fx, x);
  for (int it = 0; it < kClimbProposals; it++) {
    if (best && target && *best <= *target) break;
    y = x;
    op64(y, n, rng, p);
    Score fy = score64(y, n, scratch);
    consider(fy, y);
    if (fy <= fx || rng() % 100 < 5) {
      x.swap(y);
      fx = fy;
    }
  }
  if (!best) return std::nullopt;
  IntMatrix out(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) out.at(i, j) = best_m[static_cast<size_t>(i) * n + j];
  return out;
}

}  // namespace

IntMatrix random_unimodular(int n, long steps, uint64_t seed, const RandomWalkParams& params) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (steps < 0) fail(ErrorCode::InvalidArgument, "steps must be >= 0");
  std::mt19937_64 rng(seed);
  return random_walk(n, steps, rng, params);
}

SearchReport randomized_zerofree_search(int n, std::optional<Int> target_norm, uint64_t budget,
                                        uint64_t seed, const SearchOptions& opt,
                                        const RandomWalkParams& params,
                                        const RandomSearchState* resume) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (budget < 1) fail(ErrorCode::InvalidArgument, "budget must be >= 1");
  if (opt.workers < 1) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
  if (params.steps_min < 0 || params.steps_max < params.steps_min)
    fail(ErrorCode::InvalidArgument, "bad walk length range");
  auto t0 = std::chrono::steady_clock::now();

  // Small concat norms live in a tiny corner of the walk space, so cap the
  // walk near the goal and mix longer.  Derived only from (params, n,
  // target_norm) -- reports stay a function of the call arguments.
  RandomWalkParams eff = params;
  if (eff.norm_cap == 0) {
    std::optional<int64_t> t = target_norm ? to_int64(*target_norm) : std::nullopt;
    eff.norm_cap = t && *t >= 1 ? static_cast<long>(*t) : 3L * n;
  }
  RandomWalkParams stock;
  if (params.steps_min == stock.steps_min && params.steps_max == stock.steps_max) {
    eff.steps_min = 4 * n;
    eff.steps_max = 16 * n;
  }

  uint64_t start = resume ? resume->iterations_done : 0;
  std::optional<Int> base_best = resume ? resume->best_norm : std::nullopt;
  std::set<IntMatrix> witnesses;
  if (resume)
    for (const IntMatrix& w : resume->witnesses) witnesses.insert(w);

  struct Find {
    uint64_t iter;
    Int norm;
    IntMatrix m;
  };

  // int64 minors stay exact within these bounds; beyond them fall back to a
  // plain walk with exact filtering
  bool climb = n <= 10 && eff.norm_cap >= 1 && eff.norm_cap <= 32;
  std::optional<int64_t> target64 = target_norm ? to_int64(*target_norm) : std::nullopt;

  uint64_t iterations_done = start;
  bool base_meets_target = target_norm && base_best && *base_best <= *target_norm;
  if (start < budget && !base_meets_target) {
    std::atomic<uint64_t> cutoff{UINT64_MAX};
    size_t w = static_cast<size_t>(opt.workers);
    std::vector<std::vector<Find>> finds(w);
    auto work = [&](size_t wi) {
      std::optional<Int> local_best = base_best;
      for (uint64_t i = start + wi; i < budget; i += w) {
        if (i > cutoff.load(std::memory_order_relaxed)) break;
        std::mt19937_64 rng(mix_seed(seed, i));
        std::optional<IntMatrix> cand;
        if (climb) {
          cand = climb_iteration(n, rng, eff, target64);
        } else {
          long steps = eff.steps_min +
                       static_cast<long>(rng() % static_cast<uint64_t>(eff.steps_max - eff.steps_min + 1));
          cand = random_walk(n, steps, rng, eff);
        }
        if (!cand) continue;
        IntMatrix m = std::move(*cand);
        MatrixProfile p = profile(m);
        if (!p.zerofree || !p.concat_norm_int) continue;
        Int norm = *p.concat_norm_int;
        if (local_best && norm > *local_best) continue;
        local_best = norm;
        finds[wi].push_back({i, std::move(norm), std::move(m)});
        if (target_norm && *local_best <= *target_norm) {
          uint64_t cur = cutoff.load();
          while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {}
        }
      }
    };
    if (w == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (size_t wi = 0; wi < w; wi++) pool.emplace_back(work, wi);
      for (auto& th : pool) th.join();
    }
    // sequential replay in iteration order; worker overshoot past the first
    // target hit is discarded, making the result partition-independent
    std::vector<Find> all;
    for (auto& f : finds) std::move(f.begin(), f.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), [](const Find& a, const Find& b) { return a.iter < b.iter; });
    std::optional<uint64_t> stop_at;
    for (Find& f : all) {
      if (stop_at && f.iter > *stop_at) break;
      if (!base_best || f.norm < *base_best) {
        base_best = f.norm;
        witnesses.clear();
        witnesses.insert(std::move(f.m));
      } else if (f.norm == *base_best) {
        witnesses.insert(std::move(f.m));
        if (witnesses.size() > kMaxWitnesses) witnesses.erase(std::prev(witnesses.end()));
      }
      if (!stop_at && target_norm && base_best && *base_best <= *target_norm) stop_at = f.iter;
    }
    iterations_done = stop_at ? *stop_at + 1 : budget;
  }

  SearchReport rep;
  rep.spec.kind = ProblemKind::MinConcatNorm;
  rep.spec.n = n;
  rep.workers = opt.workers;
  rep.class_order = opt.order;
  rep.seed = seed;
  rep.iterations_done = iterations_done;
  rep.explored = iterations_done;
  rep.found = base_best.has_value();
  rep.minimal_norm = base_best;
  for (const IntMatrix& m : witnesses) {
    MatrixProfile p = profile(m);  // never report an unverified witness
    if (!p.zerofree || !p.concat_norm_int || *p.concat_norm_int != *base_best)
      fail(ErrorCode::InvalidArgument, "randomized search self-check failed");
    Solution s;
    s.matrix = m;
    s.inverse_int = inverse_exact(m).integral;
    s.norm = *p.concat_norm_int;
    rep.solutions.push_back(std::move(s));
  }
  rep.count = static_cast<long>(rep.solutions.size());
  if (opt.classes && !witnesses.empty()) {
    std::vector<IntMatrix> ms(witnesses.begin(), witnesses.end());
    if (n <= 5) rep.classes = partition_classes(ms, opt.order, opt.workers);
  }
  rep.complete = false;
  rep.status = rep.found ? "ok" : "NoSolutionWithinBound";
  rep.runtime_sec = seconds_since(t0);
  return rep;
}

RandomSearchState state_from_report(const SearchReport& report) {
  RandomSearchState st;
  st.seed = report.seed.value_or(0);
  st.iterations_done = report.iterations_done;
  st.best_norm = report.minimal_norm;
  for (const Solution& s : report.solutions) st.witnesses.push_back(s.matrix);
  return st;
}

}  // namespace matroots
