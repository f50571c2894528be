#include "matroots/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <thread>

#include "matroots/signed_perm.hpp"

namespace matroots {

namespace {

inline int cmp_plain(int64_t a, int64_t b) { return a < b ? -1 : a > b ? 1 : 0; }
inline int cmp_plain(const Int& a, const Int& b) { return cmp(a, b); }
inline int cmp_absval(int64_t a, int64_t b) {
  uint64_t x = a < 0 ? -static_cast<uint64_t>(a) : a;
  uint64_t y = b < 0 ? -static_cast<uint64_t>(b) : b;
  return x < y ? -1 : x > y ? 1 : 0;
}
inline int cmp_absval(const Int& a, const Int& b) { return cmp_abs(a, b); }
inline bool positive(int64_t a) { return a > 0; }
inline bool positive(const Int& a) { return sgn(a) > 0; }

template <class T>
int cmp_value(bool structural, const T& a, const T& b) {
  if (!structural) return cmp_plain(a, b);
  int ca = positive(a) ? 0 : 1, cb = positive(b) ? 0 : 1;
  if (ca != cb) return ca < cb ? -1 : 1;
  if (ca == 0) return cmp_plain(a, b);
  return cmp_absval(a, b);
}

// exact minimal image over the double action.  DFS builds the output cell by
// cell, keeping only locally minimal placements (every partial placement
// completes, so non-minimal branches can never win) and bounding against the
// best complete candidate found so far.
template <class T>
class MinImage {
 public:
  MinImage(int n, std::vector<T> src, bool structural)
      : n_(n), src_(std::move(src)), structural_(structural) {}

  std::vector<T> run() {
    out_.assign(static_cast<size_t>(n_) * n_, T(0));
    col_of_.assign(static_cast<size_t>(n_), -1);
    col_sign_.assign(static_cast<size_t>(n_), 0);
    col_used_.assign(static_cast<size_t>(n_), false);
    row_used_.assign(static_cast<size_t>(n_), false);
    have_best_ = false;
    first_row(0, 0);
    return best_;
  }

 private:
  const T& src(int i, int j) const { return src_[static_cast<size_t>(i) * n_ + j]; }

  // rel: -1 if out_ prefix already strictly below best_ at branch time
  // (used for pruning only; best_ may improve mid-search, so the leaf always
  // does a full comparison)
  void place_rest(int row, int rel) {
    if (row == n_) {
      if (!have_best_) {
        best_ = out_;
        have_best_ = true;
        return;
      }
      int c = 0;
      for (size_t k = 0; k < out_.size() && c == 0; k++)
        c = cmp_value(structural_, out_[k], best_[k]);
      if (c < 0) best_ = out_;
      return;
    }
    // candidates: unused source row r with sign e; keep the lex-min transformed row
    std::vector<std::pair<int, int>> arg;
    std::vector<T> minrow;
    for (int r = 0; r < n_; r++) {
      if (row_used_[static_cast<size_t>(r)]) continue;
      for (int e = 1; e >= -1; e -= 2) {
        std::vector<T> w(static_cast<size_t>(n_));
        for (int j = 0; j < n_; j++) {
          T v = src(r, col_of_[static_cast<size_t>(j)]);
          if (e * col_sign_[static_cast<size_t>(j)] < 0) v = -v;
          w[static_cast<size_t>(j)] = std::move(v);
        }
        if (arg.empty()) {
          minrow = std::move(w);
          arg.emplace_back(r, e);
          continue;
        }
        int c = 0;
        for (int j = 0; j < n_ && c == 0; j++)
          c = cmp_value(structural_, w[static_cast<size_t>(j)], minrow[static_cast<size_t>(j)]);
        if (c < 0) {
          minrow = std::move(w);
          arg.clear();
          arg.emplace_back(r, e);
        } else if (c == 0) {
          arg.emplace_back(r, e);
        }
      }
    }
    // bound against best
    int nrel = rel;
    if (have_best_ && nrel == 0) {
      for (int j = 0; j < n_ && nrel == 0; j++) {
        int c = cmp_value(structural_, minrow[static_cast<size_t>(j)],
                          best_[static_cast<size_t>(row) * n_ + j]);
        if (c > 0) return;  // prefix beaten
        if (c < 0) nrel = -1;
      }
    }
    for (int j = 0; j < n_; j++) out_[static_cast<size_t>(row) * n_ + j] = minrow[static_cast<size_t>(j)];
    for (auto [r, e] : arg) {
      row_used_[static_cast<size_t>(r)] = true;
      place_rest(row + 1, nrel);
      row_used_[static_cast<size_t>(r)] = false;
      (void)e;
    }
  }

  // fill output row 0 position by position, fixing the column map as we go
  void first_row(int t, int rel) {
    if (t == n_) {
      place_rest(1, rel);
      return;
    }
    struct Cand {
      int r, e, c, d;
    };
    std::vector<Cand> arg;
    const T* minv = nullptr;
    T hold(0);
    auto consider = [&](int r, int e, int c, int d, const T& raw) {
      T v = raw;
      if (e * d < 0) v = -v;
      if (!minv) {
        hold = std::move(v);
        minv = &hold;
        arg.assign(1, {r, e, c, d});
        return;
      }
      int k = cmp_value(structural_, v, hold);
      if (k < 0) {
        hold = std::move(v);
        arg.assign(1, {r, e, c, d});
      } else if (k == 0) {
        arg.push_back({r, e, c, d});
      }
    };
    if (t == 0) {
      for (int r = 0; r < n_; r++)
        for (int e = 1; e >= -1; e -= 2)
          for (int c = 0; c < n_; c++)
            for (int d = 1; d >= -1; d -= 2) consider(r, e, c, d, src(r, c));
    } else {
      for (int c = 0; c < n_; c++) {
        if (col_used_[static_cast<size_t>(c)]) continue;
        for (int d = 1; d >= -1; d -= 2) consider(row0_r_, row0_e_, c, d, src(row0_r_, c));
      }
    }
    int nrel = rel;
    if (have_best_ && nrel == 0) {
      int k = cmp_value(structural_, hold, best_[static_cast<size_t>(t)]);
      if (k > 0) return;
      if (k < 0) nrel = -1;
    }
    out_[static_cast<size_t>(t)] = hold;
    for (const Cand& cd : arg) {
      if (t == 0) {
        row0_r_ = cd.r;
        row0_e_ = cd.e;
        row_used_[static_cast<size_t>(cd.r)] = true;
      }
      col_used_[static_cast<size_t>(cd.c)] = true;
      col_of_[static_cast<size_t>(t)] = cd.c;
      col_sign_[static_cast<size_t>(t)] = cd.e * cd.d > 0 ? 1 : -1;
      first_row(t + 1, nrel);
      col_used_[static_cast<size_t>(cd.c)] = false;
      if (t == 0) row_used_[static_cast<size_t>(cd.r)] = false;
    }
  }

  int n_;
  std::vector<T> src_;
  bool structural_;
  std::vector<T> out_, best_;
  std::vector<int> col_of_, col_sign_;
  std::vector<bool> col_used_, row_used_;
  bool have_best_ = false;
  int row0_r_ = -1, row0_e_ = 1;
};

}  // namespace

int compare_value(MatrixOrder o, const Int& a, const Int& b) {
  return cmp_value(o == MatrixOrder::StructuralKey, a, b);
}

int compare(MatrixOrder o, const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (int i = 0; i < a.dim(); i++)
    for (int j = 0; j < a.dim(); j++) {
      int c = compare_value(o, a.at(i, j), b.at(i, j));
      if (c != 0) return c;
    }
  return 0;
}

IntMatrix canonicalize(const IntMatrix& m, MatrixOrder order) {
  int n = m.dim();
  if (n > 5) fail(ErrorCode::TooLarge, "canonicalization limited to dim <= 5");
  if (n == 0) return m;
  bool structural = order == MatrixOrder::StructuralKey;
  if (m.fits_int64()) {
    std::vector<int64_t> src(static_cast<size_t>(n) * n);
    for (size_t k = 0; k < src.size(); k++) src[k] = m.entries()[k].get_si();
    MinImage<int64_t> eng(n, std::move(src), structural);
    std::vector<int64_t> r = eng.run();
    IntMatrix out(n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) out.at(i, j) = r[static_cast<size_t>(i) * n + j];
    return out;
  }
  MinImage<Int> eng(n, m.entries(), structural);
  std::vector<Int> r = eng.run();
  return IntMatrix(n, std::move(r));
}

IntMatrix canonicalize_exhaustive(const IntMatrix& m, MatrixOrder order) {
  int n = m.dim();
  if (n > 4) fail(ErrorCode::TooLarge, "exhaustive canonicalization limited to dim <= 4");
  if (n == 0) return m;
  std::vector<SignedPerm> g = signed_perm_group(n);
  bool first = true;
  IntMatrix best;
  for (const SignedPerm& p : g)
    for (const SignedPerm& q : g) {
      IntMatrix cand = act(p, m, q);
      if (first || compare(order, cand, best) < 0) {
        best = std::move(cand);
        first = false;
      }
    }
  return best;
}

std::vector<IntMatrix> orbit(const IntMatrix& m) {
  int n = m.dim();
  if (n > 4) fail(ErrorCode::TooLarge, "orbit materialization limited to dim <= 4");
  std::vector<SignedPerm> g = signed_perm_group(n);
  std::set<IntMatrix> seen;
  for (const SignedPerm& p : g)
    for (const SignedPerm& q : g) seen.insert(act(p, m, q));
  return {seen.begin(), seen.end()};
}

bool equivalent(const IntMatrix& a, const IntMatrix& b, MatrixOrder order) {
  if (a.dim() != b.dim()) return false;
  return canonicalize(a, order) == canonicalize(b, order);
}

std::vector<EquivClass> partition_classes(const std::vector<IntMatrix>& ms, MatrixOrder order,
                                          int workers) {
  if (workers < 1) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
  std::vector<IntMatrix> canon(ms.size());
  if (workers == 1 || ms.size() < 2) {
    for (size_t i = 0; i < ms.size(); i++) canon[i] = canonicalize(ms[i], order);
  } else {
    size_t w = std::min<size_t>(static_cast<size_t>(workers), ms.size());
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (size_t t = 0; t < w; t++)
      pool.emplace_back([&, t]() {
        for (size_t i = t; i < ms.size(); i += w) canon[i] = canonicalize(ms[i], order);
      });
    for (auto& th : pool) th.join();
  }
  std::map<IntMatrix, long> counts;
  for (const IntMatrix& c : canon) counts[c]++;
  std::vector<EquivClass> out;
  out.reserve(counts.size());
  for (auto& [rep, cnt] : counts) out.push_back({rep, cnt});
  std::sort(out.begin(), out.end(), [order](const EquivClass& a, const EquivClass& b) {
    return compare(order, a.representative, b.representative) < 0;
  });
  return out;
}

}  // namespace matroots
