#include "matroots/signed_perm.hpp"

#include <algorithm>
#include <numeric>

namespace matroots {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm s;
  s.perm.resize(static_cast<size_t>(n));
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.signs.assign(static_cast<size_t>(n), 1);
  return s;
}

IntMatrix SignedPerm::matrix() const {
  IntMatrix m(dim());
  for (int i = 0; i < dim(); i++) m.at(i, perm[static_cast<size_t>(i)]) = signs[static_cast<size_t>(i)];
  return m;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  int n = dim();
  r.perm.resize(static_cast<size_t>(n));
  r.signs.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) {
    r.perm[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    r.signs[static_cast<size_t>(perm[static_cast<size_t>(i)])] = signs[static_cast<size_t>(i)];
  }
  return r;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "composition dimensions differ");
  int n = a.dim();
  SignedPerm r;
  r.perm.resize(static_cast<size_t>(n));
  r.signs.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) {
    int k = a.perm[static_cast<size_t>(i)];
    r.perm[static_cast<size_t>(i)] = b.perm[static_cast<size_t>(k)];
    r.signs[static_cast<size_t>(i)] = a.signs[static_cast<size_t>(i)] * b.signs[static_cast<size_t>(k)];
  }
  return r;
}

IntMatrix act(const SignedPerm& p, const IntMatrix& m, const SignedPerm& q) {
  int n = m.dim();
  if (p.dim() != n || q.dim() != n) fail(ErrorCode::DimensionMismatch, "action dimensions differ");
  SignedPerm qi = q.inverse();
  IntMatrix r(n);
  for (int i = 0; i < n; i++) {
    int si = p.perm[static_cast<size_t>(i)];
    for (int j = 0; j < n; j++) {
      int sj = qi.perm[static_cast<size_t>(j)];
      Int v = m.at(si, sj) * (p.signs[static_cast<size_t>(i)] * qi.signs[static_cast<size_t>(j)]);
      r.at(i, j) = std::move(v);
    }
  }
  return r;
}

long signed_perm_group_order(int n) {
  long o = 1;
  for (int i = 1; i <= n; i++) o *= 2L * i;
  return o;
}

std::vector<SignedPerm> signed_perm_group(int n) {
  if (n < 0 || n > 5) fail(ErrorCode::TooLarge, "group materialization limited to n <= 5");
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPerm> out;
  out.reserve(static_cast<size_t>(signed_perm_group_order(n)));
  do {
    for (int mask = 0; mask < (1 << n); mask++) {
      SignedPerm s;
      s.perm = perm;
      s.signs.resize(static_cast<size_t>(n));
      for (int i = 0; i < n; i++) s.signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace matroots
