#include "matroots/spectrum.hpp"

#include <algorithm>

namespace matroots {

std::vector<Int> char_poly(const IntMatrix& a) {
  int n = a.dim();
  if (n < 1) fail(ErrorCode::InvalidArgument, "need dimension >= 1");
  std::vector<Int> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = 1;
  IntMatrix m(n);  // M_0 = 0
  for (int k = 1; k <= n; k++) {
    // M_k = A*M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A*M_k)/k
    IntMatrix am = a * m;
    for (int i = 0; i < n; i++) am.at(i, i) += c[static_cast<size_t>(n - k + 1)];
    m = std::move(am);
    IntMatrix prod = a * m;
    Int tr = 0;
    for (int i = 0; i < n; i++) tr += prod.at(i, i);
    c[static_cast<size_t>(n - k)] = divexact(-tr, k);
  }
  return c;
}

namespace {

Int eval_poly(const std::vector<Int>& p, const Int& x) {
  Int v = 0;
  for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

// exact synthetic division by (x - r); quotient returned, remainder must vanish
std::vector<Int> deflate(const std::vector<Int>& p, const Int& r) {
  std::vector<Int> q(p.size() - 1);
  Int carry = 0;
  for (size_t k = p.size(); k-- > 1;) {
    carry = carry * r + p[k];
    q[k - 1] = carry;
  }
  if (carry * r + p[0] != 0) fail(ErrorCode::InvalidArgument, "deflation not exact");
  return q;
}

std::vector<Int> positive_divisors(const Int& n) {
  Int a = abs_int(n);
  std::vector<Int> out;
  for (Int i = 1; i * i <= a; i++)
    if (a % i == 0) {
      out.push_back(i);
      if (i * i != a) out.push_back(a / i);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IntegerSpectrum integer_spectrum(const IntMatrix& a) {
  int n = a.dim();
  std::vector<Int> p = char_poly(a);
  // peel off integer roots; rational root theorem restricts candidates to
  // divisors of the constant term (monic polynomial)
  std::vector<Int> roots;
  std::vector<Int> q = p;
  while (q.size() > 1) {
    if (q[0] == 0) {
      roots.push_back(0);
      q.erase(q.begin());
      continue;
    }
    bool found = false;
    for (const Int& d : positive_divisors(q[0])) {
      for (int s : {1, -1}) {
        Int cand = s > 0 ? d : Int(-d);
        if (eval_poly(q, cand) == 0) {
          roots.push_back(cand);
          q = deflate(q, cand);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found)
      fail(ErrorCode::NonIntegerSpectrum, "characteristic polynomial has a non-integer root");
  }
  std::sort(roots.begin(), roots.end());
  for (size_t k = 1; k < roots.size(); k++)
    if (roots[k] == roots[k - 1])
      fail(ErrorCode::RepeatedEigenvalue, "eigenvalue " + roots[k].get_str() + " has multiplicity > 1");

  IntegerSpectrum out;
  out.eigenvalues = roots;
  out.eigenvectors = IntMatrix(n);
  for (int c = 0; c < n; c++) {
    std::vector<Int> v = eigenvector(a, roots[static_cast<size_t>(c)]);
    for (int i = 0; i < n; i++) out.eigenvectors.at(i, c) = v[static_cast<size_t>(i)];
  }
  ExactInverse inv = inverse_exact(out.eigenvectors);
  out.inverse = std::move(inv.inverse);
  out.inverse_integral = std::move(inv.integral);
  return out;
}

std::vector<Int> eigenvector(const IntMatrix& a, const Int& lambda) {
  int n = a.dim();
  // RREF of (a - lambda I) over Q
  RatMatrix m(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) m.at(i, j) = Rat(a.at(i, j)) - (i == j ? Rat(lambda) : Rat(0));
  std::vector<int> pivot_col(static_cast<size_t>(n), -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; col++) {
    int piv = -1;
    for (int i = rank; i < n; i++)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; j++) std::swap(m.at(piv, j), m.at(rank, j));
    Rat p = m.at(rank, col);
    for (int j = 0; j < n; j++) m.at(rank, j) /= p;
    for (int i = 0; i < n; i++) {
      if (i == rank || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < n; j++) m.at(i, j) -= f * m.at(rank, j);
    }
    pivot_col[static_cast<size_t>(rank)] = col;
    rank++;
  }
  if (rank != n - 1)
    fail(ErrorCode::NonSimpleKernel, "eigenspace of " + lambda.get_str() + " has dimension " +
                                         std::to_string(n - rank));
  // single free column: the one that is not a pivot
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int r = 0; r < rank; r++) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
  int free_col = 0;
  while (is_pivot[static_cast<size_t>(free_col)]) free_col++;
  std::vector<Rat> x(static_cast<size_t>(n));
  x[static_cast<size_t>(free_col)] = 1;
  for (int r = 0; r < rank; r++)
    x[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = -m.at(r, free_col);
  // clear denominators, divide by gcd, normalize leading sign
  Int l = 1;
  for (const Rat& v : x) l = lcm_int(l, rat_den(v));
  std::vector<Int> vi(static_cast<size_t>(n));
  Int g = 0;
  for (int i = 0; i < n; i++) {
    vi[static_cast<size_t>(i)] = rat_num(x[static_cast<size_t>(i)]) * divexact(l, rat_den(x[static_cast<size_t>(i)]));
    g = gcd_int(g, vi[static_cast<size_t>(i)]);
  }
  for (int i = 0; i < n; i++) vi[static_cast<size_t>(i)] = divexact(vi[static_cast<size_t>(i)], g);
  for (int i = 0; i < n; i++) {
    if (vi[static_cast<size_t>(i)] == 0) continue;
    if (vi[static_cast<size_t>(i)] < 0)
      for (int j = 0; j < n; j++) vi[static_cast<size_t>(j)] = -vi[static_cast<size_t>(j)];
    break;
  }
  return vi;
}

}  // namespace matroots
