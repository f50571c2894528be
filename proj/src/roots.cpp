#include "matroots/roots.hpp"

#include <numeric>

namespace matroots {

namespace {

constexpr long kMaxTuples = 200000;

}  // namespace

RootSet enumerate_roots(const IntegerSpectrum& spec, long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "exponent must be >= 1");
  int m = spec.eigenvectors.dim();
  for (const Int& l : spec.eigenvalues)
    if (l == 0)
      fail(ErrorCode::RepeatedEigenvalue,
           "eigenvalue 0 collapses the twisted diagonals; no discrete root family");

  double total = 1;
  for (int i = 0; i < m; i++) total *= static_cast<double>(n);
  if (total > static_cast<double>(kMaxTuples))
    fail(ErrorCode::TooLarge, "n^dim root candidates exceed supported range");

  FieldPtr f = CycField::get(n);

  // reconstruct A = M diag(lambda) M^-1 (must be integral)
  RatMatrix md(m);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) md.at(i, j) = Rat(spec.eigenvectors.at(i, j) * spec.eigenvalues[static_cast<size_t>(j)]);
  IntMatrix base = (md * spec.inverse).to_int();

  // X(j) = sum_i K_i * zeta^{j_i} with rank-one rational K_i = lambda_i * col_i(M) row_i(M^-1)
  std::vector<RatMatrix> k(static_cast<size_t>(m), RatMatrix(m));
  for (int i = 0; i < m; i++)
    for (int r = 0; r < m; r++)
      for (int c = 0; c < m; c++)
        k[static_cast<size_t>(i)].at(r, c) =
            Rat(spec.eigenvalues[static_cast<size_t>(i)] * spec.eigenvectors.at(r, i)) * spec.inverse.at(i, c);

  RootSet out;
  out.base = base;
  out.exponent = n;
  out.field = f;

  std::vector<long> idx(static_cast<size_t>(m), 0);
  std::vector<CycNumber> zpow(static_cast<size_t>(n), CycNumber(f, Rat(0)));
  for (long j = 0; j < n; j++) zpow[static_cast<size_t>(j)] = CycNumber::zeta(f, j);
  while (true) {
    CycMatrix x(f, m);
    for (int i = 0; i < m; i++) {
      const CycNumber& w = zpow[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      for (int r = 0; r < m; r++)
        for (int c = 0; c < m; c++) {
          const Rat& q = k[static_cast<size_t>(i)].at(r, c);
          if (q != 0) x.at(r, c) = x.at(r, c) + q * w;
        }
    }
    Root root;
    root.indices = idx;
    root.is_real = x.is_real();
    if (x.is_rational()) {
      RatMatrix rm = x.to_rat();
      if (rm.is_integral()) root.integral = rm.to_int();
      root.rational = std::move(rm);
    }
    root.matrix = std::move(x);
    out.roots.push_back(std::move(root));

    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) idx[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    idx[static_cast<size_t>(pos)]++;
  }
  return out;
}

std::vector<Root> real_roots(const RootSet& rs) {
  std::vector<Root> out;
  for (const Root& r : rs.roots)
    if (r.is_real) out.push_back(r);
  return out;
}

bool verify_power(const CycMatrix& x, const IntMatrix& a, unsigned long n) {
  if (x.dim() != a.dim()) fail(ErrorCode::DimensionMismatch, "dimension mismatch");
  IntMatrix an = pow(a, n);
  CycMatrix xn = x.pow(n);
  return xn == CycMatrix::from_int(x.field(), an);
}

IntMatrix c_matrix() { return IntMatrix::rows({{1, -2}, {2, -1}}); }

RootSet odd_c_roots(long n) {
  if (n < 1 || n % 2 == 0) fail(ErrorCode::BadParity, "odd exponent required");
  long conductor = std::lcm(4 * n, 12L);
  FieldPtr f = CycField::get(conductor);

  auto zeta_frac = [&](long num, long den) {
    // exp(2 pi i * num / den) embedded in the working field
    return CycNumber::zeta(f, num * (conductor / den));
  };
  CycNumber omega = zeta_frac(1, n);
  CycNumber xi = zeta_frac(1, 6);      // exp(pi i/3)
  CycNumber eta = zeta_frac(1, 4 * n); // exp(pi i/(2n))
  CycNumber xi_inv = xi.pow(-1), eta_inv = eta.pow(-1);
  // (-1)^((n+1)/2) / i
  CycNumber pref = zeta_frac(3, 4);    // 1/i = -i
  if (((n + 1) / 2) % 2 == 1) pref = -pref;

  RootSet out;
  out.base = c_matrix();
  out.exponent = n;
  out.field = f;
  std::vector<CycNumber> wp(static_cast<size_t>(n), CycNumber(f, Rat(0)));
  for (long j = 0; j < n; j++) wp[static_cast<size_t>(j)] = omega.pow(j);

  for (long j = 0; j < n; j++)
    for (long k = 0; k < n; k++) {
      const CycNumber& wj = wp[static_cast<size_t>(j)];
      const CycNumber& wk = wp[static_cast<size_t>(k)];
      CycMatrix x(f, 2);
      x.at(0, 0) = pref * (-(xi_inv * eta * wj) + xi * eta_inv * wk);
      x.at(0, 1) = pref * (eta * wj - eta_inv * wk);
      x.at(1, 0) = pref * (-(eta * wj) + eta_inv * wk);
      x.at(1, 1) = pref * (xi * eta * wj - xi_inv * eta_inv * wk);
      Root root;
      root.indices = {j, k};
      root.is_real = x.is_real();
      if (x.is_rational()) {
        RatMatrix rm = x.to_rat();
        if (rm.is_integral()) root.integral = rm.to_int();
        root.rational = std::move(rm);
      }
      root.matrix = std::move(x);
      out.roots.push_back(std::move(root));
    }
  return out;
}

CycNumber even_kappa(long n, const FieldPtr& f) {
  long conductor = f->conductor();
  if (conductor % 12 != 0 || conductor % (2 * n) != 0)
    fail(ErrorCode::FieldMismatch, "field cannot host kappa");
  // sqrt(3) = zeta_12 + zeta_12^-1
  CycNumber sqrt3 = CycNumber::zeta(f, conductor / 12) + CycNumber::zeta(f, -(conductor / 12));
  if ((n / 2) % 2 == 0) return sqrt3;
  return sqrt3 * CycNumber::zeta(f, conductor / (2 * n));  // * exp(pi i / n)
}

CycMatrix even_family(long n, const CycNumber& u, const CycNumber& v) {
  if (n < 2 || n % 2 != 0) fail(ErrorCode::BadParity, "even exponent >= 2 required");
  if (v.is_zero()) fail(ErrorCode::ZeroV, "v must be nonzero");
  long conductor = std::lcm(std::lcm(12L, 2 * n), std::lcm(u.conductor(), v.conductor()));
  FieldPtr f = CycField::get(conductor);
  CycNumber uu = u.embed(f), vv = v.embed(f);
  CycNumber kappa = even_kappa(n, f);
  CycNumber omega = CycNumber::zeta(f, conductor / n);
  CycNumber one(f, Rat(1));
  CycNumber half(f, make_rat(1, 2));
  CycNumber p = kappa * (one + omega);
  CycNumber q = kappa * (one - omega);
  CycNumber two_u = Rat(2) * uu;
  CycMatrix y(f, 2);
  y.at(0, 0) = half * (p + two_u);
  y.at(0, 1) = half * (vv * (q + two_u));
  y.at(1, 0) = half * (vv.inv() * (q - two_u));
  y.at(1, 1) = half * (p - two_u);
  return y;
}

}  // namespace matroots
