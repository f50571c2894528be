#include "matroots/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace matroots {

namespace {

// ----- dense polynomial helpers, ascending coefficients -----

void trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact quotient by a monic divisor; remainder must vanish
std::vector<Int> divexact_monic(std::vector<Int> num, const std::vector<Int>& den) {
  trim(num);
  size_t dd = den.size() - 1;
  if (den.empty() || den.back() != 1) fail(ErrorCode::InvalidArgument, "divisor not monic");
  if (num.size() < den.size()) {
    if (!num.empty()) fail(ErrorCode::NotDivisible, "polynomial division not exact");
    return {};
  }
  std::vector<Int> q(num.size() - dd);
  for (size_t k = q.size(); k-- > 0;) {
    Int c = num[k + dd];
    q[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; j++) num[k + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) fail(ErrorCode::NotDivisible, "polynomial division not exact");
  return q;
}

// rational polynomial division: returns (quotient, remainder)
std::pair<std::vector<Rat>, std::vector<Rat>> divmod_rat(std::vector<Rat> num,
                                                         const std::vector<Rat>& den) {
  auto rtrim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  std::vector<Rat> d = den;
  rtrim(d);
  if (d.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  rtrim(num);
  size_t dd = d.size() - 1;
  if (num.size() < d.size()) return {{}, std::move(num)};
  std::vector<Rat> q(num.size() - dd);
  for (size_t k = q.size(); k-- > 0;) {
    Rat c = num[k + dd] / d.back();
    q[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; j++) num[k + j] -= c * d[j];
  }
  rtrim(num);
  return {std::move(q), std::move(num)};
}

std::vector<long> divisors_of(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; i++)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

std::map<long, std::vector<Int>>& phi_cache() {
  static std::map<long, std::vector<Int>> cache;
  return cache;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

// Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, computed bottom-up over the divisors
std::vector<Int> cyclotomic_poly(long n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "conductor must be >= 1");
  std::lock_guard<std::mutex> lock(phi_mutex());
  auto& cache = phi_cache();
  for (long d : divisors_of(n)) {
    if (cache.count(d)) continue;
    std::vector<Int> num(static_cast<size_t>(d) + 1);
    num[0] = -1;
    num.back() = 1;
    std::vector<Int> q = std::move(num);
    for (long e : divisors_of(d))
      if (e != d) q = divexact_monic(std::move(q), cache.at(e));
    cache[d] = std::move(q);
  }
  return cache.at(n);
}

CycField::CycField(long n, std::vector<Int> phi) : n_(n), phi_(std::move(phi)) {
  deg_ = static_cast<int>(phi_.size()) - 1;
  long table = std::max(n_, 2L * deg_ - 1);
  pow_.reserve(static_cast<size_t>(table));
  std::vector<Int> cur(static_cast<size_t>(deg_));  // x^0
  if (deg_ > 0) cur[0] = 1;
  for (long m = 0; m < table; m++) {
    pow_.push_back(cur);
    // multiply by x, reduce by the monic modulus
    Int top = cur.empty() ? Int(0) : cur.back();
    for (int k = deg_ - 1; k > 0; k--) cur[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)];
    if (deg_ > 0) cur[0] = 0;
    if (top != 0)
      for (int k = 0; k < deg_; k++) cur[static_cast<size_t>(k)] -= top * phi_[static_cast<size_t>(k)];
  }
}

const std::vector<Int>& CycField::power_basis(long m) const {
  if (m < 0 || m >= table_size()) fail(ErrorCode::InvalidArgument, "power basis index out of range");
  return pow_[static_cast<size_t>(m)];
}

FieldPtr CycField::get(long conductor) {
  if (conductor < 1) fail(ErrorCode::InvalidArgument, "conductor must be >= 1");
  if (conductor > kMaxConductor) fail(ErrorCode::TooLarge, "conductor beyond supported range");
  static std::map<long, FieldPtr> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(conductor);
  if (it != registry.end()) return it->second;
  FieldPtr f(new CycField(conductor, cyclotomic_poly(conductor)));
  registry[conductor] = f;
  return f;
}

CycNumber::CycNumber(FieldPtr f, const Rat& constant) : f_(std::move(f)) {
  c_.assign(static_cast<size_t>(f_->degree()), Rat(0));
  c_[0] = constant;
}

CycNumber::CycNumber(FieldPtr f, std::vector<Rat> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<size_t>(f_->degree()))
    fail(ErrorCode::DimensionMismatch, "coefficient count != field degree");
}

CycNumber CycNumber::zeta(const FieldPtr& f, long power) {
  long n = f->conductor();
  long m = ((power % n) + n) % n;
  std::vector<Rat> c(static_cast<size_t>(f->degree()));
  const std::vector<Int>& p = f->power_basis(m);
  for (size_t k = 0; k < c.size(); k++) c[k] = Rat(p[k]);
  return CycNumber(f, std::move(c));
}

void CycNumber::require_same_field(const CycNumber& o) const {
  if (f_->conductor() != o.f_->conductor())
    fail(ErrorCode::FieldMismatch, "operands live in different cyclotomic fields");
}

bool CycNumber::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t k = 1; k < c_.size(); k++)
    if (c_[k] != 0) return false;
  return true;
}

std::optional<Rat> CycNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

CycNumber CycNumber::conj() const {
  long n = f_->conductor();
  std::vector<Rat> out(c_.size());
  for (size_t k = 0; k < c_.size(); k++) {
    if (c_[k] == 0) continue;
    const std::vector<Int>& p = f_->power_basis((static_cast<long>(k) * (n - 1)) % n);
    for (size_t t = 0; t < out.size(); t++)
      if (p[t] != 0) out[t] += c_[k] * Rat(p[t]);
  }
  return CycNumber(f_, std::move(out));
}

bool CycNumber::is_real() const { return conj() == *this; }

CycNumber CycNumber::embed(const FieldPtr& target) const {
  long n = f_->conductor(), m = target->conductor();
  if (m == n) return *this;
  if (m % n != 0) fail(ErrorCode::FieldMismatch, "conductor does not divide target conductor");
  long r = m / n;
  std::vector<Rat> out(static_cast<size_t>(target->degree()));
  for (size_t k = 0; k < c_.size(); k++) {
    if (c_[k] == 0) continue;
    const std::vector<Int>& p = target->power_basis((static_cast<long>(k) * r) % m);
    for (size_t t = 0; t < out.size(); t++)
      if (p[t] != 0) out[t] += c_[k] * Rat(p[t]);
  }
  return CycNumber(target, std::move(out));
}

std::complex<double> CycNumber::approx() const {
  long n = f_->conductor();
  std::complex<double> z = 0;
  for (size_t k = 0; k < c_.size(); k++) {
    if (c_[k] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    z += c_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

CycNumber CycNumber::operator-() const {
  std::vector<Rat> out(c_.size());
  for (size_t k = 0; k < c_.size(); k++) out[k] = -c_[k];
  return CycNumber(f_, std::move(out));
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  a.require_same_field(b);
  std::vector<Rat> out(a.c_.size());
  for (size_t k = 0; k < out.size(); k++) out[k] = a.c_[k] + b.c_[k];
  return CycNumber(a.f_, std::move(out));
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
  a.require_same_field(b);
  std::vector<Rat> out(a.c_.size());
  for (size_t k = 0; k < out.size(); k++) out[k] = a.c_[k] - b.c_[k];
  return CycNumber(a.f_, std::move(out));
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.require_same_field(b);
  size_t d = a.c_.size();
  std::vector<Rat> raw(2 * d - 1);
  for (size_t i = 0; i < d; i++) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < d; j++) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rat> out(d);
  for (size_t t = 0; t < raw.size(); t++) {
    if (raw[t] == 0) continue;
    if (t < d) {
      out[t] += raw[t];
    } else {
      const std::vector<Int>& p = a.f_->power_basis(static_cast<long>(t));
      for (size_t k = 0; k < d; k++)
        if (p[k] != 0) out[k] += raw[t] * Rat(p[k]);
    }
  }
  return CycNumber(a.f_, std::move(out));
}

CycNumber operator*(const Rat& a, const CycNumber& b) {
  std::vector<Rat> out(b.c_.size());
  for (size_t k = 0; k < out.size(); k++) out[k] = a * b.c_[k];
  return CycNumber(b.f_, std::move(out));
}

// extended Euclid against the modulus; Phi_N is irreducible over Q, so any
// nonzero element is a unit
CycNumber CycNumber::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  size_t d = c_.size();
  std::vector<Rat> r0(f_->modulus().size());
  for (size_t k = 0; k < r0.size(); k++) r0[k] = Rat(f_->modulus()[k]);
  std::vector<Rat> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> t0, t1{Rat(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod_rat(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    // t0, t1 = t1, t0 - q*t1
    std::vector<Rat> qt(q.empty() || t1.empty() ? 0 : q.size() + t1.size() - 1);
    for (size_t i = 0; i < q.size(); i++) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < t1.size(); j++) qt[i + j] += q[i] * t1[j];
    }
    std::vector<Rat> nt(std::max(t0.size(), qt.size()));
    for (size_t k = 0; k < nt.size(); k++) {
      if (k < t0.size()) nt[k] += t0[k];
      if (k < qt.size()) nt[k] -= qt[k];
    }
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  // r0 = gcd = nonzero constant; t0 * this == r0 (mod Phi)
  if (r0.size() != 1 || r0[0] == 0)
    fail(ErrorCode::InvalidArgument, "modulus not coprime to element");
  std::vector<Rat> out(d);
  for (size_t k = 0; k < t0.size() && k < d; k++) out[k] = t0[k] / r0[0];
  if (t0.size() > d) {
    // reduce any overflow coefficients (deg t0 < deg Phi always holds, but be safe)
    for (size_t t = d; t < t0.size(); t++) {
      if (t0[t] == 0) continue;
      const std::vector<Int>& p = f_->power_basis(static_cast<long>(t));
      for (size_t k = 0; k < d; k++)
        if (p[k] != 0) out[k] += (t0[t] / r0[0]) * Rat(p[k]);
    }
  }
  return CycNumber(f_, std::move(out));
}

CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inv(); }

CycNumber CycNumber::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  CycNumber r(f_, Rat(1));
  CycNumber base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool CycNumber::operator==(const CycNumber& o) const {
  return f_->conductor() == o.f_->conductor() && c_ == o.c_;
}

std::string CycNumber::str() const {
  std::string out;
  for (size_t k = 0; k < c_.size(); k++) {
    if (c_[k] == 0) continue;
    Rat v = c_[k];
    if (out.empty()) {
      if (v < 0) { out += "-"; v = -v; }
    } else {
      out += v < 0 ? " - " : " + ";
      if (v < 0) v = -v;
    }
    bool unit = v == 1;
    if (k == 0) {
      out += v.get_str();
    } else {
      if (!unit) { out += v.get_str(); out += "*"; }
      out += "z";
      if (k > 1) { out += "^"; out += std::to_string(k); }
    }
  }
  return out.empty() ? "0" : out;
}

std::pair<CycNumber, CycNumber> to_common_field(const CycNumber& a, const CycNumber& b) {
  long n = a.conductor(), m = b.conductor();
  long l = static_cast<long>(std::lcm(n, m));
  FieldPtr f = CycField::get(l);
  return {a.embed(f), b.embed(f)};
}

Reality reality(const CycNumber& a) {
  Reality r;
  r.is_real = a.is_real();
  r.as_rational = a.as_rational();
  return r;
}

// ----- matrices over a cyclotomic field -----

CycMatrix::CycMatrix(FieldPtr f, int n) : f_(std::move(f)), n_(n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  e_.assign(static_cast<size_t>(n) * n, CycNumber(f_, Rat(0)));
}

CycMatrix CycMatrix::identity(const FieldPtr& f, int n) {
  CycMatrix m(f, n);
  for (int i = 0; i < n; i++) m.at(i, i) = CycNumber(f, Rat(1));
  return m;
}

CycMatrix CycMatrix::from_int(const FieldPtr& f, const IntMatrix& m) {
  CycMatrix r(f, m.dim());
  for (int i = 0; i < m.dim(); i++)
    for (int j = 0; j < m.dim(); j++) r.at(i, j) = CycNumber(f, Rat(m.at(i, j)));
  return r;
}

CycMatrix CycMatrix::from_rat(const FieldPtr& f, const RatMatrix& m) {
  CycMatrix r(f, m.dim());
  for (int i = 0; i < m.dim(); i++)
    for (int j = 0; j < m.dim(); j++) r.at(i, j) = CycNumber(f, m.at(i, j));
  return r;
}

void CycMatrix::require_same_field(const CycMatrix& o) const {
  if (f_->conductor() != o.f_->conductor())
    fail(ErrorCode::FieldMismatch, "matrices live in different cyclotomic fields");
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  a.require_same_field(b);
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix product dimensions differ");
  CycMatrix r(a.f_, a.n_);
  for (int i = 0; i < a.n_; i++)
    for (int j = 0; j < a.n_; j++) {
      CycNumber s(a.f_, Rat(0));
      for (int k = 0; k < a.n_; k++) s = s + a.at(i, k) * b.at(k, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

CycMatrix operator*(const CycNumber& s, const CycMatrix& m) {
  CycMatrix r(m.f_, m.n_);
  CycNumber se = s.conductor() == m.f_->conductor() ? s : s.embed(m.f_);
  for (int i = 0; i < m.n_; i++)
    for (int j = 0; j < m.n_; j++) r.at(i, j) = se * m.at(i, j);
  return r;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  a.require_same_field(b);
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix sum dimensions differ");
  CycMatrix r(a.f_, a.n_);
  for (size_t k = 0; k < a.e_.size(); k++) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix r(f_, n_);
  for (size_t k = 0; k < e_.size(); k++) r.e_[k] = -e_[k];
  return r;
}

CycMatrix CycMatrix::pow(unsigned long k) const {
  CycMatrix r = identity(f_, n_);
  CycMatrix base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  return n_ == o.n_ && f_->conductor() == o.f_->conductor() && e_ == o.e_;
}

bool CycMatrix::is_real() const {
  for (const CycNumber& x : e_)
    if (!x.is_real()) return false;
  return true;
}

bool CycMatrix::is_rational() const {
  for (const CycNumber& x : e_)
    if (!x.is_rational()) return false;
  return true;
}

RatMatrix CycMatrix::to_rat() const {
  RatMatrix r(n_);
  for (int i = 0; i < n_; i++)
    for (int j = 0; j < n_; j++) {
      auto q = at(i, j).as_rational();
      if (!q) fail(ErrorCode::InvalidArgument, "matrix entry is irrational");
      r.at(i, j) = *q;
    }
  return r;
}

bool CycMatrix::is_integral() const {
  for (const CycNumber& x : e_) {
    auto q = x.as_rational();
    if (!q || !rat_is_integer(*q)) return false;
  }
  return true;
}

IntMatrix CycMatrix::to_int() const { return to_rat().to_int(); }

CycMatrix CycMatrix::embed(const FieldPtr& target) const {
  CycMatrix r(target, n_);
  for (size_t k = 0; k < e_.size(); k++) r.e_[k] = e_[k].embed(target);
  return r;
}

std::vector<std::vector<std::complex<double>>> CycMatrix::approx() const {
  std::vector<std::vector<std::complex<double>>> out(static_cast<size_t>(n_));
  for (int i = 0; i < n_; i++) {
    out[static_cast<size_t>(i)].resize(static_cast<size_t>(n_));
    for (int j = 0; j < n_; j++) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j).approx();
  }
  return out;
}

std::string CycMatrix::str() const {
  std::string out;
  for (int i = 0; i < n_; i++) {
    out += "[ ";
    for (int j = 0; j < n_; j++) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += " ]\n";
  }
  return out;
}

}  // namespace matroots
