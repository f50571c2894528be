#include "matroots/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace matroots {

int IntMatrix::check_dim(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative dimension");
  return n;
}

IntMatrix::IntMatrix(int n, std::vector<Int> entries) : n_(check_dim(n)), e_(std::move(entries)) {
  if (e_.size() != static_cast<size_t>(n_) * n_)
    fail(ErrorCode::DimensionMismatch, "entry count does not match dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::rows(std::initializer_list<std::initializer_list<long>> r) {
  int n = static_cast<int>(r.size());
  IntMatrix m(n);
  int i = 0;
  for (const auto& row : r) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::DimensionMismatch, "ragged initializer");
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    i++;
  }
  return m;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (size_t k = 0; k < e_.size(); k++) {
    int c = cmp(e_[k], o.e_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(n_);
  for (size_t k = 0; k < e_.size(); k++) r.e_[k] = -e_[k];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; i++)
    for (int j = 0; j < n_; j++) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix product dimensions differ");
  IntMatrix r(a.n_);
  Int t;
  for (int i = 0; i < a.n_; i++)
    for (int j = 0; j < a.n_; j++) {
      Int& s = r.at(i, j);
      for (int k = 0; k < a.n_; k++) {
        t = a.at(i, k) * b.at(k, j);
        s += t;
      }
    }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix sum dimensions differ");
  IntMatrix r(a.n_);
  for (size_t k = 0; k < a.e_.size(); k++) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix difference dimensions differ");
  IntMatrix r(a.n_);
  for (size_t k = 0; k < a.e_.size(); k++) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

Int IntMatrix::max_abs() const {
  Int m = 0;
  for (const Int& x : e_)
    if (cmp_abs(x, m) > 0) m = abs_int(x);
  return m;
}

bool IntMatrix::has_zero_entry() const {
  return std::any_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::fits_int64() const {
  return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x.fits_slong_p(); });
}

RatMatrix::RatMatrix(const IntMatrix& m) : n_(m.dim()), e_(m.entries().size()) {
  for (size_t k = 0; k < e_.size(); k++) e_[k] = Rat(m.entries()[k]);
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "matrix product dimensions differ");
  RatMatrix r(a.n_);
  Rat t;
  for (int i = 0; i < a.n_; i++)
    for (int j = 0; j < a.n_; j++) {
      Rat& s = r.at(i, j);
      for (int k = 0; k < a.n_; k++) {
        t = a.at(i, k) * b.at(k, j);
        s += t;
      }
    }
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r(n_);
  for (size_t k = 0; k < e_.size(); k++) r.e_[k] = -e_[k];
  return r;
}

bool RatMatrix::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), rat_is_integer);
}

IntMatrix RatMatrix::to_int() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; i++)
    for (int j = 0; j < n_; j++) {
      const Rat& x = at(i, j);
      if (!rat_is_integer(x)) fail(ErrorCode::NotDivisible, "entry " + x.get_str() + " not an integer");
      r.at(i, j) = x.get_num();
    }
  return r;
}

Rat RatMatrix::max_abs() const {
  Rat m = 0;
  for (const Rat& x : e_) {
    Rat a = abs_rat(x);
    if (a > m) m = a;
  }
  return m;
}

bool RatMatrix::has_zero_entry() const {
  return std::any_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

// Bareiss: division-free pivoting with exact integer divisions by the previous pivot.
Int det(const IntMatrix& m) {
  int n = m.dim();
  if (n == 0) return 1;
  std::vector<Int> a = m.entries();
  auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; k++) {
    if (at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = k; j < n; j++) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++) {
        Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(t);
      }
    prev = at(k, k);
  }
  Int d = at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

namespace {

// determinant of m with row i and column j removed
Int minor_det(const IntMatrix& m, int ri, int rj) {
  int n = m.dim();
  IntMatrix s(n - 1);
  for (int i = 0, si = 0; i < n; i++) {
    if (i == ri) continue;
    for (int j = 0, sj = 0; j < n; j++) {
      if (j == rj) continue;
      s.at(si, sj++) = m.at(i, j);
    }
    si++;
  }
  return det(s);
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
  int n = m.dim();
  if (n == 0) return m;
  if (n == 1) return IntMatrix::identity(1);
  IntMatrix adj(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      Int c = minor_det(m, i, j);
      if ((i + j) % 2) c = -c;
      adj.at(j, i) = std::move(c);  // transpose of cofactor matrix
    }
  return adj;
}

ExactInverse inverse_exact(const IntMatrix& m) {
  Int d = det(m);
  if (d == 0) fail(ErrorCode::Singular, "matrix is singular");
  IntMatrix adj = adjugate(m);
  ExactInverse out;
  out.determinant = d;
  RatMatrix inv(m.dim());
  for (int i = 0; i < m.dim(); i++)
    for (int j = 0; j < m.dim(); j++) inv.at(i, j) = make_rat(adj.at(i, j), d);
  out.inverse = std::move(inv);
  if (d == 1) {
    out.integral = adj;
  } else if (d == -1) {
    out.integral = -adj;
  }
  return out;
}

MatrixProfile profile(const IntMatrix& m) {
  MatrixProfile p;
  p.determinant = det(m);
  p.invertible = p.determinant != 0;
  p.unimodular = p.determinant == 1 || p.determinant == -1;
  p.norm = m.max_abs();
  if (p.invertible) {
    ExactInverse inv = inverse_exact(m);
    Rat inorm = inv.inverse.max_abs();
    p.inverse_norm = inorm;
    Rat cn = Rat(p.norm) > inorm ? Rat(p.norm) : inorm;
    p.concat_norm = cn;
    if (p.unimodular) p.concat_norm_int = cn.get_num();
    p.zerofree = m.dim() > 0 && !m.has_zero_entry() && !inv.inverse.has_zero_entry();
  }
  return p;
}

IntMatrix pow(const IntMatrix& m, unsigned long k) {
  IntMatrix r = IntMatrix::identity(m.dim());
  IntMatrix base = m;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

IntMatrix parse_matrix_text(const std::string& text) {
  // rows separated by ';' or newline
  std::vector<std::vector<Int>> rows;
  std::string row;
  auto flush_row = [&]() {
    std::istringstream is(row);
    std::vector<Int> vals;
    std::string tok;
    while (is >> tok) vals.push_back(parse_int(tok));
    if (!vals.empty()) rows.push_back(std::move(vals));
    row.clear();
  };
  for (char c : text) {
    if (c == ';' || c == '\n') flush_row();
    else row += c;
  }
  flush_row();
  if (rows.empty()) fail(ErrorCode::ParseError, "empty matrix");
  size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) fail(ErrorCode::ParseError, "ragged rows in matrix");
  if (rows[0].size() != n) fail(ErrorCode::ParseError, "matrix is not square");
  std::vector<Int> flat;
  flat.reserve(n * n);
  for (auto& r : rows)
    for (auto& v : r) flat.push_back(std::move(v));
  return IntMatrix(static_cast<int>(n), std::move(flat));
}

namespace {

template <class M, class Str>
std::string format_rows(const M& m, const std::string& row_sep, Str&& str) {
  std::string out;
  for (int i = 0; i < m.dim(); i++) {
    if (i) out += row_sep;
    for (int j = 0; j < m.dim(); j++) {
      if (j) out += ' ';
      out += str(m.at(i, j));
    }
  }
  return out;
}

template <class M, class Str>
std::string format_block(const M& m, Str&& str) {
  int n = m.dim();
  std::vector<std::string> cells(static_cast<size_t>(n) * n);
  std::vector<size_t> width(n, 0);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      std::string s = str(m.at(i, j));
      width[j] = std::max(width[j], s.size());
      cells[static_cast<size_t>(i) * n + j] = std::move(s);
    }
  std::string out;
  for (int i = 0; i < n; i++) {
    out += "[ ";
    for (int j = 0; j < n; j++) {
      const std::string& s = cells[static_cast<size_t>(i) * n + j];
      out.append(width[j] - s.size(), ' ');
      out += s;
      out += j + 1 < n ? "  " : " ]\n";
    }
  }
  return out;
}

std::string int_str(const Int& v) { return v.get_str(); }
std::string rat_str_local(const Rat& v) { return v.get_str(); }

}  // namespace

std::string format_matrix_text(const IntMatrix& m, const std::string& row_sep) {
  return format_rows(m, row_sep, int_str);
}
std::string format_matrix_text(const RatMatrix& m, const std::string& row_sep) {
  return format_rows(m, row_sep, rat_str_local);
}
std::string format_matrix_block(const IntMatrix& m) { return format_block(m, int_str); }
std::string format_matrix_block(const RatMatrix& m) { return format_block(m, rat_str_local); }

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NonIntegerSpectrum: return "NonIntegerSpectrum";
    case ErrorCode::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorCode::NonSimpleKernel: return "NonSimpleKernel";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::ZeroV: return "ZeroV";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::FixtureCorrupt: return "FixtureCorrupt";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace matroots
