#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroots/matrix.hpp"
#include "matroots/numeric.hpp"

namespace matroots {

class CycField;
using FieldPtr = std::shared_ptr<const CycField>;

// Q(zeta_N) as Q[x]/(Phi_N).  Instances are interned: get(N) returns the shared
// field object for conductor N, with Phi_N and a reduction table for powers of x.
class CycField {
 public:
  static FieldPtr get(long conductor);  // 1 <= conductor <= kMaxConductor

  long conductor() const { return n_; }
  int degree() const { return deg_; }                    // deg Phi_N = phi(N)
  const std::vector<Int>& modulus() const { return phi_; }  // ascending, monic
  // coefficients of x^m mod Phi_N (size degree()); m in [0, table_size())
  const std::vector<Int>& power_basis(long m) const;
  long table_size() const { return static_cast<long>(pow_.size()); }

  static constexpr long kMaxConductor = 1024;

 private:
  CycField(long n, std::vector<Int> phi);
  long n_;
  std::vector<Int> phi_;
  int deg_;
  std::vector<std::vector<Int>> pow_;
};

// coefficients of Phi_N, ascending
std::vector<Int> cyclotomic_poly(long n);

// An element of Q(zeta_N): rational coefficient vector of length degree().
class CycNumber {
 public:
  CycNumber() : CycNumber(CycField::get(1), Rat(0)) {}
  CycNumber(FieldPtr f, const Rat& constant);
  CycNumber(FieldPtr f, std::vector<Rat> coeffs);
  static CycNumber zeta(const FieldPtr& f, long power = 1);  // zeta_N^power, any integer power

  const FieldPtr& field() const { return f_; }
  long conductor() const { return f_->conductor(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rat> as_rational() const;
  bool is_real() const;            // fixed by complex conjugation
  CycNumber conj() const;
  CycNumber embed(const FieldPtr& target) const;  // conductor must divide target's
  std::complex<double> approx() const;

  CycNumber operator-() const;
  friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const Rat& a, const CycNumber& b);
  CycNumber inv() const;  // DivisionByZero on zero
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b);
  CycNumber pow(long k) const;  // any integer exponent

  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  std::string str() const;  // polynomial in z (= primitive root of the field)

 private:
  void require_same_field(const CycNumber& o) const;
  FieldPtr f_;
  std::vector<Rat> c_;
};

// embed both into Q(zeta_lcm)
std::pair<CycNumber, CycNumber> to_common_field(const CycNumber& a, const CycNumber& b);

struct Reality {
  bool is_real = false;
  std::optional<Rat> as_rational;
};
Reality reality(const CycNumber& a);

class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(FieldPtr f, int n);
  static CycMatrix identity(const FieldPtr& f, int n);
  static CycMatrix from_int(const FieldPtr& f, const IntMatrix& m);
  static CycMatrix from_rat(const FieldPtr& f, const RatMatrix& m);

  int dim() const { return n_; }
  const FieldPtr& field() const { return f_; }
  const CycNumber& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  CycNumber& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycNumber& s, const CycMatrix& m);
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  CycMatrix operator-() const;
  CycMatrix pow(unsigned long k) const;

  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  bool is_real() const;
  bool is_rational() const;
  RatMatrix to_rat() const;  // InvalidArgument when not rational
  bool is_integral() const;
  IntMatrix to_int() const;
  CycMatrix embed(const FieldPtr& target) const;
  std::vector<std::vector<std::complex<double>>> approx() const;
  std::string str() const;  // one line per row, entries separated by ", "

 private:
  void require_same_field(const CycMatrix& o) const;
  FieldPtr f_;
  int n_ = 0;
  std::vector<CycNumber> e_;
};

}  // namespace matroots
