#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "matroots/numeric.hpp"

namespace matroots {

// Square integer matrix, row-major, dimension fixed at construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(check_dim(n)), e_(static_cast<size_t>(n) * n) {}
  IntMatrix(int n, std::vector<Int> entries);
  static IntMatrix identity(int n);
  static IntMatrix rows(std::initializer_list<std::initializer_list<long>> r);

  int dim() const { return n_; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<Int>& entries() const { return e_; }

  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  // row-major lexicographic on integer values; container ordering
  bool operator<(const IntMatrix& o) const;

  IntMatrix operator-() const;
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

  Int max_abs() const;  // 0 for the 0x0 matrix
  bool has_zero_entry() const;
  bool fits_int64() const;

 private:
  static int check_dim(int n);
  int n_ = 0;
  std::vector<Int> e_;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  explicit RatMatrix(const IntMatrix& m);

  int dim() const { return n_; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<Rat>& entries() const { return e_; }

  bool operator==(const RatMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix operator-() const;

  bool is_integral() const;
  IntMatrix to_int() const;  // NotDivisible if any entry non-integral
  Rat max_abs() const;
  bool has_zero_entry() const;

 private:
  int n_ = 0;
  std::vector<Rat> e_;
};

// Bareiss fraction-free elimination; exact.
Int det(const IntMatrix& m);

// adjugate via cofactors (exact)
IntMatrix adjugate(const IntMatrix& m);

struct ExactInverse {
  Int determinant;                      // nonzero
  RatMatrix inverse;                    // adj/det
  std::optional<IntMatrix> integral;    // present iff det = ±1
};

// Singular if det = 0.
ExactInverse inverse_exact(const IntMatrix& m);

struct MatrixProfile {
  Int determinant;
  bool invertible = false;
  bool unimodular = false;              // |det| = 1
  bool zerofree = false;                // invertible, no zero in M or M^-1
  Int norm;                             // max |entry| of M
  std::optional<Rat> inverse_norm;      // max |entry| of M^-1 (when invertible)
  std::optional<Rat> concat_norm;       // max of the two (when invertible)
  std::optional<Int> concat_norm_int;   // same, when unimodular (integer inverse)
};

MatrixProfile profile(const IntMatrix& m);

IntMatrix pow(const IntMatrix& m, unsigned long k);  // k >= 0; k=0 gives identity

// text format: rows split by ';' or newline, entries by whitespace.
// Rejects ragged rows and non-square shapes.
IntMatrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const IntMatrix& m, const std::string& row_sep = "; ");
std::string format_matrix_text(const RatMatrix& m, const std::string& row_sep = "; ");
// aligned multi-line block for human-facing output
std::string format_matrix_block(const IntMatrix& m);
std::string format_matrix_block(const RatMatrix& m);

}  // namespace matroots
