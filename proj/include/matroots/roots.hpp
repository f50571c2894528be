#pragma once

#include <optional>
#include <vector>

#include "matroots/cyclotomic.hpp"
#include "matroots/spectrum.hpp"

namespace matroots {

struct Root {
  std::vector<long> indices;           // one exponent per eigenvalue, each in [0, n)
  CycMatrix matrix;
  bool is_real = false;
  std::optional<RatMatrix> rational;   // set when all entries are rational
  std::optional<IntMatrix> integral;   // set when all entries are integers
};

struct RootSet {
  IntMatrix base;                      // the matrix A whose n-th power is matched
  long exponent = 0;                   // n
  FieldPtr field;
  std::vector<Root> roots;             // lexicographic by indices
};

// All n-th roots of A^n sharing A's eigenvectors: X = M diag(lambda_i w^{j_i}) M^-1
// over Q(zeta_n).  RepeatedEigenvalue if some eigenvalue is 0 (the twisted
// diagonals then coincide and the family degenerates).
RootSet enumerate_roots(const IntegerSpectrum& spec, long n);

std::vector<Root> real_roots(const RootSet& rs);

// exact check X^n == A^n
bool verify_power(const CycMatrix& x, const IntMatrix& a, unsigned long n);

// the classical 2x2 fixture with spectrum {i*sqrt(3), -i*sqrt(3)}
IntMatrix c_matrix();

// closed-form n-th roots of C^n for odd n (n^2 of them, exactly n integral)
RootSet odd_c_roots(long n);

// kappa = sqrt(3) * exp((1-(-1)^(n/2)) * pi i / (2n)), the even-family scale
CycNumber even_kappa(long n, const FieldPtr& f);

// two-parameter family of n-th roots of C^n = (-3)^(n/2) I for even n;
// BadParity unless n even >= 2, ZeroV when v == 0
CycMatrix even_family(long n, const CycNumber& u, const CycNumber& v);

}  // namespace matroots
