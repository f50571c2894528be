#pragma once

#include <vector>

#include "matroots/matrix.hpp"

namespace matroots {

// element of the hyperoctahedral group: matrix() has signs[i] at (i, perm[i])
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> signs;  // each +1 or -1

  int dim() const { return static_cast<int>(perm.size()); }
  static SignedPerm identity(int n);
  IntMatrix matrix() const;
  SignedPerm inverse() const;
  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);  // matrix(a)*matrix(b)
  bool operator==(const SignedPerm& o) const { return perm == o.perm && signs == o.signs; }
};

// P * m * Q without building the permutation matrices
IntMatrix act(const SignedPerm& p, const IntMatrix& m, const SignedPerm& q);

// full group, 2^n * n! elements, deterministic order; TooLarge for n > 5
std::vector<SignedPerm> signed_perm_group(int n);

long signed_perm_group_order(int n);

}  // namespace matroots
