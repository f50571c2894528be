#pragma once

#include <vector>

#include "matroots/matrix.hpp"

namespace matroots {

// monic characteristic polynomial of a, ascending coefficients (size dim+1),
// computed exactly by the Faddeev-LeVerrier recurrence
std::vector<Int> char_poly(const IntMatrix& a);

struct IntegerSpectrum {
  std::vector<Int> eigenvalues;            // strictly ascending
  IntMatrix eigenvectors;                  // columns, primitive, first nonzero > 0
  RatMatrix inverse;                       // eigenvectors^-1
  std::optional<IntMatrix> inverse_integral;  // when eigenvectors is unimodular
};

// Diagonalize an integer matrix whose spectrum consists of distinct integers.
// NonIntegerSpectrum if any eigenvalue is not a (rational) integer,
// RepeatedEigenvalue on multiplicity > 1, NonSimpleKernel if an eigenspace
// is not one-dimensional.
IntegerSpectrum integer_spectrum(const IntMatrix& a);

// primitive integer kernel vector of (a - lambda*I), first nonzero entry positive;
// NonSimpleKernel unless the kernel is exactly one-dimensional
std::vector<Int> eigenvector(const IntMatrix& a, const Int& lambda);

}  // namespace matroots
