#pragma once

#include <vector>

#include "matroots/matrix.hpp"

namespace matroots {

// Total orders on integer matrix entries, extended to matrices by row-major
// lexicographic comparison of entry sequences.
//  - RowMajorLex: plain integer order on entries
//  - StructuralKey: positives ascending, then zero, then negatives by |.|
//    (key(x) = (0, x) for x > 0, (1, |x|) otherwise)
enum class MatrixOrder { RowMajorLex, StructuralKey };

int compare_value(MatrixOrder o, const Int& a, const Int& b);   // -1 / 0 / +1
int compare(MatrixOrder o, const IntMatrix& a, const IntMatrix& b);

// Minimum of { P m Q : P, Q signed permutation matrices } under the order.
// Branch-and-bound; exact. TooLarge for dim > 5.
IntMatrix canonicalize(const IntMatrix& m, MatrixOrder order);

// reference engine: scans the whole double coset; TooLarge for dim > 4
IntMatrix canonicalize_exhaustive(const IntMatrix& m, MatrixOrder order);

// the full equivalence class, sorted row-major ascending; TooLarge for dim > 4
std::vector<IntMatrix> orbit(const IntMatrix& m);

// same double-coset orbit?  (order only picks the engine; the answer is
// order-independent)
bool equivalent(const IntMatrix& a, const IntMatrix& b,
                MatrixOrder order = MatrixOrder::StructuralKey);

struct EquivClass {
  IntMatrix representative;  // canonical form
  long count = 0;            // multiplicity in the input list
};

// group a list by equivalence; classes sorted ascending by representative.
// Canonicalization fans out across `workers` threads; result is identical for
// any worker count.
std::vector<EquivClass> partition_classes(const std::vector<IntMatrix>& ms, MatrixOrder order,
                                          int workers = 1);

}  // namespace matroots
