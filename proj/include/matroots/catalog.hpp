#pragma once

#include <string>
#include <vector>

#include "matroots/matrix.hpp"

namespace matroots::catalog {

// Named small matrices used throughout the tests and the reproduction suite.
// Everything stated about them is recomputed by verify_catalog(); nothing is
// trusted as transcribed.

// 2x2
IntMatrix b();             // (-1 6; -2 6), eigenvalues {2, 3}
IntMatrix b_conjugator();  // (2 3; 1 2); b = that * diag(2,3) * that^-1
IntMatrix a2();            // (1 1; -2 4), the problem-(ii) optimum for diag(2,3)
IntMatrix a2_tilde();      // (1 2; -1 4), the inequivalent co-optimum
IntMatrix m2();            // (1 1; 1 2), the n=2 problem-(i) optimum
IntMatrix m2_tilde();      // (-2 1; -1 1), equivalent to m2

// 3x3
IntMatrix z3();  // (1 1 1; 1 2 2; 1 2 3): unimodular but not zerofree
IntMatrix m3();  // the n=3 problem-(i) representative; structural fixed point
IntMatrix a3();  // m3 * diag(1,2,3) * m3^-1

// 4x4
IntMatrix m4();        // the n=4 problem-(i) representative
IntMatrix m4_tilde();  // the inequivalent co-representative

struct ZerofreePair {
  std::string name;
  long norm = 0;     // claimed concat norm
  IntMatrix m;
  IntMatrix m_inv;   // claimed inverse
};

// the published unimodular zerofree pairs: three 5x5, two 6x6
const std::vector<ZerofreePair>& zerofree_pairs();

struct PairCheck {
  std::string name;
  MatrixProfile prof;       // of the pair's M
  bool product_is_identity = false;
};

// M * claimed-inverse = I, unimodular, zerofree, concat norm as claimed;
// FixtureCorrupt otherwise
PairCheck verify_pair(const ZerofreePair& p);

// verify_pair over every pair, plus the relations stated above (conjugations,
// inverses, equivalences).  FixtureCorrupt names the failing item.
std::vector<PairCheck> verify_catalog();

}  // namespace matroots::catalog
