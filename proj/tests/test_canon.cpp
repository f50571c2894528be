#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "matroots/canon.hpp"
#include "matroots/catalog.hpp"
#include "matroots/error.hpp"

using namespace matroots;

namespace {

IntMatrix random_matrix(int n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) m.at(i, j) = d(rng);
  return m;
}

// random element of the double coset of m
IntMatrix random_equivalent(const IntMatrix& m, std::mt19937_64& rng) {
  int n = m.dim();
  std::vector<int> pl(n), pr(n);
  for (int i = 0; i < n; i++) pl[i] = pr[i] = i;
  std::shuffle(pl.begin(), pl.end(), rng);
  std::shuffle(pr.begin(), pr.end(), rng);
  IntMatrix out(n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> sl(n), sr(n);
  for (int i = 0; i < n; i++) sl[i] = coin(rng) ? 1 : -1;
  for (int i = 0; i < n; i++) sr[i] = coin(rng) ? 1 : -1;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) out.at(i, j) = Int(sl[i] * sr[j]) * m.at(pl[i], pr[j]);
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("entry orders") {
  // row-major: plain integer order
  CHECK(compare_value(MatrixOrder::RowMajorLex, -2, 1) < 0);
  CHECK(compare_value(MatrixOrder::RowMajorLex, 3, 3) == 0);
  // structural: 1 < 2 < ... < 0 < -1 < -2 < ...
  CHECK(compare_value(MatrixOrder::StructuralKey, 1, 2) < 0);
  CHECK(compare_value(MatrixOrder::StructuralKey, 2, 0) < 0);
  CHECK(compare_value(MatrixOrder::StructuralKey, 0, -1) < 0);
  CHECK(compare_value(MatrixOrder::StructuralKey, -1, -2) < 0);
  CHECK(compare_value(MatrixOrder::StructuralKey, 5, -1) < 0);
  CHECK(compare_value(MatrixOrder::StructuralKey, -3, -3) == 0);

  IntMatrix a = IntMatrix::rows({{1, 2}, {3, 4}});
  IntMatrix b = IntMatrix::rows({{1, 2}, {3, 5}});
  CHECK(compare(MatrixOrder::RowMajorLex, a, b) < 0);
  CHECK(compare(MatrixOrder::RowMajorLex, a, a) == 0);
}

TEST_CASE("pinned 2x2 canonical forms") {
  IntMatrix a = catalog::a2();        // (1 1; -2 4)
  IntMatrix at = catalog::a2_tilde(); // (1 2; -1 4)
  CHECK(canonicalize(a, MatrixOrder::RowMajorLex) == IntMatrix::rows({{-4, -2}, {-1, 1}}));
  CHECK(canonicalize(at, MatrixOrder::RowMajorLex) == IntMatrix::rows({{-4, -1}, {-2, 1}}));
  CHECK(canonicalize(a, MatrixOrder::StructuralKey) == IntMatrix::rows({{1, 1}, {2, -4}}));
  CHECK(canonicalize(at, MatrixOrder::StructuralKey) == IntMatrix::rows({{1, 2}, {1, -4}}));
  CHECK_FALSE(equivalent(a, at));
}

TEST_CASE("pinned larger fixed points") {
  // the 3x3 and 4x4 representatives are structural-order fixed points
  CHECK(canonicalize(catalog::m3(), MatrixOrder::StructuralKey) == catalog::m3());
  CHECK(canonicalize(catalog::m4(), MatrixOrder::StructuralKey) == catalog::m4());
  CHECK(canonicalize(catalog::m4(), MatrixOrder::StructuralKey) !=
        canonicalize(catalog::m4_tilde(), MatrixOrder::StructuralKey));
  CHECK_FALSE(equivalent(catalog::m4(), catalog::m4_tilde()));

  // the same pair separated under the row-major order
  CHECK(canonicalize(catalog::m4(), MatrixOrder::RowMajorLex) ==
        IntMatrix::rows({{-2, -2, -2, -1}, {-2, -2, -1, -2}, {-2, -1, -1, -1}, {-1, -2, -1, -1}}));
  CHECK(canonicalize(catalog::m4_tilde(), MatrixOrder::RowMajorLex) ==
        IntMatrix::rows({{-2, -2, -2, -1}, {-2, -1, -1, -1}, {-2, 1, 2, -2}, {-1, 1, 2, -1}}));
}

TEST_CASE("branch-and-bound matches the exhaustive scan") {
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 200; rep++) {
    IntMatrix m = random_matrix(2, 3, rng);
    for (MatrixOrder o : {MatrixOrder::RowMajorLex, MatrixOrder::StructuralKey})
      CHECK(canonicalize(m, o) == canonicalize_exhaustive(m, o));
  }
  for (int rep = 0; rep < 60; rep++) {
    IntMatrix m = random_matrix(3, 3, rng);
    for (MatrixOrder o : {MatrixOrder::RowMajorLex, MatrixOrder::StructuralKey})
      CHECK(canonicalize(m, o) == canonicalize_exhaustive(m, o));
  }
}

TEST_CASE("idempotence and orbit constancy") {
  std::mt19937_64 rng(52);
  for (int rep = 0; rep < 150; rep++) {
    int n = 2 + (rep % 2);
    IntMatrix m = random_matrix(n, 3, rng);
    for (MatrixOrder o : {MatrixOrder::RowMajorLex, MatrixOrder::StructuralKey}) {
      IntMatrix c = canonicalize(m, o);
      CHECK(canonicalize(c, o) == c);
      CHECK(canonicalize(random_equivalent(m, rng), o) == c);
    }
  }
}

TEST_CASE("orbit") {
  IntMatrix id = IntMatrix::identity(2);
  std::vector<IntMatrix> o = orbit(id);
  CHECK(o.size() == 8);  // signed permutations of I2, up to the double action
  CHECK(std::is_sorted(o.begin(), o.end()));
  for (const IntMatrix& x : o) CHECK(equivalent(x, id));

  // canonical form is the orbit minimum, for either order
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 40; rep++) {
    IntMatrix m = random_matrix(2, 2, rng);
    std::vector<IntMatrix> orb = orbit(m);
    long g = 2L * 2 * factorial(2);  // |G| = 2^n n!
    CHECK((g * g) % static_cast<long>(orb.size()) == 0);
    for (MatrixOrder ord : {MatrixOrder::RowMajorLex, MatrixOrder::StructuralKey}) {
      IntMatrix best = orb[0];
      for (const IntMatrix& x : orb)
        if (compare(ord, x, best) < 0) best = x;
      CHECK(best == canonicalize(m, ord));
    }
  }

  // orbit size divides |G x G| at 3x3 too
  for (int rep = 0; rep < 6; rep++) {
    IntMatrix m = random_matrix(3, 2, rng);
    long g = 2L * 2 * 2 * factorial(3);
    long orb = static_cast<long>(orbit(m).size());
    CHECK((g * g) % orb == 0);
  }
}

TEST_CASE("equivalence relation") {
  CHECK(equivalent(catalog::m2(), catalog::m2_tilde()));
  CHECK(equivalent(catalog::m2_tilde(), catalog::m2()));
  CHECK(equivalent(catalog::m2(), catalog::m2()));

  std::mt19937_64 rng(54);
  for (int rep = 0; rep < 60; rep++) {
    IntMatrix a = random_matrix(2, 3, rng);
    IntMatrix b = random_matrix(2, 3, rng);
    bool row = equivalent(a, b, MatrixOrder::RowMajorLex);
    bool st = equivalent(a, b, MatrixOrder::StructuralKey);
    CHECK(row == st);  // the order only picks the engine
    CHECK(equivalent(a, random_equivalent(a, rng)));
  }
}

TEST_CASE("partition_classes") {
  std::vector<IntMatrix> ms;
  std::mt19937_64 rng(55);
  IntMatrix a = catalog::a2(), b = catalog::a2_tilde();
  for (int i = 0; i < 5; i++) ms.push_back(random_equivalent(a, rng));
  for (int i = 0; i < 3; i++) ms.push_back(random_equivalent(b, rng));
  std::vector<EquivClass> cl = partition_classes(ms, MatrixOrder::StructuralKey);
  REQUIRE(cl.size() == 2);
  CHECK(cl[0].count + cl[1].count == 8);
  long five = cl[0].count == 5 ? cl[0].count : cl[1].count;
  CHECK(five == 5);
  for (const EquivClass& c : cl)
    CHECK(canonicalize(c.representative, MatrixOrder::StructuralKey) == c.representative);
  CHECK(compare(MatrixOrder::StructuralKey, cl[0].representative, cl[1].representative) < 0);

  // worker fan-out changes nothing
  std::vector<EquivClass> cl4 = partition_classes(ms, MatrixOrder::StructuralKey, 4);
  REQUIRE(cl4.size() == cl.size());
  for (size_t i = 0; i < cl.size(); i++) {
    CHECK(cl4[i].representative == cl[i].representative);
    CHECK(cl4[i].count == cl[i].count);
  }
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(canonicalize(IntMatrix::identity(6), MatrixOrder::StructuralKey), Error);
  CHECK_THROWS_AS(canonicalize_exhaustive(IntMatrix::identity(5), MatrixOrder::StructuralKey),
                  Error);
  CHECK_THROWS_AS(orbit(IntMatrix::identity(5)), Error);
  try {
    orbit(IntMatrix::identity(5));
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::TooLarge);
  }
}
