#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "matroots/catalog.hpp"
#include "matroots/error.hpp"
#include "matroots/search.hpp"
#include "matroots/spectrum.hpp"

using namespace matroots;

namespace {

Int eval_poly(const std::vector<Int>& p, const Int& x) {
  Int acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

IntMatrix diag(const std::vector<Int>& d) {
  IntMatrix m(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); i++) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

// A = P diag(d) P^-1 with unimodular P: known integer spectrum by construction
IntMatrix conjugated_diag(const std::vector<Int>& d, uint64_t seed) {
  IntMatrix p = random_unimodular(static_cast<int>(d.size()), 12, seed);
  ExactInverse inv = inverse_exact(p);
  return (RatMatrix(p * diag(d)) * inv.inverse).to_int();
}

}  // namespace

TEST_CASE("char_poly on pinned matrices") {
  // (-1 6; -2 6): trace 5, det 6
  CHECK(char_poly(IntMatrix::rows({{-1, 6}, {-2, 6}})) == std::vector<Int>{6, -5, 1});
  // (1 -2; 2 -1): trace 0, det 3
  CHECK(char_poly(IntMatrix::rows({{1, -2}, {2, -1}})) == std::vector<Int>{3, 0, 1});
  CHECK(char_poly(IntMatrix::identity(3)) == std::vector<Int>{-1, 3, -3, 1});
}

TEST_CASE("char_poly matches det(xI - A) pointwise") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int n = 1; n <= 4; n++)
    for (int rep = 0; rep < 40; rep++) {
      IntMatrix a(n);
      for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) a.at(i, j) = d(rng);
      std::vector<Int> p = char_poly(a);
      REQUIRE(p.size() == static_cast<size_t>(n) + 1);
      CHECK(p.back() == 1);  // monic
      for (Int x : {Int(-3), Int(0), Int(1), Int(2), Int(7)}) {
        IntMatrix xi = diag(std::vector<Int>(static_cast<size_t>(n), x));
        CHECK(eval_poly(p, x) == det(xi - a));
      }
    }
}

TEST_CASE("integer_spectrum on the 2x2 fixture") {
  IntegerSpectrum s = integer_spectrum(catalog::b());
  CHECK(s.eigenvalues == std::vector<Int>{2, 3});
  CHECK(s.eigenvectors == catalog::b_conjugator());
  REQUIRE(s.inverse_integral.has_value());
  CHECK(s.eigenvectors * *s.inverse_integral == IntMatrix::identity(2));

  // reconstruct: eigenvectors * diag * inverse = b
  RatMatrix r = RatMatrix(s.eigenvectors * diag(s.eigenvalues)) * s.inverse;
  CHECK(r.is_integral());
  CHECK(r.to_int() == catalog::b());
}

TEST_CASE("integer_spectrum recovers constructed spectra") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 30; rep++) {
    std::vector<Int> d = {Int(-2 + (rep % 3)), Int(3 + (rep % 5)), Int(11)};
    IntMatrix a = conjugated_diag(d, 1000 + rep);
    IntegerSpectrum s = integer_spectrum(a);
    std::vector<Int> want = d;
    std::sort(want.begin(), want.end());
    CHECK(s.eigenvalues == want);
    RatMatrix r = RatMatrix(s.eigenvectors * diag(s.eigenvalues)) * s.inverse;
    CHECK(r.is_integral());
    CHECK(r.to_int() == a);
    // columns primitive, first nonzero positive
    for (int j = 0; j < 3; j++) {
      Int g = 0;
      int lead = 0;
      bool seen = false;
      for (int i = 0; i < 3; i++) {
        g = gcd_int(g, s.eigenvectors.at(i, j));
        if (!seen && s.eigenvectors.at(i, j) != 0) {
          lead = sign_int(s.eigenvectors.at(i, j));
          seen = true;
        }
      }
      CHECK(g == 1);
      CHECK(lead == 1);
    }
  }
  // zero eigenvalue is fine here (only root enumeration refuses it)
  IntMatrix z = IntMatrix::rows({{-2, 2}, {-4, 4}});  // spectrum {0, 2}
  CHECK(integer_spectrum(z).eigenvalues == std::vector<Int>{0, 2});
}

TEST_CASE("spectrum failure modes") {
  auto code_of = [](const IntMatrix& m) {
    try {
      integer_spectrum(m);
    } catch (const Error& e) {
      return e.code;
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of(IntMatrix::identity(2)) == ErrorCode::RepeatedEigenvalue);
  CHECK(code_of(IntMatrix::rows({{0, 1}, {0, 0}})) == ErrorCode::RepeatedEigenvalue);
  CHECK(code_of(IntMatrix::rows({{1, -2}, {2, -1}})) == ErrorCode::NonIntegerSpectrum);  // x^2+3
  CHECK(code_of(IntMatrix::rows({{0, 2}, {1, 0}})) == ErrorCode::NonIntegerSpectrum);    // x^2-2
  // x^2-1 factors over Z: no failure
  CHECK(integer_spectrum(IntMatrix::rows({{0, 1}, {1, 0}})).eigenvalues == std::vector<Int>{-1, 1});
}

TEST_CASE("eigenvector") {
  IntMatrix b = catalog::b();
  std::vector<Int> v2 = eigenvector(b, 2);
  CHECK(v2 == std::vector<Int>{2, 1});
  std::vector<Int> v3 = eigenvector(b, 3);
  CHECK(v3 == std::vector<Int>{3, 2});

  // two-dimensional kernel is rejected
  CHECK_THROWS_AS(eigenvector(diag({2, 2}), 2), Error);
  try {
    eigenvector(diag({2, 2}), 2);
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::NonSimpleKernel);
  }
  // lambda not an eigenvalue: kernel is zero-dimensional
  CHECK_THROWS_AS(eigenvector(b, 7), Error);
}
