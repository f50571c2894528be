#include "matroots/catalog.hpp"

#include "matroots/canon.hpp"
#include "matroots/roots.hpp"

namespace matroots::catalog {

IntMatrix b() { return IntMatrix::rows({{-1, 6}, {-2, 6}}); }
IntMatrix b_conjugator() { return IntMatrix::rows({{2, 3}, {1, 2}}); }
IntMatrix a2() { return IntMatrix::rows({{1, 1}, {-2, 4}}); }
IntMatrix a2_tilde() { return IntMatrix::rows({{1, 2}, {-1, 4}}); }
IntMatrix m2() { return IntMatrix::rows({{1, 1}, {1, 2}}); }
IntMatrix m2_tilde() { return IntMatrix::rows({{-2, 1}, {-1, 1}}); }

IntMatrix z3() { return IntMatrix::rows({{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}); }
IntMatrix m3() { return IntMatrix::rows({{1, 2, 2}, {2, 1, 2}, {2, 2, 3}}); }
IntMatrix a3() { return IntMatrix::rows({{-3, -6, 8}, {-6, -6, 10}, {-8, -10, 15}}); }

IntMatrix m4() {
  return IntMatrix::rows({{1, 1, 1, 2}, {1, 1, 2, 1}, {1, 2, 2, 2}, {2, 1, 2, 2}});
}
IntMatrix m4_tilde() {
  return IntMatrix::rows({{1, 1, 1, 2}, {-1, 1, 2, -1}, {-2, 1, 2, -2}, {1, 2, 2, 2}});
}

const std::vector<ZerofreePair>& zerofree_pairs() {
  static const std::vector<ZerofreePair> pairs = {
      {"5x5-a", 4,
       IntMatrix::rows({{1, 3, 2, 1, 3},
                        {3, 1, 1, 1, 2},
                        {2, 2, 2, 1, 3},
                        {2, 3, 1, 1, 3},
                        {1, 1, 1, 1, 1}}),
       IntMatrix::rows({{2, 2, -2, -1, -1},
                        {3, 2, -3, -1, -1},
                        {3, 2, -2, -2, -1},
                        {-4, -3, 3, 2, 3},
                        {-4, -3, 4, 2, 1}})},
      {"5x5-b", 4,
       IntMatrix::rows({{1, 2, 2, 2, 3},
                        {1, 2, 1, 3, 3},
                        {1, 1, 2, 1, 1},
                        {1, 3, 3, 3, 3},
                        {1, 2, 2, 3, 2}}),
       IntMatrix::rows({{-3, 3, 3, 1, -3},
                        {-4, 3, 2, 3, -4},
                        {2, -2, -1, -1, 2},
                        {1, -1, -1, -1, 2},
                        {2, -1, -1, -1, 1}})},
      {"5x5-c", 4,
       IntMatrix::rows({{2, 1, 1, 2, 2},
                        {3, 1, 1, 1, 2},
                        {1, 2, 1, 2, 1},
                        {3, 2, 2, 3, 3},
                        {3, 3, 1, 2, 2}}),
       IntMatrix::rows({{1, 2, 2, -2, -1},
                        {-1, -1, -1, 1, 1},
                        {-2, 1, 1, 1, -1},
                        {2, 1, 2, -2, -1},
                        {-1, -3, -4, 3, 2}})},
      {"6x6-a", 8,
       IntMatrix::rows({{3, 1, 3, 2, 4, 1},
                        {5, 4, 4, 2, 4, 3},
                        {8, 4, 8, 4, 8, 3},
                        {3, 4, 3, 3, 4, 2},
                        {5, 2, 4, 1, 3, 2},
                        {4, 1, 4, 2, 4, 1}}),
       IntMatrix::rows({{2, -3, -1, 2, 4, -2},
                        {2, -4, 1, 2, 4, -5},
                        {-3, 3, 1, -2, -4, 3},
                        {-3, 4, -2, -1, -4, 7},
                        {3, -3, 1, 1, 3, -5},
                        {-4, 8, -1, -4, -8, 8}})},
      {"6x6-b", 8,
       IntMatrix::rows({{5, 5, 1, 7, 6, 3},
                        {3, 4, 3, 5, 5, 2},
                        {5, 4, 1, 6, 5, 3},
                        {2, 3, 6, 3, 4, 2},
                        {3, 4, 1, 6, 5, 2},
                        {1, 3, 8, 3, 4, 2}}),
       IntMatrix::rows({{-2, 4, 2, -3, -2, 1},
                        {4, 1, -2, -3, -3, 2},
                        {-1, 2, 1, -2, -1, 1},
                        {-2, 3, 2, -4, -1, 2},
                        {-1, -4, -1, 7, 4, -4},
                        {4, -8, -3, 6, 3, -2}})},
  };
  return pairs;
}

namespace {

[[noreturn]] void corrupt(const std::string& what) {
  fail(ErrorCode::FixtureCorrupt, "catalog: " + what);
}

void require(bool ok, const std::string& what) {
  if (!ok) corrupt(what);
}

IntMatrix conjugate_diag(const IntMatrix& m, std::initializer_list<long> diag) {
  IntMatrix lam(m.dim());
  int i = 0;
  for (long v : diag) lam.at(i, i) = v, i++;
  ExactInverse inv = inverse_exact(m);
  require(inv.integral.has_value(), "conjugator not unimodular");
  return m * lam * *inv.integral;
}

}  // namespace

PairCheck verify_pair(const ZerofreePair& p) {
  PairCheck chk;
  chk.name = p.name;
  require(p.m.dim() == p.m_inv.dim(), p.name + ": dimension mismatch");
  chk.product_is_identity = p.m * p.m_inv == IntMatrix::identity(p.m.dim());
  require(chk.product_is_identity, p.name + ": claimed inverse fails M*M^-1 = I");
  chk.prof = profile(p.m);
  require(chk.prof.unimodular, p.name + ": not unimodular");
  require(chk.prof.zerofree, p.name + ": not zerofree");
  require(chk.prof.concat_norm_int && *chk.prof.concat_norm_int == p.norm,
          p.name + ": concat norm differs from the recorded value");
  return chk;
}

std::vector<PairCheck> verify_catalog() {
  std::vector<PairCheck> out;
  for (const ZerofreePair& p : zerofree_pairs()) out.push_back(verify_pair(p));

  // C^2 = -3I
  IntMatrix c = c_matrix();
  IntMatrix minus3(2);
  minus3.at(0, 0) = -3;
  minus3.at(1, 1) = -3;
  require(c * c == minus3, "C^2 != -3I");

  // stated diagonalizations
  require(conjugate_diag(b_conjugator(), {2, 3}) == b(), "B != conj * diag(2,3) * conj^-1");
  require(conjugate_diag(m2(), {2, 3}) == a2(), "A != M diag(2,3) M^-1");
  require(conjugate_diag(m2_tilde(), {2, 3}) == a2_tilde(), "A~ != M~ diag(2,3) M~^-1");
  require(conjugate_diag(m3(), {1, 2, 3}) == a3(), "3x3 A != M diag(1,2,3) M^-1");

  // zerofree / not-zerofree claims on the small representatives
  require(profile(m2()).zerofree, "m2 not zerofree");
  require(profile(m3()).zerofree, "m3 not zerofree");
  require(profile(m4()).zerofree, "m4 not zerofree");
  require(profile(m4_tilde()).zerofree, "m4~ not zerofree");
  MatrixProfile z = profile(z3());
  require(z.unimodular && !z.zerofree, "z3 should be unimodular but not zerofree");

  // the published equivalence: P m2 Q = m2~ with P = (0,-1;-1,0), Q = (0,-1;1,0)
  IntMatrix p = IntMatrix::rows({{0, -1}, {-1, 0}});
  IntMatrix q = IntMatrix::rows({{0, -1}, {1, 0}});
  require(p * m2() * q == m2_tilde(), "P m2 Q != m2~");
  require(equivalent(m2(), m2_tilde()), "m2 and m2~ should be equivalent");
  require(!equivalent(a2(), a2_tilde()), "a2 and a2~ should be inequivalent");
  require(!equivalent(m4(), m4_tilde()), "m4 and m4~ should be inequivalent");

  return out;
}

}  // namespace matroots::catalog
