#include "matroots/refsuite.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "matroots/canon.hpp"
#include "matroots/catalog.hpp"
#include "matroots/roots.hpp"
#include "matroots/search.hpp"
#include "matroots/spectrum.hpp"

namespace matroots {

namespace {

constexpr double kRadicalTol = 1e-9;  // float-vs-radical comparison (check 3)

struct Fails {
  std::ostringstream out;
  bool any = false;
  void req(bool ok, const std::string& what) {
    if (ok) return;
    if (any) out << "; ";
    out << what;
    any = true;
  }
  std::string str() const { return out.str(); }
};

const Root& root_at(const RootSet& rs, std::vector<long> idx) {
  for (const Root& r : rs.roots)
    if (r.indices == idx) return r;
  fail(ErrorCode::InvalidArgument, "no root with the requested index tuple");
}

std::string check_cube_roots(int) {
  Fails fl;
  IntMatrix c = c_matrix();
  fl.req(pow(c, 3) == IntMatrix::rows({{-3, 6}, {-6, 3}}), "C^3 value mismatch");
  RootSet rs = odd_c_roots(3);
  fl.req(rs.roots.size() == 9, "expected 9 cube roots");
  std::vector<Root> real = real_roots(rs);
  fl.req(real.size() == 3, "expected exactly 3 real cube roots");
  const Root& x300 = root_at(rs, {0, 0});
  const Root& x312 = root_at(rs, {1, 2});
  const Root& x321 = root_at(rs, {2, 1});
  fl.req(x300.integral && *x300.integral == IntMatrix::rows({{1, 1}, {-1, 2}}),
         "X(0,0) differs from its display");
  fl.req(x312.integral && *x312.integral == IntMatrix::rows({{-2, 1}, {-1, -1}}),
         "X(1,2) differs from its display");
  fl.req(x321.integral && *x321.integral == c, "X(2,1) != C");
  for (const Root& r : rs.roots)
    fl.req(verify_power(r.matrix, c, 3), "a cube root fails X^3 = C^3");
  return fl.str();
}

std::string check_omega_relation(int) {
  Fails fl;
  RootSet rs = odd_c_roots(3);
  const FieldPtr& f = rs.field;
  CycNumber omega = CycNumber::zeta(f, f->conductor() / 3);
  const Root& x310 = root_at(rs, {1, 0});
  const Root& x321 = root_at(rs, {2, 1});
  fl.req(x310.matrix == omega.pow(2) * x321.matrix, "X(1,0) != w^2 X(2,1)");
  // and the displayed complex entries of X(1,0)
  CycNumber i = CycNumber::zeta(f, 3);
  CycNumber s3 = CycNumber::zeta(f, 1) + CycNumber::zeta(f, -1);
  CycNumber is3 = i * s3;
  Rat half(1, 2);
  CycMatrix want(f, 2);
  want.at(0, 0) = CycNumber(f, -half) - half * is3;
  want.at(0, 1) = CycNumber(f, Rat(1)) + is3;
  want.at(1, 0) = CycNumber(f, Rat(-1)) - is3;
  want.at(1, 1) = CycNumber(f, half) + half * is3;
  fl.req(x310.matrix == want, "X(1,0) differs from its displayed entries");
  return fl.str();
}

std::string check_quintic(int) {
  Fails fl;
  RootSet rs = odd_c_roots(5);
  fl.req(rs.roots.size() == 25, "expected 25 quintic roots");
  fl.req(real_roots(rs).size() == 5, "expected exactly 5 real quintic roots");
  const Root& x514 = root_at(rs, {1, 4});
  fl.req(x514.integral && *x514.integral == c_matrix(), "X(1,4) != C");
  const Root& x532 = root_at(rs, {3, 2});
  fl.req(x532.is_real, "X(3,2) should be real");
  // the (1,0) entry is -(1+sqrt5)/2: det X(3,2) = 3*omega^5 = 3 forces the
  // off-diagonal product, and X^5 = C^5 confirms it exactly
  double r5 = std::sqrt(5.0), inner = std::sqrt(30.0 - 6.0 * r5);
  double want[2][2] = {{(-1 - r5 + inner) / 4, (1 + r5) / 2},
                       {-(1 + r5) / 2, (1 + r5 + inner) / 4}};
  auto ap = x532.matrix.approx();
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) {
      fl.req(std::abs(ap[i][j].imag()) < kRadicalTol, "imaginary residue in X(3,2)");
      fl.req(std::abs(ap[i][j].real() - want[i][j]) < kRadicalTol,
             "X(3,2) entry differs from its radical form");
    }
  for (const Root& r : rs.roots)
    fl.req(verify_power(r.matrix, c_matrix(), 5), "a quintic root fails X^5 = C^5");
  return fl.str();
}

std::string check_b_case(int) {
  Fails fl;
  IntMatrix b = catalog::b();
  fl.req(pow(b, 4) == IntMatrix::rows({{-179, 390}, {-130, 276}}), "B^4 value mismatch");
  RootSet rs = enumerate_roots(integer_spectrum(b), 4);
  fl.req(rs.roots.size() == 16, "expected 16 fourth roots");
  std::vector<Root> real = real_roots(rs);
  fl.req(real.size() == 4, "expected exactly 4 real fourth roots");
  IntMatrix x420 = IntMatrix::rows({{-17, 30}, {-10, 18}});
  bool found = false, found_b = false;
  for (const Root& r : real) {
    if (r.integral && *r.integral == x420) found = true;
    if (r.integral && *r.integral == b) found_b = true;
  }
  fl.req(found, "missing the real root (-17,30;-10,18)");
  fl.req(found_b, "missing B itself among the real roots");
  for (const Root& r : rs.roots)
    fl.req(verify_power(r.matrix, b, 4), "a root fails X^4 = B^4");
  return fl.str();
}

CycNumber random_cyc12(std::mt19937_64& rng, const FieldPtr& f12, bool nonzero) {
  CycNumber i = CycNumber::zeta(f12, 3);
  CycNumber s3 = CycNumber::zeta(f12, 1) + CycNumber::zeta(f12, -1);
  const CycNumber basis[4] = {CycNumber(f12, Rat(1)), i, s3, i * s3};
  while (true) {
    CycNumber v(f12, Rat(0));
    for (int k = 0; k < 4; k++) {
      long num = static_cast<long>(rng() % 7) - 3;  // -3..3
      long den = 1 + static_cast<long>(rng() % 3);  // 1..3
      if (num == 0) continue;
      v = v + make_rat(Int(num), Int(den)) * basis[k];
    }
    if (!nonzero || !v.is_zero()) return v;
  }
}

std::string check_even_family(int) {
  Fails fl;
  IntMatrix c = c_matrix();
  IntMatrix minus3(2);
  minus3.at(0, 0) = -3;
  minus3.at(1, 1) = -3;
  fl.req(c * c == minus3, "C^2 != -3I");

  FieldPtr f12 = CycField::get(12);
  CycNumber i = CycNumber::zeta(f12, 3);
  CycNumber s3 = CycNumber::zeta(f12, 1) + CycNumber::zeta(f12, -1);
  CycNumber is3 = i * s3;
  CycNumber zero(f12, Rat(0)), two(f12, Rat(2));

  CycMatrix y1 = even_family(2, -is3, two);
  CycMatrix want1 = is3.embed(y1.field()) *
                    CycMatrix::from_int(y1.field(), IntMatrix::rows({{-1, 0}, {1, 1}}));
  fl.req(y1 == want1, "Y(2, -i*s3, 2) differs from its display");

  // the (0,-3;1,0) display is the v = +i*s3 member; the printed v = -i*s3
  // lands on its negative (an equally valid square root)
  CycMatrix y2p = even_family(2, zero, is3);
  CycMatrix y2m = even_family(2, zero, -is3);
  CycMatrix disp = CycMatrix::from_int(y2p.field(), IntMatrix::rows({{0, -3}, {1, 0}}));
  fl.req(y2p == disp, "Y(2, 0, +i*s3) != (0,-3;1,0)");
  fl.req(y2m == -disp, "Y(2, 0, -i*s3) != -(0,-3;1,0)");

  for (const CycMatrix* y : {&y1, &y2p, &y2m}) {
    CycMatrix sq = y->pow(2);
    CycMatrix want = CycNumber(y->field(), Rat(-3)) * CycMatrix::identity(y->field(), 2);
    fl.req(sq == want, "a displayed family member fails Y^2 = -3I");
  }

  std::mt19937_64 rng(0x5eedULL);
  for (long n : {2L, 4L, 6L}) {
    Int scale = int_pow(Int(-3), static_cast<unsigned long>(n / 2));
    for (int t = 0; t < 200 && !fl.any; t++) {
      CycNumber u = random_cyc12(rng, f12, false);
      CycNumber v = random_cyc12(rng, f12, true);
      CycMatrix y = even_family(n, u, v);
      CycMatrix want =
          CycNumber(y.field(), Rat(scale)) * CycMatrix::identity(y.field(), 2);
      fl.req(y.pow(static_cast<unsigned long>(n)) == want,
             "a random family member fails Y^n = (-3)^(n/2) I at n=" + std::to_string(n));
    }
  }
  return fl.str();
}

std::string check_3x3(int) {
  Fails fl;
  IntMatrix m = catalog::m3(), a = catalog::a3();
  ExactInverse inv = inverse_exact(m);
  IntMatrix lam(3);
  lam.at(0, 0) = 1;
  lam.at(1, 1) = 2;
  lam.at(2, 2) = 3;
  fl.req(inv.integral && m * lam * *inv.integral == a, "M diag(1,2,3) M^-1 mismatch");
  RootSet rs = enumerate_roots(integer_spectrum(a), 4);
  fl.req(rs.roots.size() == 64, "expected 64 fourth roots");
  std::vector<IntMatrix> want = {
      a,
      IntMatrix::rows({{21, 18, -28}, {18, 18, -26}, {28, 26, -39}}),
      IntMatrix::rows({{-19, -14, 24}, {-14, -10, 18}, {-24, -18, 31}}),
      IntMatrix::rows({{5, 10, -12}, {10, 14, -18}, {12, 18, -23}})};
  std::set<IntMatrix> reals;
  for (const Root& r : real_roots(rs))
    if (r.integral) reals.insert(*r.integral);
  fl.req(real_roots(rs).size() == 8, "expected 8 real fourth roots");
  fl.req(reals.size() == 8, "all real fourth roots should be integral here");
  for (const IntMatrix& w : want) {
    fl.req(reals.count(w) == 1, "missing a displayed real fourth root");
    fl.req(reals.count(-w) == 1, "missing the sign partner of a displayed root");
  }
  for (const IntMatrix& w : want) {
    CycMatrix x = CycMatrix::from_int(rs.field, w);
    fl.req(verify_power(x, a, 4), "a displayed fourth root fails X^4 = A^4");
  }
  return fl.str();
}

std::string check_problem_i_n2(int workers) {
  Fails fl;
  SearchOptions opt;
  opt.workers = workers;
  SearchReport rep = exhaustive_problem_i(2, 2, opt);
  fl.req(rep.found && rep.minimal_norm && *rep.minimal_norm == 2, "minimal norm should be 2");
  std::vector<IntMatrix> oracle = naive_problem_i_level(2, 2);
  fl.req(rep.count == static_cast<long>(oracle.size()),
         "count " + std::to_string(rep.count) + " differs from the unpruned oracle " +
             std::to_string(oracle.size()));
  bool ok = false;
  if (rep.classes)
    for (const EquivClass& cls : *rep.classes)
      if (equivalent(cls.representative, catalog::m2())) ok = true;
  fl.req(ok, "no class representative equivalent to (1,1;1,2)");
  return fl.str();
}

std::string check_problem_i_n3(int workers) {
  Fails fl;
  SearchOptions opt;
  opt.workers = workers;
  SearchReport rep = exhaustive_problem_i(3, 3, opt);
  fl.req(rep.found && rep.minimal_norm && *rep.minimal_norm == 3, "minimal norm should be 3");
  fl.req(rep.count == 576, "expected 576 solutions, got " + std::to_string(rep.count));
  fl.req(rep.classes && rep.classes->size() == 1, "expected a single equivalence class");
  if (rep.classes && rep.classes->size() == 1) {
    fl.req((*rep.classes)[0].representative == catalog::m3(),
           "class representative should be the 3x3 optimum itself");
    fl.req((*rep.classes)[0].count == 576, "class size should be 576");
  }
  return fl.str();
}

std::string check_problem_i_n4(int workers) {
  Fails fl;
  SearchOptions opt;
  opt.workers = workers;
  SearchReport rep = exhaustive_problem_i(4, 2, opt);
  fl.req(rep.found && rep.minimal_norm && *rep.minimal_norm == 2, "minimal norm should be 2");
  fl.req(rep.count == 129024, "expected 129024 solutions, got " + std::to_string(rep.count));
  std::string sizes;
  if (rep.classes)
    for (const EquivClass& cls : *rep.classes)
      sizes += (sizes.empty() ? "" : "+") + std::to_string(cls.count);
  bool halves = rep.classes && rep.classes->size() == 2;
  if (halves)
    for (const EquivClass& cls : *rep.classes) halves = halves && cls.count == 64512;
  fl.req(halves, "expected exactly two equivalence classes of 64512, got sizes " + sizes);
  bool em = false, emt = false;
  if (rep.classes)
    for (const EquivClass& cls : *rep.classes) {
      if (equivalent(cls.representative, catalog::m4())) em = true;
      if (equivalent(cls.representative, catalog::m4_tilde())) emt = true;
    }
  fl.req(em, "no class equivalent to the published 4x4 representative");
  fl.req(emt, "no class equivalent to the published 4x4 co-representative");
  return fl.str();
}

std::string check_problem_ii(int workers) {
  Fails fl;
  SearchOptions opt;
  opt.workers = workers;
  SearchReport rep = exhaustive_problem_ii({Int(2), Int(3)}, 3, false, opt);
  fl.req(rep.found && rep.minimal_norm && *rep.minimal_norm == 4, "minimal product norm should be 4");
  fl.req(rep.count == 32, "expected 32 optimal solutions, got " + std::to_string(rep.count));
  fl.req(rep.classes && rep.classes->size() == 2, "expected two equivalence classes");
  bool ea = false, eat = false;
  if (rep.classes)
    for (const EquivClass& cls : *rep.classes) {
      fl.req(cls.count == 16, "expected classes of 16");
      if (equivalent(cls.representative, catalog::a2())) ea = true;
      if (equivalent(cls.representative, catalog::a2_tilde())) eat = true;
    }
  fl.req(ea && eat, "classes should match the two published products");
  return fl.str();
}

std::string check_problem_ii_iii_12(int workers) {
  Fails fl;
  SearchOptions opt;
  opt.workers = workers;
  SearchReport loose = exhaustive_problem_ii({Int(1), Int(2)}, 3, false, opt);
  fl.req(loose.found && loose.minimal_norm && *loose.minimal_norm == 3,
         "unconstrained minimum should be 3");
  IntMatrix w1 = IntMatrix::rows({{0, 1}, {-2, 3}});
  bool f1 = false;
  for (const Solution& s : loose.solutions)
    if (s.matrix == w1) f1 = true;
  fl.req(f1, "missing unconstrained witness (0,1;-2,3)");

  SearchReport strict = exhaustive_problem_ii({Int(1), Int(2)}, 3, true, opt);
  fl.req(strict.found && strict.minimal_norm && *strict.minimal_norm == 4,
         "zerofree-product minimum should be 4");
  IntMatrix w2 = IntMatrix::rows({{-1, 2}, {-3, 4}});
  bool f2 = false;
  for (const Solution& s : strict.solutions)
    if (s.matrix == w2) f2 = true;
  fl.req(f2, "missing zerofree witness (-1,2;-3,4)");
  return fl.str();
}

std::string check_canon_2x2(int) {
  Fails fl;
  IntMatrix a = catalog::a2(), at = catalog::a2_tilde();
  IntMatrix ca_rm = canonicalize(a, MatrixOrder::RowMajorLex);
  IntMatrix cat_rm = canonicalize(at, MatrixOrder::RowMajorLex);
  fl.req(ca_rm == IntMatrix::rows({{-4, -2}, {-1, 1}}), "row-major canonical form of A wrong");
  fl.req(cat_rm == IntMatrix::rows({{-4, -1}, {-2, 1}}), "row-major canonical form of A~ wrong");
  fl.req(ca_rm != cat_rm, "row-major forms should differ");
  IntMatrix ca_st = canonicalize(a, MatrixOrder::StructuralKey);
  IntMatrix cat_st = canonicalize(at, MatrixOrder::StructuralKey);
  fl.req(ca_st == IntMatrix::rows({{1, 1}, {2, -4}}), "structural canonical form of A wrong");
  fl.req(cat_st == IntMatrix::rows({{1, 2}, {1, -4}}), "structural canonical form of A~ wrong");
  fl.req(ca_st != cat_st, "structural forms should differ");
  return fl.str();
}

std::string check_fixed_points(int) {
  Fails fl;
  fl.req(canonicalize(catalog::m3(), MatrixOrder::StructuralKey) == catalog::m3(),
         "3x3 optimum should be a structural fixed point");
  fl.req(canonicalize(catalog::m4(), MatrixOrder::StructuralKey) == catalog::m4(),
         "4x4 optimum should be a structural fixed point");
  IntMatrix want = IntMatrix::rows(
      {{1, 1, 1, 2}, {1, 2, 2, 2}, {1, -1, -2, 1}, {2, -1, -2, 2}});
  fl.req(canonicalize(catalog::m4_tilde(), MatrixOrder::StructuralKey) == want,
         "structural canonical form of the 4x4 co-representative wrong");
  // the row-major forms separate the pair as well
  IntMatrix rm = IntMatrix::rows(
      {{-2, -2, -2, -1}, {-2, -2, -1, -2}, {-2, -1, -1, -1}, {-1, -2, -1, -1}});
  IntMatrix rmt = IntMatrix::rows(
      {{-2, -2, -2, -1}, {-2, -1, -1, -1}, {-2, 1, 2, -2}, {-1, 1, 2, -1}});
  fl.req(canonicalize(catalog::m4(), MatrixOrder::RowMajorLex) == rm,
         "row-major canonical form of the 4x4 optimum wrong");
  fl.req(canonicalize(catalog::m4_tilde(), MatrixOrder::RowMajorLex) == rmt,
         "row-major canonical form of the 4x4 co-representative wrong");
  return fl.str();
}

// keep only the matrices minimal in entry position `pos` under `o`
std::vector<IntMatrix> keep_min_at(const std::vector<IntMatrix>& ms, int pos, MatrixOrder o) {
  std::vector<IntMatrix> out;
  const Int* best = nullptr;
  for (const IntMatrix& m : ms) {
    const Int& v = m.entries()[static_cast<size_t>(pos)];
    if (!best || compare_value(o, v, *best) < 0) best = &v;
  }
  for (const IntMatrix& m : ms)
    if (compare_value(o, m.entries()[static_cast<size_t>(pos)], *best) == 0) out.push_back(m);
  return out;
}

std::set<IntMatrix> as_set(const std::vector<IntMatrix>& v) { return {v.begin(), v.end()}; }

std::string check_orbit_walkthrough(int) {
  Fails fl;
  for (int which = 0; which < 2; which++) {
    IntMatrix a = which == 0 ? catalog::a2() : catalog::a2_tilde();
    std::string tag = which == 0 ? "A" : "A~";
    std::vector<IntMatrix> orb = orbit(a);
    fl.req(orb.size() == 32, "orbit of " + tag + " should have 32 members");

    std::vector<IntMatrix> ul_neg4, ul_1;
    for (const IntMatrix& m : orb) {
      if (m.at(0, 0) == -4) ul_neg4.push_back(m);
      if (m.at(0, 0) == 1) ul_1.push_back(m);
    }
    fl.req(ul_neg4.size() == 4, "expected 4 members of orbit(" + tag + ") with -4 upper-left");
    fl.req(ul_1.size() == 8, "expected 8 members of orbit(" + tag + ") with 1 upper-left");

    if (which == 0) {
      std::set<IntMatrix> want_neg4 = {
          IntMatrix::rows({{-4, -2}, {-1, 1}}), IntMatrix::rows({{-4, -2}, {1, -1}}),
          IntMatrix::rows({{-4, 2}, {-1, -1}}), IntMatrix::rows({{-4, 2}, {1, 1}})};
      fl.req(as_set(ul_neg4) == want_neg4, "the -4 upper-left members of orbit(A) differ");
      // row-major elimination: second entry, then third
      std::vector<IntMatrix> step = keep_min_at(ul_neg4, 1, MatrixOrder::RowMajorLex);
      std::set<IntMatrix> want_step = {IntMatrix::rows({{-4, -2}, {-1, 1}}),
                                       IntMatrix::rows({{-4, -2}, {1, -1}})};
      fl.req(as_set(step) == want_step, "row-major second-entry elimination for A differs");
      step = keep_min_at(step, 2, MatrixOrder::RowMajorLex);
      fl.req(step.size() == 1 && step[0] == IntMatrix::rows({{-4, -2}, {-1, 1}}),
             "row-major third-entry elimination for A differs");
      fl.req(step[0] == canonicalize(a, MatrixOrder::RowMajorLex),
             "elimination survivor should be the row-major canonical form of A");
      // structural elimination over the 1 upper-left members
      step = keep_min_at(ul_1, 1, MatrixOrder::StructuralKey);
      std::set<IntMatrix> want_s1 = {
          IntMatrix::rows({{1, 1}, {2, -4}}), IntMatrix::rows({{1, 1}, {4, -2}}),
          IntMatrix::rows({{1, 1}, {-2, 4}}), IntMatrix::rows({{1, 1}, {-4, 2}})};
      fl.req(as_set(step) == want_s1, "structural second-entry elimination for A differs");
      step = keep_min_at(step, 2, MatrixOrder::StructuralKey);
      fl.req(step.size() == 1 && step[0] == IntMatrix::rows({{1, 1}, {2, -4}}),
             "structural third-entry elimination for A differs");
      fl.req(step[0] == canonicalize(a, MatrixOrder::StructuralKey),
             "elimination survivor should be the structural canonical form of A");
    } else {
      std::set<IntMatrix> want_neg4 = {
          IntMatrix::rows({{-4, -1}, {-2, 1}}), IntMatrix::rows({{-4, -1}, {2, -1}}),
          IntMatrix::rows({{-4, 1}, {-2, -1}}), IntMatrix::rows({{-4, 1}, {2, 1}})};
      fl.req(as_set(ul_neg4) == want_neg4, "the -4 upper-left members of orbit(A~) differ");
      std::vector<IntMatrix> step = keep_min_at(ul_neg4, 1, MatrixOrder::RowMajorLex);
      std::set<IntMatrix> want_step = {IntMatrix::rows({{-4, -1}, {-2, 1}}),
                                       IntMatrix::rows({{-4, -1}, {2, -1}})};
      fl.req(as_set(step) == want_step, "row-major second-entry elimination for A~ differs");
      step = keep_min_at(step, 2, MatrixOrder::RowMajorLex);
      fl.req(step.size() == 1 && step[0] == IntMatrix::rows({{-4, -1}, {-2, 1}}),
             "row-major third-entry elimination for A~ differs");
      step = keep_min_at(ul_1, 1, MatrixOrder::StructuralKey);
      std::set<IntMatrix> want_s1 = {IntMatrix::rows({{1, 2}, {1, -4}}),
                                     IntMatrix::rows({{1, 2}, {-1, 4}})};
      fl.req(as_set(step) == want_s1, "structural second-entry elimination for A~ differs");
      step = keep_min_at(step, 2, MatrixOrder::StructuralKey);
      fl.req(step.size() == 1 && step[0] == IntMatrix::rows({{1, 2}, {1, -4}}),
             "structural third-entry elimination for A~ differs");
      fl.req(step[0] == canonicalize(a, MatrixOrder::StructuralKey),
             "elimination survivor should be the structural canonical form of A~");
    }
  }
  return fl.str();
}

std::string check_catalog(int) {
  Fails fl;
  try {
    auto checks = catalog::verify_catalog();
    fl.req(checks.size() == 5, "expected five published pairs");
    const long want[5] = {4, 4, 4, 8, 8};
    for (size_t i = 0; i < checks.size() && i < 5; i++) {
      fl.req(checks[i].prof.concat_norm_int && *checks[i].prof.concat_norm_int == want[i],
             checks[i].name + ": recomputed concat norm differs");
      fl.req(checks[i].product_is_identity, checks[i].name + ": product check failed");
    }
  } catch (const Error& e) {
    fl.req(false, std::string("catalog verification raised: ") + e.what());
  }
  return fl.str();
}

}  // namespace

const std::vector<ReferenceCheck>& reference_checks() {
  static const std::vector<ReferenceCheck> checks = {
      {1, "cube-roots-of-c-cubed", false, 1.0, check_cube_roots},
      {2, "omega-squared-relation", false, 1.0, check_omega_relation},
      {3, "quintic-roots-and-radicals", false, 5.0, check_quintic},
      {4, "fourth-roots-of-b-fourth", false, 1.0, check_b_case},
      {5, "even-exponent-family", false, 10.0, check_even_family},
      {6, "3x3-diagonalization-and-roots", false, 2.0, check_3x3},
      {7, "min-concat-norm-2x2", false, 1.0, check_problem_i_n2},
      {8, "min-concat-norm-3x3", false, 30.0, check_problem_i_n3},
      {9, "min-concat-norm-4x4", true, 1800.0, check_problem_i_n4},
      {10, "min-product-norm-eigs-2-3", false, 10.0, check_problem_ii},
      {11, "min-product-norm-eigs-1-2", false, 10.0, check_problem_ii_iii_12},
      {12, "canonical-forms-2x2", false, 1.0, check_canon_2x2},
      {13, "canonical-fixed-points", false, 300.0, check_fixed_points},
      {14, "orbit-walkthrough", false, 1.0, check_orbit_walkthrough},
      {15, "zerofree-catalog", false, 1.0, check_catalog},
  };
  return checks;
}

CheckResult run_reference_check(const ReferenceCheck& chk, int workers) {
  CheckResult res;
  res.id = chk.id;
  res.name = chk.name;
  res.budget_sec = chk.budget_sec;
  res.ran = true;
  auto t0 = std::chrono::steady_clock::now();
  std::string msg;
  try {
    msg = chk.run(workers);
  } catch (const std::exception& e) {
    msg = std::string("raised: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.pass = msg.empty();
  res.detail = msg;
  if (res.pass && res.seconds > res.budget_sec) {
    res.pass = false;
    res.detail = "exceeded the runtime budget";
  }
  return res;
}

std::vector<CheckResult> run_reference_suite(bool include_slow, int workers) {
  std::vector<CheckResult> out;
  for (const ReferenceCheck& chk : reference_checks()) {
    if (chk.slow && !include_slow) {
      CheckResult res;
      res.id = chk.id;
      res.name = chk.name;
      res.budget_sec = chk.budget_sec;
      res.ran = false;
      res.pass = true;  // skipped, not failed
      res.detail = "skipped (slow; enable with --slow)";
      out.push_back(res);
      continue;
    }
    out.push_back(run_reference_check(chk, workers));
  }
  return out;
}

}  // namespace matroots
