#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "matroots/error.hpp"

namespace matroots {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }
inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline int sign_int(const Int& x) { return sgn(x); }

// |a| vs |b| without temporaries
inline int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline std::optional<int64_t> to_int64(const Int& x) {
  if (!x.fits_slong_p()) return std::nullopt;
  long v = x.get_si();
  return static_cast<int64_t>(v);
}

inline Int parse_int(const std::string& s) {
  Int v;
  if (v.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "not an integer: '" + s + "'");
  return v;
}

// "p" or "p/q"
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Int int_pow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// exact quotient; error if remainder nonzero
inline Int divexact(const Int& a, const Int& b) {
  if (b == 0) fail(ErrorCode::DivisionByZero, "exact division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) fail(ErrorCode::NotDivisible, a.get_str() + " not divisible by " + b.get_str());
  return q;
}

// splitmix64: deterministic per-index stream derivation for seeded searches
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x51ed2701a3c5e791ULL));
}

}  // namespace matroots
