#ifndef WITTEN_SCALARS_HPP
#define WITTEN_SCALARS_HPP

// Exact scalar types (GMP rationals/integers) and their Eigen bindings.
// All exact linear algebra in this library runs on Eigen dense containers
// with these scalars; decompositions are provided by exact_linalg, not by
// Eigen's floating-point factorizations.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace witten {

using Rat = mpq_class;
using Int = mpz_class;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// mpq_class(p, q) does not canonicalize; always build rationals through this.
inline Rat make_rat(long p, long q = 1) {
  if (q == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline Int numerator(const Rat& r) { return Int(r.get_num()); }
inline Int denominator(const Rat& r) { return Int(r.get_den()); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integral(r)) throw std::invalid_argument("to_int: not an integer");
  return Int(r.get_num());
}

inline Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline bool fits_i64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_i64(const Int& v) {
  if (!fits_i64(v)) throw std::overflow_error("to_i64: out of range");
  return static_cast<std::int64_t>(v.get_si());
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& v) { return v.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad literal '" + s + "'");
  r.canonicalize();
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

}  // namespace witten

#endif  // WITTEN_SCALARS_HPP
