#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace Eigen {

// mpz_class as a dense Eigen scalar: exact, arbitrary precision, no implicit
// conversions back to built-ins anywhere in the matrix kernels.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace vsl {

using Int = mpz_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign_int(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// Representative of a mod m in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline std::string int_str(const Int& a) { return a.get_str(); }

}  // namespace vsl
