#include <doctest.h>

#include <sstream>

#include "vsl/dual.hpp"

using vsl::Dual;
using vsl::DualMat;
using vsl::Int;

// Product computed independently from the defining rule
// (a1 + b1 s)(a2 + b2 s) = a1 a2 + (a1 b2 + a2 b1) s.
static Dual slow_mul(const Dual& x, const Dual& y) {
  return Dual(x.unit() * y.unit(), x.unit() * y.eps() + y.unit() * x.eps());
}

TEST_CASE("dual arithmetic follows the nilpotent rule") {
  Dual a(2, 3), b(4, -1);
  CHECK(a * b == Dual(8, 10));
  CHECK(a * b == slow_mul(a, b));
  CHECK(a + b == Dual(6, 2));
  CHECK(a - b == Dual(-2, 4));
  CHECK(-a == Dual(-2, -3));

  // s is nilpotent of order two
  CHECK(Dual::s() * Dual::s() == Dual(0));
  CHECK((Dual(1) + Dual::s()) * (Dual(1) - Dual::s()) == Dual(1));

  for (int u1 = -3; u1 <= 3; ++u1)
    for (int e1 = -2; e1 <= 2; ++e1)
      for (int u2 = -3; u2 <= 3; ++u2)
        for (int e2 = -2; e2 <= 2; ++e2) {
          Dual x(u1, e1), y(u2, e2);
          CHECK(x * y == slow_mul(x, y));
          CHECK(x * y == y * x);
        }
}

TEST_CASE("dual inverses exist exactly for unit part +-1") {
  Dual a(1, 5), b(-1, 3);
  CHECK(a.inverse() == Dual(1, -5));
  CHECK(a * a.inverse() == Dual(1));
  CHECK(b * b.inverse() == Dual(1));
  CHECK_FALSE(Dual(2, 1).is_invertible());
  CHECK_THROWS_AS(Dual(2, 1).inverse(), std::domain_error);
  CHECK_THROWS_AS(Dual(0, 1).inverse(), std::domain_error);
}

TEST_CASE("dual printing uses the compact written form") {
  CHECK(Dual(0, 0).to_string() == "0");
  CHECK(Dual(1, -1).to_string() == "1-s");
  CHECK(Dual(1, 1).to_string() == "1+s");
  CHECK(Dual(0, 2).to_string() == "2s");
  CHECK(Dual(0, -1).to_string() == "-s");
  CHECK(Dual(1, 2).to_string() == "1+2s");
  CHECK(Dual(-1, 3).to_string() == "-1+3s");
  CHECK(Dual(0, -2).to_string() == "-2s");
  CHECK(Dual(5, 0).to_string() == "5");
  std::ostringstream os;
  os << Dual(1, -2);
  CHECK(os.str() == "1-2s");
}

TEST_CASE("dual matrices multiply through Eigen") {
  Dual s = Dual::s();
  DualMat tau(2, 2);
  tau << s, Dual(1) + s, Dual(1) - s, -s;

  // the virtual generator block squares to the identity
  CHECK(DualMat(tau * tau) == DualMat::Identity(2, 2));

  // hand-expanded 2x2 product as an independent route
  DualMat swap(2, 2);
  swap << Dual(0), Dual(1), Dual(1), Dual(0);
  DualMat p = tau * swap;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Dual expect = slow_mul(tau(i, 0), swap(0, j)) + slow_mul(tau(i, 1), swap(1, j));
      CHECK(p(i, j) == expect);
    }

  CHECK(vsl::to_string(p) == "[[1+s, s], [-s, 1-s]]");
}
