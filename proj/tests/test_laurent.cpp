#include <doctest.h>

#include "vsl/laurent.hpp"

using vsl::Int;
using vsl::LaurentMat;
using vsl::LaurentPoly;

TEST_CASE("laurent arithmetic and evaluation") {
  LaurentPoly one(1), t = LaurentPoly::t(), ti = LaurentPoly::t_inv();

  CHECK(t * ti == one);
  CHECK((one - ti) * (one + t) == t - ti);  // cross terms cancel the constants

  LaurentPoly p = LaurentPoly::monomial(2, 2) - LaurentPoly(3) + ti;
  CHECK(p.coeff(2) == 2);
  CHECK(p.coeff(0) == -3);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.eval_one() == 0);
  CHECK((one - ti).eval_one() == 0);
  CHECK((t * t + t).eval_one() == 2);

  CHECK((p - p).is_zero());
  CHECK(-(t - one) == one - t);
}

TEST_CASE("laurent inverses exist for unit monomials only") {
  LaurentPoly m = LaurentPoly::monomial(3, -1);
  CHECK(m.inverse() == LaurentPoly::monomial(-3, -1));
  CHECK(m * m.inverse() == LaurentPoly(1));
  CHECK(LaurentPoly::t().inverse() == LaurentPoly::t_inv());
  CHECK_THROWS_AS((LaurentPoly(1) + LaurentPoly::t()).inverse(), std::domain_error);
  CHECK_THROWS_AS(LaurentPoly::monomial(1, 2).inverse(), std::domain_error);
  CHECK_THROWS_AS(LaurentPoly().inverse(), std::domain_error);
}

TEST_CASE("laurent printing") {
  LaurentPoly one(1), t = LaurentPoly::t(), ti = LaurentPoly::t_inv();
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((one - ti).to_string() == "1-t^-1");
  CHECK(t.to_string() == "t");
  CHECK((t - ti).to_string() == "t-t^-1");
  CHECK((LaurentPoly::monomial(2, 2) + one).to_string() == "2t^2+1");
  CHECK((-t).to_string() == "-t");
}

TEST_CASE("laurent matrices multiply through Eigen") {
  LaurentPoly one(1), ti = LaurentPoly::t_inv();
  LaurentMat b(2, 2);
  b << one - ti, ti, one, LaurentPoly();
  LaurentMat sq = b * b;
  // hand expansion of the top-left entry: (1-t^-1)^2 + t^-1
  LaurentPoly expect = (one - ti) * (one - ti) + ti;
  CHECK(sq(0, 0) == expect);
  CHECK(sq(1, 1) == ti);
  // row sums stay 1 under products of row-sum-1 matrices
  CHECK(sq(0, 0) + sq(0, 1) == one);
  CHECK(sq(1, 0) + sq(1, 1) == one);
}
