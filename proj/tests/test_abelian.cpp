#include <doctest.h>

#include "vsl/abelian.hpp"

using vsl::FgAbelianGroup;
using vsl::GroupRingElem;
using vsl::Int;

TEST_CASE("group element arithmetic reduces torsion coordinates") {
  FgAbelianGroup g{1, {Int(6)}};  // Z x Z/6
  CHECK(g.dim() == 2);
  CHECK(g.reduce({Int(5), Int(7)}) == std::vector<Int>{Int(5), Int(1)});
  CHECK(g.reduce({Int(-2), Int(-1)}) == std::vector<Int>{Int(-2), Int(5)});
  CHECK(g.add({Int(1), Int(4)}, {Int(2), Int(5)}) == std::vector<Int>{Int(3), Int(3)});
  CHECK(g.negate({Int(3), Int(4)}) == std::vector<Int>{Int(-3), Int(2)});
  CHECK(g.scale(Int(4), {Int(1), Int(2)}) == std::vector<Int>{Int(4), Int(2)});
  CHECK(g.zero() == std::vector<Int>{Int(0), Int(0)});
  CHECK_THROWS_AS(g.reduce({Int(1)}), std::invalid_argument);
}

TEST_CASE("two-torsion detection looks at the moduli") {
  CHECK(FgAbelianGroup::cyclic(6).has_two_torsion());
  CHECK(FgAbelianGroup::cyclic(2).has_two_torsion());
  CHECK_FALSE(FgAbelianGroup::cyclic(9).has_two_torsion());
  CHECK_FALSE((FgAbelianGroup{0, {Int(3), Int(5)}}.has_two_torsion()));
  CHECK_FALSE(FgAbelianGroup::integers().has_two_torsion());
  CHECK_FALSE(FgAbelianGroup::trivial().has_two_torsion());
  CHECK_THROWS_AS(FgAbelianGroup::cyclic(1), std::invalid_argument);
}

TEST_CASE("group and element formatting") {
  CHECK(FgAbelianGroup::trivial().to_string() == "0");
  CHECK(FgAbelianGroup::integers().to_string() == "Z");
  CHECK((FgAbelianGroup{2, {}}.to_string() == "Z^2"));
  CHECK(FgAbelianGroup::cyclic(4).to_string() == "Z/4");
  CHECK((FgAbelianGroup{1, {Int(2), Int(6)}}.to_string() == "Z x Z/2 x Z/6"));
  CHECK(FgAbelianGroup::integers().element_to_string({Int(-3)}) == "[-3]");
  CHECK((FgAbelianGroup{1, {Int(2)}}.element_to_string({Int(1), Int(0)}) == "[1,0]"));
  CHECK(FgAbelianGroup::cyclic(5).from_scalar(7) == std::vector<Int>{Int(2)});
  CHECK_THROWS_AS((FgAbelianGroup{1, {Int(2)}}.from_scalar(1)), std::invalid_argument);
}

TEST_CASE("group ring sums merge, cancel and print canonically") {
  GroupRingElem x(FgAbelianGroup::integers());
  x.add({Int(0)}, 1);
  x.add({Int(1)}, 1);
  x.add({Int(-1)}, 1);
  x.add({Int(0)}, 1);
  CHECK(x.to_string() == "1*[-1] + 2*[0] + 1*[1]");

  GroupRingElem y(FgAbelianGroup::integers());
  y.add({Int(1)}, -1);
  GroupRingElem sum = x + y;
  CHECK(sum.to_string() == "1*[-1] + 2*[0]");
  CHECK((x - x).is_zero());
  CHECK((x - x).to_string() == "0");

  // torsion representatives merge after reduction
  GroupRingElem z(FgAbelianGroup::cyclic(4));
  z.add({Int(5)}, 1);
  z.add({Int(1)}, 2);
  CHECK(z.to_string() == "3*[1]");

  GroupRingElem other(FgAbelianGroup::cyclic(3));
  other.add({Int(0)}, 1);
  CHECK_THROWS_AS(z += other, std::invalid_argument);
}
