#include <random>

#include "doctest.h"
#include "vsl/linking.hpp"

using namespace vsl;

namespace {

DualMat dual_identity(int n) {
  DualMat m(n, n);
  m.setConstant(Dual(0));
  for (int i = 0; i < n; ++i) m(i, i) = Dual(1);
  return m;
}

bool dual_equal(const DualMat& a, const DualMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

StringLinkDiagram diagram_of(const std::string& text) {
  return from_braid_word(parse_virtual_word(text));
}

VirtualBraidWord random_word(std::mt19937_64& rng, int n, int len) {
  VirtualBraidWord w;
  w.n = n;
  for (int k = 0; k < len; ++k) {
    int kind = static_cast<int>(rng() % 3);
    int index = 1 + static_cast<int>(rng() % (n - 1));
    w.letters.push_back({kind == 0   ? LetterKind::SigmaPos
                         : kind == 1 ? LetterKind::SigmaNeg
                                     : LetterKind::Tau,
                         index});
  }
  return w;
}

}  // namespace

TEST_CASE("lk sums writhe signs over inter-strand real crossings") {
  CHECK(lk(diagram_of("s1")) == 1);
  CHECK(lk(diagram_of("S1")) == -1);
  CHECK(lk(diagram_of("t1")) == 0);
  CHECK(lk(diagram_of("s1 S1")) == 0);
  CHECK(lk(diagram_of("s1 s1")) == 2);
  CHECK(lk(diagram_of("s1 t1 s1")) == 2);
  CHECK(lk(diagram_of("n=2")) == 0);

  // Kinks are self-crossings, so they never contribute.
  auto kinked = insert_kink(diagram_of("s1"), 0, 0, CrossingKind::RealNegative, true);
  CHECK(lk(kinked) == 1);

  CHECK_THROWS_AS(lk(diagram_of("n=3 s1")), std::invalid_argument);
  CHECK_THROWS_AS(lk(diagram_of("n=1")), std::invalid_argument);
}

TEST_CASE("lk_v is the parity of inter-strand virtual crossings") {
  CHECK(lk_v(diagram_of("t1")) == 1);
  CHECK(lk_v(diagram_of("t1 t1")) == 0);
  CHECK(lk_v(diagram_of("t1 t1 t1")) == 1);
  CHECK(lk_v(diagram_of("s1 s1")) == 0);

  // A virtual kink is a self-crossing and leaves the parity alone.
  auto kinked = insert_kink(diagram_of("t1"), 1, 1, CrossingKind::Virtual, false);
  CHECK(lk_v(kinked) == 1);

  CHECK_THROWS_AS(lk_v(diagram_of("n=3 t1")), std::invalid_argument);
  CHECK_THROWS_AS(lk_v(diagram_of("n=1")), std::invalid_argument);
}

TEST_CASE("lk and lk_v are blind where the matrix invariant is not") {
  auto l2 = diagram_of("t1");
  auto l4 = diagram_of("s1 t1 s1");
  CHECK(lk_v(l2) == 1);
  CHECK(lk_v(l4) == 1);
  CHECK_FALSE(dual_equal(matrix_invariant(l2), matrix_invariant(l4)));

  // The matrix invariant ignores real-crossing signs entirely, so the
  // sign-flipped variant shares M with l4 while matching l2 on lk as well.
  auto l4_flipped = diagram_of("s1 t1 S1");
  CHECK(dual_equal(matrix_invariant(l4_flipped), matrix_invariant(l4)));
  CHECK(lk(l4_flipped) == lk(l2));
  CHECK(lk_v(l4_flipped) == lk_v(l2));
}

TEST_CASE("a_i reads the maximal eps magnitude off a row") {
  CHECK(a_i(dual_identity(1), 0) == 0);
  CHECK(a_i(dual_identity(4), 2) == 0);

  // Rows of the published example matrices.
  auto m3 = matrix_invariant(diagram_of("t1 s1 t1"));
  CHECK(a_i(m3, 0) == 2);
  CHECK(a_i(m3, 1) == 2);
  auto m2 = matrix_invariant(diagram_of("t1"));
  CHECK(a_i(m2, 0) == 1);
  CHECK(a_i(m2, 1) == 1);

  CHECK_THROWS_AS(a_i(dual_identity(2), 2), std::out_of_range);
  CHECK_THROWS_AS(a_i(dual_identity(2), -1), std::out_of_range);
}

TEST_CASE("a_i rejects matrices without the invariant's unit structure") {
  DualMat empty(0, 0);
  CHECK_THROWS_AS(a_i(empty, 0), std::invalid_argument);

  DualMat rect(2, 3);
  rect.setConstant(Dual(0));
  CHECK_THROWS_AS(a_i(rect, 0), std::invalid_argument);

  auto doubled = dual_identity(2);
  doubled(0, 0) = Dual(2);
  CHECK_THROWS_AS(a_i(doubled, 0), std::invalid_argument);

  auto negative = dual_identity(2);
  negative(0, 1) = Dual(-1, 3);
  CHECK_THROWS_AS(a_i(negative, 0), std::invalid_argument);

  auto two_in_row = dual_identity(2);
  two_in_row(0, 1) = Dual(1);
  CHECK_THROWS_AS(a_i(two_in_row, 0), std::invalid_argument);

  DualMat repeated_column(2, 2);
  repeated_column.setConstant(Dual(0));
  repeated_column(0, 0) = Dual(1);
  repeated_column(1, 0) = Dual(1);
  CHECK_THROWS_AS(a_i(repeated_column, 0), std::invalid_argument);

  // Eps parts are unconstrained: a valid structure with rich eps content.
  DualMat rich = dual_identity(2);
  rich(0, 0) = Dual(1, -7);
  rich(0, 1) = Dual(0, 4);
  CHECK(a_i(rich, 0) == 7);
  CHECK(a_i(rich, 1) == 0);
}

TEST_CASE("virtual_between_count counts virtual crossings touching a strand once") {
  CHECK(virtual_between_count(diagram_of("n=2"), 0) == 0);
  CHECK(virtual_between_count(diagram_of("t1"), 0) == 1);
  CHECK(virtual_between_count(diagram_of("t1"), 1) == 1);
  CHECK(virtual_between_count(diagram_of("s1 s1"), 0) == 0);

  auto d3 = diagram_of("n=3 t1");
  CHECK(virtual_between_count(d3, 0) == 1);
  CHECK(virtual_between_count(d3, 1) == 1);
  CHECK(virtual_between_count(d3, 2) == 0);

  // A virtual kink has both passages on one strand and is excluded.
  auto kinked = insert_kink(diagram_of("t1"), 0, 0, CrossingKind::Virtual, true);
  CHECK(virtual_between_count(kinked, 0) == 1);
  CHECK(virtual_between_count(kinked, 1) == 1);

  CHECK_THROWS_AS(virtual_between_count(diagram_of("t1"), 2), std::out_of_range);
  CHECK_THROWS_AS(virtual_between_count(diagram_of("t1"), -1), std::out_of_range);
}

TEST_CASE("a_i never exceeds the diagram's virtual-between count") {
  std::mt19937_64 rng(6021023);
  const CrossingKind kink_kinds[] = {CrossingKind::RealPositive,
                                     CrossingKind::RealNegative,
                                     CrossingKind::Virtual};
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto d = from_braid_word(random_word(rng, n, static_cast<int>(rng() % 13)));
    if (trial % 3 == 0) {
      int strand = static_cast<int>(rng() % static_cast<unsigned>(n));
      int pos = static_cast<int>(rng() % (d.strands[strand].size() + 1));
      d = insert_kink(d, strand, pos, kink_kinds[rng() % 3], rng() % 2 == 0);
    }
    auto m = matrix_invariant(d);
    for (int i = 0; i < n; ++i) {
      CHECK(a_i(m, i) <= virtual_between_count(d, i));
    }
  }
}

TEST_CASE("lk and lk_v survive rewrites and kinks") {
  std::mt19937_64 rng(481516);
  for (int trial = 0; trial < 60; ++trial) {
    auto w = random_word(rng, 2, 1 + static_cast<int>(rng() % 9));
    auto d = from_braid_word(w);
    Int real_link = lk(d);
    int virtual_link = lk_v(d);

    auto rewritten = random_equivalent(w, 25, static_cast<unsigned>(rng()), nullptr);
    auto rd = from_braid_word(rewritten);
    CHECK(lk(rd) == real_link);
    CHECK(lk_v(rd) == virtual_link);

    const CrossingKind kink_kinds[] = {CrossingKind::RealPositive,
                                       CrossingKind::RealNegative,
                                       CrossingKind::Virtual};
    int strand = static_cast<int>(rng() % 2);
    int pos = static_cast<int>(rng() % (d.strands[strand].size() + 1));
    auto kinked = insert_kink(d, strand, pos, kink_kinds[rng() % 3], rng() % 2 == 0);
    CHECK(lk(kinked) == real_link);
    CHECK(lk_v(kinked) == virtual_link);
  }
}

TEST_CASE("linking_report bundles the per-diagram data") {
  auto report = linking_report(diagram_of("t1 s1 t1"));
  REQUIRE(report.lk.has_value());
  REQUIRE(report.lk_v.has_value());
  CHECK(*report.lk == 1);
  CHECK(*report.lk_v == 0);
  CHECK(report.a == std::vector<Int>{2, 2});
  CHECK(report.virtual_between == std::vector<int>{2, 2});
  CHECK(to_string(report) ==
        "lk = 1\nlk_v = 0\na = [2, 2]\nvirtual_between = [2, 2]");

  auto wide = linking_report(diagram_of("n=3 t1 t2"));
  CHECK_FALSE(wide.lk.has_value());
  CHECK_FALSE(wide.lk_v.has_value());
  REQUIRE(wide.a.size() == 3);
  REQUIRE(wide.virtual_between.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(wide.a[i] <= Int(wide.virtual_between[i]));
  }

  auto lonely = linking_report(diagram_of("n=1"));
  CHECK(to_string(lonely) ==
        "lk = n/a\nlk_v = n/a\na = [0]\nvirtual_between = [0]");
}
