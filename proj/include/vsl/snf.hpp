#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "vsl/abelian.hpp"
#include "vsl/numeric.hpp"

namespace vsl {

/**
 * Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
 * each diagonal entry non-negative and dividing the next.
 *
 * Classic pivot-shrinking elimination; every operation is an integer row or
 * column operation mirrored into u / v, so the factorization identity holds
 * exactly at all times.  u or v can be skipped when a caller only needs the
 * diagonal or one-sided data (they are left empty).
 */
struct SmithResult {
  IntMat u, d, v;
  Eigen::Index rank = 0;

  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    const Eigen::Index k = std::min(d.rows(), d.cols());
    out.reserve(k);
    for (Eigen::Index i = 0; i < k; ++i) out.push_back(d(i, i));
    return out;
  }
};

inline SmithResult smith_normal_form(const IntMat& m, bool need_u = true, bool need_v = true) {
  SmithResult res;
  res.d = m;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (need_u) res.u = IntMat::Identity(rows, rows);
  if (need_v) res.v = IntMat::Identity(cols, cols);
  IntMat& d = res.d;

  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    if (need_u) res.u.row(a).swap(res.u.row(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    if (need_v) res.v.col(a).swap(res.v.col(b));
  };
  auto add_row = [&](Eigen::Index dst, Eigen::Index src, const Int& q) {
    // row_dst += q * row_src
    for (Eigen::Index j = 0; j < cols; ++j) d(dst, j) += q * d(src, j);
    if (need_u)
      for (Eigen::Index j = 0; j < rows; ++j) res.u(dst, j) += q * res.u(src, j);
  };
  auto add_col = [&](Eigen::Index dst, Eigen::Index src, const Int& q) {
    // col_dst += q * col_src
    for (Eigen::Index i = 0; i < rows; ++i) d(i, dst) += q * d(i, src);
    if (need_v)
      for (Eigen::Index i = 0; i < cols; ++i) res.v(i, dst) += q * res.v(i, src);
  };
  auto negate_row = [&](Eigen::Index a) {
    for (Eigen::Index j = 0; j < cols; ++j) d(a, j) = -d(a, j);
    if (need_u)
      for (Eigen::Index j = 0; j < rows; ++j) res.u(a, j) = -res.u(a, j);
  };

  // Smallest nonzero entry (by absolute value) of the trailing submatrix.
  auto find_pivot = [&](Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) {
    bool found = false;
    Int best = 0;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        Int a = abs_int(d(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  };

  const Eigen::Index nmin = std::min(rows, cols);
  Eigen::Index t = 0;
  while (t < nmin) {
    Eigen::Index pi, pj;
    if (!find_pivot(t, pi, pj)) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      // Clear row t and column t against the pivot; any nonzero remainder
      // is strictly smaller than the pivot, so re-pivoting terminates.
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        if (q != 0) add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (q != 0) add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        Eigen::Index qi, qj;
        find_pivot(t, qi, qj);
        swap_rows(t, qi);
        swap_cols(t, qj);
        continue;
      }
      // Pivot must divide the whole trailing submatrix for the divisor
      // chain; folding an offending row into row t shrinks the pivot.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i)
        for (Eigen::Index j = t + 1; j < cols && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(t, i, Int(1));
            divides = false;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) negate_row(t);
    ++t;
  }
  res.rank = t;
  return res;
}

// Basis of the integer null space {x : a x = 0}, one column per basis vector.
inline IntMat integer_kernel(const IntMat& a) {
  SmithResult s = smith_normal_form(a, /*need_u=*/false, /*need_v=*/true);
  const Eigen::Index c = a.cols();
  IntMat k(c, c - s.rank);
  for (Eigen::Index j = s.rank; j < c; ++j) k.col(j - s.rank) = s.v.col(j);
  return k;
}

/**
 * Repeated exact solves a x = b over the integers against a fixed matrix,
 * sharing one Smith factorization.
 */
class IntSolver {
 public:
  explicit IntSolver(const IntMat& a) : rows_(a.rows()), cols_(a.cols()) {
    s_ = smith_normal_form(a, true, true);
  }

  std::optional<IntVec> solve(const IntVec& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("right-hand side has wrong length");
    IntVec c = s_.u * b;
    IntVec y = IntVec::Zero(cols_);
    const Eigen::Index nmin = std::min(rows_, cols_);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (i < nmin && s_.d(i, i) != 0) {
        if (c(i) % s_.d(i, i) != 0) return std::nullopt;
        y(i) = c(i) / s_.d(i, i);
      } else if (c(i) != 0) {
        return std::nullopt;
      }
    }
    return IntVec(s_.v * y);
  }

 private:
  Eigen::Index rows_, cols_;
  SmithResult s_;
};

// Columnwise solve a x = b; nullopt if any column is unsolvable.
inline std::optional<IntMat> solve_integer(const IntMat& a, const IntMat& b) {
  IntSolver solver(a);
  IntMat x(a.cols(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    auto col = solver.solve(b.col(j));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

// Fraction-free determinant (independent of the Smith route; used to certify
// unimodularity of transforms).
inline Int det_bareiss(IntMat a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant needs a square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/**
 * Generators of the solution module {x mod m : a x = 0 (mod m)}.
 * From u a v = d, the substitution x = v y decouples the congruences to
 * d_i y_i = 0 (mod m), whose solutions are generated by (m / gcd(d_i, m)) e_i.
 * Columns that would be 0 mod m are dropped.
 */
inline IntMat kernel_mod(const IntMat& a, const Int& m) {
  if (m < 2) throw std::invalid_argument("kernel_mod needs a modulus >= 2");
  SmithResult s = smith_normal_form(a, /*need_u=*/false, /*need_v=*/true);
  const Eigen::Index c = a.cols();
  const Eigen::Index nmin = std::min(a.rows(), c);
  std::vector<Eigen::Index> keep;
  std::vector<Int> scale;
  for (Eigen::Index i = 0; i < c; ++i) {
    Int di = i < nmin ? s.d(i, i) : Int(0);
    Int f = m / gcd_int(di, m);  // gcd(0, m) = m, so unconstrained coordinates get f = 1
    if (f == m) continue;        // d_i coprime to m: the generator is 0 mod m
    keep.push_back(i);
    scale.push_back(f);
  }
  IntMat k(c, static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) {
    Int f = scale[j];
    for (Eigen::Index i = 0; i < c; ++i) k(i, static_cast<Eigen::Index>(j)) = s.v(i, keep[j]) * f;
  }
  return k;
}

/**
 * The abelian group lattice(gens) / lattice(rels), both given by generating
 * columns; relation columns must lie in the generated lattice.  Expressing
 * the relations in the generators and adjoining the generator syzygies gives
 * a presentation matrix whose Smith diagonal reads off the group.
 */
inline FgAbelianGroup quotient_group(const IntMat& gens, const IntMat& rels) {
  const Eigen::Index k = gens.cols();
  if (k == 0) return FgAbelianGroup::trivial();
  IntMat relcoords;
  if (rels.cols() > 0) {
    auto c = solve_integer(gens, rels);
    if (!c) throw std::invalid_argument("relation lattice is not inside the generated lattice");
    relcoords = *c;
  } else {
    relcoords = IntMat(k, 0);
  }
  IntMat syz = integer_kernel(gens);
  IntMat pres(k, relcoords.cols() + syz.cols());
  pres.leftCols(relcoords.cols()) = relcoords;
  pres.rightCols(syz.cols()) = syz;
  SmithResult s = smith_normal_form(pres, false, false);
  FgAbelianGroup g;
  g.free_rank = static_cast<int>(k - s.rank);
  for (Eigen::Index i = 0; i < s.rank; ++i)
    if (s.d(i, i) >= 2) g.torsion.push_back(s.d(i, i));
  return g;
}

}  // namespace vsl
