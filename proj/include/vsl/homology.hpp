#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsl/abelian.hpp"
#include "vsl/numeric.hpp"
#include "vsl/snf.hpp"
#include "vsl/vfb.hpp"

namespace vsl {

/**
 * Coefficient group for (co)homology and cochains: the integers when
 * modulus == 0, the cyclic group Z/modulus otherwise.
 */
struct Coefficients {
  Int modulus = 0;

  static Coefficients integers() { return {}; }
  static Coefficients modular(Int m) {
    if (m < 2) {
      throw std::invalid_argument("modular coefficients need a modulus >= 2, got " + int_str(m));
    }
    Coefficients c;
    c.modulus = std::move(m);
    return c;
  }

  bool is_integers() const { return modulus == 0; }
  bool has_two_torsion() const { return !is_integers() && modulus % 2 == 0; }
  bool is_zero(const Int& v) const { return is_integers() ? v == 0 : v % modulus == 0; }
  Int reduce(const Int& v) const { return is_integers() ? v : mod_floor(v, modulus); }

  bool operator==(const Coefficients&) const = default;
};

inline std::string to_string(const Coefficients& c) {
  return c.is_integers() ? "Z" : "Z" + int_str(c.modulus);
}

/** Parses "Z" or "Z<m>" (e.g. "Z3"); anything else throws. */
inline Coefficients parse_coefficients(const std::string& text) {
  if (text == "Z") return Coefficients::integers();
  if (text.size() > 1 && text[0] == 'Z' &&
      text.find_first_not_of("0123456789", 1) == std::string::npos) {
    return Coefficients::modular(Int(text.substr(1)));
  }
  throw std::invalid_argument("coefficient group must be Z or Z<m>, got \"" + text + "\"");
}

/** Formal integer combination of carrier tuples, all of one degree. */
using Chain = std::map<std::vector<int>, Int>;

inline void add_term(Chain& chain, std::vector<int> tuple, Int mult) {
  if (mult == 0) return;
  auto it = chain.find(tuple);
  if (it == chain.end()) {
    chain.emplace(std::move(tuple), std::move(mult));
  } else {
    it->second += mult;
    if (it->second == 0) chain.erase(it);
  }
}

namespace detail {

inline void require_tuple(const FiniteVfb& S, int n, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != n) {
    throw std::invalid_argument("tuple has " + std::to_string(t.size()) +
                                " entries, expected " + std::to_string(n));
  }
  for (int v : t) {
    if (v < 0 || v >= S.order) {
      throw std::invalid_argument("tuple entry " + std::to_string(v) +
                                  " is outside the carrier of order " + std::to_string(S.order));
    }
  }
}

}  // namespace detail

/**
 * Boundary of one basis tuple in the main complex:
 * bd_n(a_1..a_n) = sum_i (-1)^i [ (a_1*a_i, .., a_{i-1}*a_i, a_{i+1}, .., a_n)
 *                               - (a_1, .., a_{i-1}, a_{i+1}.a_i, .., a_n.a_i) ],
 * zero for n <= 1.
 */
inline Chain boundary_vf(const FiniteVfb& S, int n, const std::vector<int>& t) {
  detail::require_table_shape(S);
  detail::require_tuple(S, n, t);
  Chain out;
  if (n <= 1) return out;
  for (int k = 0; k < n; ++k) {
    Int sign = k % 2 == 0 ? -1 : 1;  // the paper's index i = k + 1
    std::vector<int> starred, circled;
    starred.reserve(static_cast<std::size_t>(n - 1));
    circled.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      starred.push_back(j < k ? S.star[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])]
                                      [static_cast<std::size_t>(t[static_cast<std::size_t>(k)])]
                              : t[static_cast<std::size_t>(j)]);
      circled.push_back(j < k ? t[static_cast<std::size_t>(j)]
                              : S.circ[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])]
                                      [static_cast<std::size_t>(t[static_cast<std::size_t>(k)])]);
    }
    add_term(out, std::move(starred), sign);
    add_term(out, std::move(circled), -sign);
  }
  return out;
}

/**
 * Boundary of one basis tuple in the second complex:
 * d_n(a_1..a_n) = sum_{i<n} (-1)^i [ (a_1, .., ^a_i, .., a_n)
 *                                  - (a_1, .., ^a_i, .., a_{n-1}, a_n.a_i) ],
 * zero for n <= 1.
 */
inline Chain boundary_sf(const FiniteVfb& S, int n, const std::vector<int>& t) {
  detail::require_table_shape(S);
  detail::require_tuple(S, n, t);
  Chain out;
  if (n <= 1) return out;
  for (int k = 0; k + 1 < n; ++k) {
    Int sign = k % 2 == 0 ? -1 : 1;
    std::vector<int> dropped;
    dropped.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j)
      if (j != k) dropped.push_back(t[static_cast<std::size_t>(j)]);
    std::vector<int> twisted = dropped;
    twisted.back() = S.circ[static_cast<std::size_t>(t[static_cast<std::size_t>(n - 1)])]
                           [static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
    add_term(out, std::move(dropped), sign);
    add_term(out, std::move(twisted), -sign);
  }
  return out;
}

/** Guard: no tuple basis may exceed this many elements. */
inline constexpr long long kTupleBasisGuard = 10000;

/**
 * The lexicographic tuple basis of the degree-n chain group: tuples over the
 * carrier, first entry most significant.  Degree 0 has size 0 (C_0 = 0).
 * Construction refuses bases larger than the guard.
 */
class TupleBasis {
 public:
  TupleBasis(int order, int degree) : m_(order), degree_(degree) {
    if (order < 1) throw std::invalid_argument("tuple basis needs a carrier of order >= 1");
    if (degree < 0) throw std::invalid_argument("tuple basis needs degree >= 0");
    if (degree == 0) {
      size_ = 0;
      return;
    }
    size_ = 1;
    for (int i = 0; i < degree; ++i) {
      size_ *= m_;
      if (size_ > kTupleBasisGuard) {
        throw std::invalid_argument("degree-" + std::to_string(degree) +
                                    " basis over a carrier of order " + std::to_string(order) +
                                    " exceeds " + std::to_string(kTupleBasisGuard) + " tuples");
      }
    }
  }

  long long size() const { return size_; }

  long long index_of(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != degree_ || degree_ == 0) {
      throw std::invalid_argument("tuple of length " + std::to_string(t.size()) +
                                  " has no index in the degree-" + std::to_string(degree_) +
                                  " basis");
    }
    long long idx = 0;
    for (int v : t) {
      if (v < 0 || v >= m_) throw std::invalid_argument("tuple entry outside the carrier");
      idx = idx * m_ + v;
    }
    return idx;
  }

  std::vector<int> tuple_at(long long idx) const {
    if (idx < 0 || idx >= size_) {
      throw std::out_of_range("tuple index " + std::to_string(idx) +
                              " outside a basis of size " + std::to_string(size_));
    }
    std::vector<int> t(static_cast<std::size_t>(degree_));
    for (int i = degree_ - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(idx % m_);
      idx /= m_;
    }
    return t;
  }

 private:
  int m_;
  int degree_;
  long long size_;
};

/**
 * Generators of the degenerate subgroup in degree n: for every tuple t (in
 * basis order) and position i, the chain t + (t with the pair (t_i, t_{i+1})
 * replaced by (t_{i+1}.t_i, t_i*t_{i+1})).  Empty for n <= 1.
 */
inline std::vector<Chain> degenerate_generators(const FiniteVfb& S, int n) {
  detail::require_table_shape(S);
  std::vector<Chain> out;
  if (n <= 1) return out;
  TupleBasis basis(S.order, n);
  for (long long idx = 0; idx < basis.size(); ++idx) {
    std::vector<int> t = basis.tuple_at(idx);
    for (int i = 0; i + 1 < n; ++i) {
      Chain g;
      add_term(g, t, 1);
      std::vector<int> swapped = t;
      swapped[static_cast<std::size_t>(i)] =
          S.circ[static_cast<std::size_t>(t[static_cast<std::size_t>(i + 1)])]
                [static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      swapped[static_cast<std::size_t>(i + 1)] =
          S.star[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])]
                [static_cast<std::size_t>(t[static_cast<std::size_t>(i + 1)])];
      add_term(g, std::move(swapped), 1);
      out.push_back(std::move(g));
    }
  }
  return out;
}

namespace detail {

inline IntMat chain_columns(const std::vector<Chain>& chains, const TupleBasis& basis) {
  IntMat m = IntMat::Zero(basis.size(), static_cast<Eigen::Index>(chains.size()));
  for (std::size_t j = 0; j < chains.size(); ++j)
    for (const auto& [t, c] : chains[j])
      m(basis.index_of(t), static_cast<Eigen::Index>(j)) = c;
  return m;
}

}  // namespace detail

/** Matrix of bd_n in the tuple bases (rows: degree n-1, columns: degree n). */
inline IntMat boundary_matrix_vf(const FiniteVfb& S, int n) {
  detail::require_table_shape(S);
  if (n < 1) throw std::invalid_argument("boundary matrices exist for degree >= 1");
  TupleBasis rows(S.order, n - 1), cols(S.order, n);
  IntMat d = IntMat::Zero(rows.size(), cols.size());
  for (long long j = 0; j < cols.size(); ++j)
    for (const auto& [t, c] : boundary_vf(S, n, cols.tuple_at(j)))
      d(rows.index_of(t), j) = c;
  return d;
}

/** Matrix of d_n in the tuple bases (rows: degree n-1, columns: degree n). */
inline IntMat boundary_matrix_sf(const FiniteVfb& S, int n) {
  detail::require_table_shape(S);
  if (n < 1) throw std::invalid_argument("boundary matrices exist for degree >= 1");
  TupleBasis rows(S.order, n - 1), cols(S.order, n);
  IntMat d = IntMat::Zero(rows.size(), cols.size());
  for (long long j = 0; j < cols.size(); ++j)
    for (const auto& [t, c] : boundary_sf(S, n, cols.tuple_at(j)))
      d(rows.index_of(t), j) = c;
  return d;
}

/** Columns: the degenerate generators of degree n in the tuple basis. */
inline IntMat degenerate_matrix(const FiniteVfb& S, int n) {
  detail::require_table_shape(S);
  if (n < 0) throw std::invalid_argument("degenerate generators exist for degree >= 0");
  TupleBasis basis(S.order, n);
  if (n <= 1) return IntMat(basis.size(), 0);
  return detail::chain_columns(degenerate_generators(S, n), basis);
}

namespace detail {

inline IntMat hcat(const std::vector<IntMat>& parts) {
  Eigen::Index rows = 0, cols = 0;
  for (const IntMat& p : parts) {
    if (p.rows() > rows) rows = p.rows();
    cols += p.cols();
  }
  for (const IntMat& p : parts) {
    if (p.cols() > 0 && p.rows() != rows) {
      throw std::invalid_argument("cannot concatenate blocks with mismatched row counts");
    }
  }
  IntMat out = IntMat::Zero(rows, cols);
  Eigen::Index at = 0;
  for (const IntMat& p : parts) {
    if (p.cols() > 0) out.block(0, at, rows, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

inline IntMat vstack(const IntMat& top, const IntMat& bottom) {
  if (top.rows() > 0 && bottom.rows() > 0 && top.cols() != bottom.cols()) {
    throw std::invalid_argument("cannot stack blocks with mismatched column counts");
  }
  Eigen::Index cols = top.rows() > 0 ? top.cols() : bottom.cols();
  IntMat out = IntMat::Zero(top.rows() + bottom.rows(), cols);
  if (top.rows() > 0) out.topRows(top.rows()) = top;
  if (bottom.rows() > 0) out.bottomRows(bottom.rows()) = bottom;
  return out;
}

inline IntMat scaled_identity(Eigen::Index n, const Int& m) {
  IntMat out = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = m;
  return out;
}

}  // namespace detail

/**
 * Homology of the (quotient) complex at one degree, from its matrices:
 * boundary_out = the boundary leaving degree n, boundary_in = the boundary
 * arriving from degree n+1, deg_here / deg_below = degenerate generator
 * columns in degrees n and n-1 (pass 0-column matrices for the full complex).
 * Cycles are lattice vectors whose boundary lies in the degenerate span
 * (plus m-multiples for modular coefficients); they are quotiented by
 * boundaries, degenerate generators, and m-multiples.
 */
inline FgAbelianGroup relative_homology(const IntMat& boundary_out, const IntMat& boundary_in,
                                        const IntMat& deg_here, const IntMat& deg_below,
                                        const Coefficients& A) {
  std::vector<IntMat> cycle_parts{boundary_out, deg_below};
  std::vector<IntMat> relation_parts{boundary_in, deg_here};
  if (!A.is_integers()) {
    cycle_parts.push_back(detail::scaled_identity(boundary_out.rows(), A.modulus));
    relation_parts.push_back(detail::scaled_identity(boundary_out.cols(), A.modulus));
  }
  IntMat cycles =
      IntMat(integer_kernel(detail::hcat(cycle_parts)).topRows(boundary_out.cols()));
  return quotient_group(cycles, detail::hcat(relation_parts));
}

/**
 * Cohomology at one degree from the same matrices.  Cochains vanish on the
 * degenerate generators; cocycles are additionally killed by the transposed
 * incoming boundary, and are quotiented by the transposed outgoing boundary
 * of the relative cochains one degree down (everything mod m for modular
 * coefficients, with m-multiples adjoined on both sides).
 */
inline FgAbelianGroup relative_cohomology(const IntMat& boundary_out, const IntMat& boundary_in,
                                          const IntMat& deg_here, const IntMat& deg_below,
                                          const Coefficients& A) {
  IntMat constraints = detail::vstack(IntMat(deg_here.transpose()), IntMat(boundary_in.transpose()));
  IntMat cocycles;
  if (A.is_integers()) {
    cocycles = integer_kernel(constraints);
  } else {
    cocycles = IntMat(
        integer_kernel(detail::hcat({constraints, detail::scaled_identity(constraints.rows(),
                                                                          A.modulus)}))
            .topRows(constraints.cols()));
  }
  IntMat below = IntMat(deg_below.transpose());
  IntMat relative_below;
  if (A.is_integers()) {
    relative_below = integer_kernel(below);
  } else {
    relative_below = IntMat(
        integer_kernel(detail::hcat({below, detail::scaled_identity(below.rows(), A.modulus)}))
            .topRows(below.cols()));
  }
  IntMat coboundaries = IntMat(boundary_out.transpose() * relative_below);
  if (!A.is_integers()) {
    coboundaries = detail::hcat(
        {coboundaries, detail::scaled_identity(boundary_out.cols(), A.modulus)});
  }
  return quotient_group(cocycles, coboundaries);
}

/** H_n of the quotient complex (main boundary, degenerate part divided out). */
inline FgAbelianGroup homology_group_vf(const FiniteVfb& S, int n, const Coefficients& A) {
  require_valid_vfb(S);
  if (n <= 0) return FgAbelianGroup::trivial();
  return relative_homology(boundary_matrix_vf(S, n), boundary_matrix_vf(S, n + 1),
                           degenerate_matrix(S, n), degenerate_matrix(S, n - 1), A);
}

/** H_n of the full complex under the second boundary map. */
inline FgAbelianGroup homology_group_sf(const FiniteVfb& S, int n, const Coefficients& A) {
  require_valid_vfb(S);
  if (n <= 0) return FgAbelianGroup::trivial();
  IntMat out = boundary_matrix_sf(S, n);
  return relative_homology(out, boundary_matrix_sf(S, n + 1), IntMat(out.cols(), 0),
                           IntMat(out.rows(), 0), A);
}

/** H^n dual to the quotient complex. */
inline FgAbelianGroup cohomology_group_vf(const FiniteVfb& S, int n, const Coefficients& A) {
  require_valid_vfb(S);
  if (n <= 0) return FgAbelianGroup::trivial();
  return relative_cohomology(boundary_matrix_vf(S, n), boundary_matrix_vf(S, n + 1),
                             degenerate_matrix(S, n), degenerate_matrix(S, n - 1), A);
}

/** H^n dual to the full second complex. */
inline FgAbelianGroup cohomology_group_sf(const FiniteVfb& S, int n, const Coefficients& A) {
  require_valid_vfb(S);
  if (n <= 0) return FgAbelianGroup::trivial();
  IntMat out = boundary_matrix_sf(S, n);
  return relative_cohomology(out, boundary_matrix_sf(S, n + 1), IntMat(out.cols(), 0),
                             IntMat(out.rows(), 0), A);
}

/** Groups in degrees 0..n_max (index = degree; degree 0 is always trivial). */
inline std::vector<FgAbelianGroup> homology_vf(const FiniteVfb& S, int n_max,
                                               const Coefficients& A) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<FgAbelianGroup> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(homology_group_vf(S, n, A));
  return out;
}

inline std::vector<FgAbelianGroup> homology_sf(const FiniteVfb& S, int n_max,
                                               const Coefficients& A) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<FgAbelianGroup> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(homology_group_sf(S, n, A));
  return out;
}

inline std::vector<FgAbelianGroup> cohomology_vf(const FiniteVfb& S, int n_max,
                                                 const Coefficients& A) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<FgAbelianGroup> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(cohomology_group_vf(S, n, A));
  return out;
}

inline std::vector<FgAbelianGroup> cohomology_sf(const FiniteVfb& S, int n_max,
                                                 const Coefficients& A) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<FgAbelianGroup> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(cohomology_group_sf(S, n, A));
  return out;
}

/** 2-cochain phi: S x S -> A as an order x order table, phi(a, b) = table[a][b]. */
struct Cochain2 {
  Coefficients coeff;
  std::vector<std::vector<Int>> table;

  bool operator==(const Cochain2&) const = default;
};

namespace detail {

inline void require_cochain_shape(const FiniteVfb& S, const Cochain2& phi) {
  if (static_cast<int>(phi.table.size()) != S.order) {
    throw std::invalid_argument("cochain table has " + std::to_string(phi.table.size()) +
                                " rows, carrier has order " + std::to_string(S.order));
  }
  for (const auto& row : phi.table) {
    if (static_cast<int>(row.size()) != S.order) {
      throw std::invalid_argument("cochain table is not square");
    }
  }
}

inline void require_no_two_torsion(const Coefficients& A) {
  if (A.has_two_torsion()) {
    throw std::invalid_argument("state-sum cocycles need coefficients without 2-torsion, got " +
                                to_string(A));
  }
}

}  // namespace detail

/** A failed state-sum cocycle condition (1, 2 or 3) with its witness tuple. */
struct CocycleViolation {
  int condition = 0;
  std::vector<int> witness;

  bool operator==(const CocycleViolation&) const = default;
};

inline std::string to_string(const CocycleViolation& v) {
  std::ostringstream out;
  out << "condition (" << v.condition << ") fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i != 0) out << ", ";
    out << v.witness[i];
  }
  out << ")";
  return out.str();
}

/**
 * Checks the three state-sum cocycle conditions
 *   (1) phi(a,b) + phi(b.a, a*b) = 0,
 *   (2) -phi(b,c) + phi(b.a, c.a) + phi(a*b, c) - phi(a, c.b)
 *       - phi(a*c, b*c) + phi(a,b) = 0,
 *   (3) -phi(b,c) + phi(b, c.a) + phi(a,c) - phi(a, c.b) = 0,
 * in A, reporting the first witness per condition.  Coefficients with
 * 2-torsion are rejected up front.
 */
inline std::vector<CocycleViolation> is_state_sum_cocycle(const FiniteVfb& S,
                                                          const Cochain2& phi) {
  detail::require_table_shape(S);
  detail::require_cochain_shape(S, phi);
  detail::require_no_two_torsion(phi.coeff);
  const int m = S.order;
  auto p = [&](int a, int b) -> const Int& {
    return phi.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  auto star = [&](int b, int a) {
    return S.star[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  auto circ = [&](int b, int a) {
    return S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  std::vector<CocycleViolation> out;
  for (int a = 0; a < m; ++a) {
    bool done = false;
    for (int b = 0; b < m; ++b) {
      if (!phi.coeff.is_zero(p(a, b) + p(circ(b, a), star(a, b)))) {
        out.push_back({1, {a, b}});
        done = true;
        break;
      }
    }
    if (done) break;
  }
  bool second_done = false, third_done = false;
  for (int a = 0; a < m && !(second_done && third_done); ++a)
    for (int b = 0; b < m && !(second_done && third_done); ++b)
      for (int c = 0; c < m && !(second_done && third_done); ++c) {
        if (!second_done &&
            !phi.coeff.is_zero(-p(b, c) + p(circ(b, a), circ(c, a)) + p(star(a, b), c) -
                               p(a, circ(c, b)) - p(star(a, c), star(b, c)) + p(a, b))) {
          out.push_back({2, {a, b, c}});
          second_done = true;
        }
        if (!third_done &&
            !phi.coeff.is_zero(-p(b, c) + p(b, circ(c, a)) + p(a, c) - p(a, circ(c, b)))) {
          out.push_back({3, {a, b, c}});
          third_done = true;
        }
      }
  return out;
}

/**
 * Coboundary of a 1-cochain eta (one value per carrier element):
 * (d eta)(a, b) = -eta(b) + eta(b.a) + eta(a*b) - eta(a), reduced in A.
 */
inline Cochain2 coboundary(const FiniteVfb& S, const std::vector<Int>& eta,
                           const Coefficients& A) {
  detail::require_table_shape(S);
  if (static_cast<int>(eta.size()) != S.order) {
    throw std::invalid_argument("1-cochain has " + std::to_string(eta.size()) +
                                " values, carrier has order " + std::to_string(S.order));
  }
  Cochain2 phi;
  phi.coeff = A;
  phi.table.assign(static_cast<std::size_t>(S.order),
                   std::vector<Int>(static_cast<std::size_t>(S.order)));
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < S.order; ++b) {
      int ba = S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      int ab = S.star[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      phi.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          A.reduce(-eta[static_cast<std::size_t>(b)] + eta[static_cast<std::size_t>(ba)] +
                   eta[static_cast<std::size_t>(ab)] - eta[static_cast<std::size_t>(a)]);
    }
  return phi;
}

/**
 * Generating set of the module of state-sum cocycles over A (Z, or Z/m with
 * m odd), by kernel computation on the stacked linear system of the three
 * conditions.  Every returned cochain passes is_state_sum_cocycle.
 */
inline std::vector<Cochain2> enumerate_cocycles(const FiniteVfb& S, const Coefficients& A) {
  detail::require_table_shape(S);
  detail::require_no_two_torsion(A);
  const int m = S.order;
  const long long unknowns = static_cast<long long>(m) * m;
  const long long rows = unknowns + 2 * static_cast<long long>(m) * m * m;
  if (rows > 60000) {
    throw std::invalid_argument("cocycle system for a carrier of order " + std::to_string(m) +
                                " is too large (" + std::to_string(rows) + " equations)");
  }
  auto star = [&](int b, int a) {
    return S.star[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  auto circ = [&](int b, int a) {
    return S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  auto u = [m](int a, int b) { return static_cast<Eigen::Index>(a) * m + b; };
  IntMat eqs = IntMat::Zero(rows, unknowns);
  Eigen::Index r = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b, ++r) {
      eqs(r, u(a, b)) += 1;
      eqs(r, u(circ(b, a), star(a, b))) += 1;
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c, ++r) {
        eqs(r, u(b, c)) += -1;
        eqs(r, u(circ(b, a), circ(c, a))) += 1;
        eqs(r, u(star(a, b), c)) += 1;
        eqs(r, u(a, circ(c, b))) += -1;
        eqs(r, u(star(a, c), star(b, c))) += -1;
        eqs(r, u(a, b)) += 1;
      }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c, ++r) {
        eqs(r, u(b, c)) += -1;
        eqs(r, u(b, circ(c, a))) += 1;
        eqs(r, u(a, c)) += 1;
        eqs(r, u(a, circ(c, b))) += -1;
      }
  IntMat basis = A.is_integers() ? integer_kernel(eqs) : kernel_mod(eqs, A.modulus);
  std::vector<Cochain2> out;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    Cochain2 phi;
    phi.coeff = A;
    phi.table.assign(static_cast<std::size_t>(m), std::vector<Int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        phi.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            A.reduce(basis(u(a, b), j));
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace vsl
