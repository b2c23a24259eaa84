#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsl/diagram.hpp"
#include "vsl/dual.hpp"
#include "vsl/invariant.hpp"

namespace vsl {

namespace detail {

inline bool joins_two_strands(const Crossing& c) {
  return c.slots[0].strand != c.slots[1].strand;
}

}  // namespace detail

/**
 * Real linking number of a 2-strand string link diagram: the sum of writhe
 * signs (+1 for a positive crossing, -1 for a negative one) over the real
 * crossings joining the two strands.  Self-crossings do not contribute.
 * Throws std::invalid_argument unless the diagram has exactly two strands.
 */
inline Int lk(const StringLinkDiagram& d) {
  require_valid(d);
  if (d.n != 2) {
    throw std::invalid_argument("lk requires a 2-strand diagram, got n = " +
                                std::to_string(d.n));
  }
  Int total = 0;
  for (const Crossing& c : d.crossings) {
    if (!detail::joins_two_strands(c)) continue;
    if (c.kind == CrossingKind::RealPositive) total += 1;
    if (c.kind == CrossingKind::RealNegative) total -= 1;
  }
  return total;
}

/**
 * Virtual linking number of a 2-strand string link diagram: the parity of
 * the virtual crossings joining the two strands, as an element of Z_2
 * (returned as 0 or 1).  Throws std::invalid_argument unless n = 2.
 */
inline int lk_v(const StringLinkDiagram& d) {
  require_valid(d);
  if (d.n != 2) {
    throw std::invalid_argument("lk_v requires a 2-strand diagram, got n = " +
                                std::to_string(d.n));
  }
  int count = 0;
  for (const Crossing& c : d.crossings) {
    if (c.kind == CrossingKind::Virtual && detail::joins_two_strands(c)) ++count;
  }
  return count % 2;
}

/**
 * Per-strand lower bound read off a matrix invariant: the maximum |eps part|
 * over row i of m.  The matrix must have the invariant's entry structure --
 * every unit part 0 or 1, with the 1s forming a permutation matrix -- and is
 * rejected with std::invalid_argument otherwise.  The row index is 0-based;
 * an out-of-range index throws std::out_of_range.
 */
inline Int a_i(const DualMat& m, int i) {
  const auto n = m.rows();
  if (n == 0 || m.cols() != n) {
    throw std::invalid_argument("a_i requires a nonempty square matrix");
  }
  std::vector<int> column_units(static_cast<std::size_t>(n), 0);
  for (Eigen::Index r = 0; r < n; ++r) {
    int row_units = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
      const Int& u = m(r, c).unit();
      if (u != 0 && u != 1) {
        throw std::invalid_argument("a_i: entry (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ") has unit part " +
                                    int_str(u) + ", expected 0 or 1");
      }
      if (u == 1) {
        ++row_units;
        ++column_units[static_cast<std::size_t>(c)];
      }
    }
    if (row_units != 1) {
      throw std::invalid_argument("a_i: row " + std::to_string(r) +
                                  " has " + std::to_string(row_units) +
                                  " unit entries, expected exactly one");
    }
  }
  for (Eigen::Index c = 0; c < n; ++c) {
    if (column_units[static_cast<std::size_t>(c)] != 1) {
      throw std::invalid_argument("a_i: column " + std::to_string(c) +
                                  " has " +
                                  std::to_string(column_units[static_cast<std::size_t>(c)]) +
                                  " unit entries, expected exactly one");
    }
  }
  if (i < 0 || i >= n) {
    throw std::out_of_range("a_i: row index " + std::to_string(i) +
                            " out of range for a " + std::to_string(n) +
                            "-strand matrix");
  }
  Int best = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Int mag = abs_int(m(i, c).eps());
    if (mag > best) best = mag;
  }
  return best;
}

/**
 * Number of virtual crossings of the diagram with exactly one passage on
 * strand i (0-based): the diagram-level count that a_i bounds from below.
 * Throws std::out_of_range on a bad strand index.
 */
inline int virtual_between_count(const StringLinkDiagram& d, int i) {
  require_valid(d);
  if (i < 0 || i >= d.n) {
    throw std::out_of_range("virtual_between_count: strand " +
                            std::to_string(i) + " out of range for n = " +
                            std::to_string(d.n));
  }
  int count = 0;
  for (const Crossing& c : d.crossings) {
    if (c.kind != CrossingKind::Virtual) continue;
    bool first = c.slots[0].strand == i;
    bool second = c.slots[1].strand == i;
    if (first != second) ++count;
  }
  return count;
}

/**
 * Bundle of the elementary invariants of one diagram.  lk and lk_v are only
 * defined for 2-strand diagrams and are absent otherwise; a[i] is the bound
 * read off row i of the matrix invariant and virtual_between[i] the diagram
 * count it never exceeds.
 */
struct LinkingReport {
  std::optional<Int> lk;
  std::optional<int> lk_v;
  std::vector<Int> a;
  std::vector<int> virtual_between;

  bool operator==(const LinkingReport&) const = default;
};

inline LinkingReport linking_report(const StringLinkDiagram& d) {
  require_valid(d);
  LinkingReport report;
  if (d.n == 2) {
    report.lk = lk(d);
    report.lk_v = lk_v(d);
  }
  DualMat m = matrix_invariant(d);
  for (int i = 0; i < d.n; ++i) {
    report.a.push_back(a_i(m, i));
    report.virtual_between.push_back(virtual_between_count(d, i));
  }
  return report;
}

inline std::string to_string(const LinkingReport& r) {
  std::ostringstream out;
  out << "lk = " << (r.lk ? int_str(*r.lk) : "n/a") << "\n";
  out << "lk_v = " << (r.lk_v ? std::to_string(*r.lk_v) : "n/a") << "\n";
  out << "a = [";
  for (std::size_t i = 0; i < r.a.size(); ++i) {
    if (i != 0) out << ", ";
    out << int_str(r.a[i]);
  }
  out << "]\n";
  out << "virtual_between = [";
  for (std::size_t i = 0; i < r.virtual_between.size(); ++i) {
    if (i != 0) out << ", ";
    out << r.virtual_between[i];
  }
  out << "]";
  return out.str();
}

}  // namespace vsl
