#pragma once

#include <array>
#include <stdexcept>

#include "vsl/diagram.hpp"
#include "vsl/dual.hpp"
#include "vsl/laurent.hpp"
#include "vsl/word.hpp"

namespace vsl {

/**
 * Matrix invariant of a virtual string link diagram over Z[s]/(s^2).
 *
 * Row i traces strand i with a unit weight: the weight is multiplied by
 * (1 - s) at each virtual crossing approached from the left and (1 + s) from
 * the right; real crossings are transparent.  Each virtual passage also
 * deposits +s (left approach) or -s (right approach) into the column of the
 * other strand's final lane.  The traced weight lands in column end_lane[i].
 */
inline DualMat matrix_invariant(const StringLinkDiagram& d) {
  require_valid(d);
  auto idx = crossing_index(d.crossings);
  DualMat m(d.n, d.n);
  m.setConstant(Dual(0));
  for (int i = 0; i < d.n; ++i) {
    Dual weight(1);
    for (int p = 0; p < static_cast<int>(d.strands[i].size()); ++p) {
      const Crossing& c = d.crossings[static_cast<std::size_t>(idx.at(d.strands[i][p]))];
      if (c.kind != CrossingKind::Virtual) continue;
      int k = slot_of(c, {i, p});
      bool left = c.left_slot == k;
      const Slot& other = c.slots[1 - k];
      m(i, d.end_lane[other.strand]) += left ? Dual::s() : -Dual::s();
      weight = weight * (left ? Dual(1) - Dual::s() : Dual(1) + Dual::s());
    }
    m(i, d.end_lane[i]) += weight;
  }
  return m;
}

/**
 * Independent recomputation of the matrix invariant by path enumeration.
 *
 * Entry (i, j) sums the weights of all admissible paths from the top of
 * strand i to the bottom of the strand ending in lane j.  At a real crossing
 * a path continues on its strand with weight factor 1 (switching strands has
 * factor 0).  At a virtual crossing it either continues, with factor (1 - s)
 * on a left approach and (1 + s) on a right approach, or switches to the
 * other strand just past the crossing, with factor +s (left) or -s (right).
 * Paths of weight 0 are pruned; s^2 = 0 makes every second switch vanish, so
 * the enumeration terminates.
 */
inline DualMat matrix_invariant_oracle(const StringLinkDiagram& d) {
  require_valid(d);
  auto idx = crossing_index(d.crossings);
  DualMat m(d.n, d.n);
  m.setConstant(Dual(0));
  struct Walker {
    const StringLinkDiagram& d;
    const std::unordered_map<int, int>& idx;
    DualMat& m;
    int row;
    void walk(int strand, int pos, Dual weight) {
      if (pos == static_cast<int>(d.strands[strand].size())) {
        m(row, d.end_lane[strand]) += weight;
        return;
      }
      const Crossing& c = d.crossings[static_cast<std::size_t>(idx.at(d.strands[strand][pos]))];
      if (c.kind != CrossingKind::Virtual) {
        walk(strand, pos + 1, weight);
        return;
      }
      int k = slot_of(c, {strand, pos});
      bool left = c.left_slot == k;
      Dual stay = weight * (left ? Dual(1) - Dual::s() : Dual(1) + Dual::s());
      if (!stay.is_zero()) walk(strand, pos + 1, stay);
      Dual jump = weight * (left ? Dual::s() : -Dual::s());
      if (!jump.is_zero()) {
        const Slot& other = c.slots[1 - k];
        walk(other.strand, other.pos + 1, jump);
      }
    }
  };
  for (int i = 0; i < d.n; ++i) {
    Walker w{d, idx, m, i};
    w.walk(i, 0, Dual(1));
  }
  return m;
}

/** Image of a single braid generator under the 2x2-block representation. */
inline DualMat rho_letter(const Letter& l, int n) {
  if (l.index < 1 || l.index + 1 > n) throw std::invalid_argument("letter index out of range");
  DualMat m(n, n);
  m.setConstant(Dual(0));
  for (int i = 0; i < n; ++i) m(i, i) = Dual(1);
  int i = l.index - 1;
  if (l.kind == LetterKind::Tau || l.kind == LetterKind::FlatCross) {
    m(i, i) = Dual::s();
    m(i, i + 1) = Dual(1) + Dual::s();
    m(i + 1, i) = Dual(1) - Dual::s();
    m(i + 1, i + 1) = -Dual::s();
  } else {
    m(i, i) = Dual(0);
    m(i, i + 1) = Dual(1);
    m(i + 1, i) = Dual(1);
    m(i + 1, i + 1) = Dual(0);
  }
  return m;
}

/** Braid-group representation over Z[s]/(s^2); factors in word order. */
inline DualMat rho(const VirtualBraidWord& w) {
  DualMat acc(w.n, w.n);
  acc.setConstant(Dual(0));
  for (int i = 0; i < w.n; ++i) acc(i, i) = Dual(1);
  for (const Letter& l : w.letters) acc = (acc * rho_letter(l, w.n)).eval();
  return acc;
}

/** Image of a single generator under the (virtually extended) Burau
 *  representation: rows index the entering lane, columns the exiting lane. */
inline LaurentMat burau_letter(const Letter& l, int n) {
  if (l.index < 1 || l.index + 1 > n) throw std::invalid_argument("letter index out of range");
  if (l.kind == LetterKind::FlatCross) throw std::invalid_argument("flat letters have no Burau image");
  LaurentMat m(n, n);
  m.setConstant(LaurentPoly());
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  int i = l.index - 1;
  switch (l.kind) {
    case LetterKind::SigmaPos:
      m(i, i) = LaurentPoly(1) - LaurentPoly::t_inv();
      m(i, i + 1) = LaurentPoly::t_inv();
      m(i + 1, i) = LaurentPoly(1);
      m(i + 1, i + 1) = LaurentPoly(0);
      break;
    case LetterKind::SigmaNeg:
      m(i, i) = LaurentPoly(0);
      m(i, i + 1) = LaurentPoly(1);
      m(i + 1, i) = LaurentPoly::t();
      m(i + 1, i + 1) = LaurentPoly(1) - LaurentPoly::t();
      break;
    default:  // Tau: plain swap
      m(i, i) = LaurentPoly(0);
      m(i, i + 1) = LaurentPoly(1);
      m(i + 1, i) = LaurentPoly(1);
      m(i + 1, i + 1) = LaurentPoly(0);
      break;
  }
  return m;
}

/** Burau matrix of a braid word.  Generator images multiply in the order the
 *  downward lane walk meets the crossings (last letter first, matching
 *  from_braid_word's first-letter-at-the-bottom stacking), so evaluating at
 *  t = 1 yields the permutation matrix of the word's diagram. */
inline LaurentMat burau(const VirtualBraidWord& w) {
  LaurentMat acc(w.n, w.n);
  acc.setConstant(LaurentPoly());
  for (int i = 0; i < w.n; ++i) acc(i, i) = LaurentPoly(1);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    acc = (acc * burau_letter(*it, w.n)).eval();
  return acc;
}

/**
 * Permutation representation of the flat virtual braid group on 3 strands,
 * one-line notation with 1-based values: flat crossings act trivially, the
 * virtual generators act as the adjacent transpositions.  The first letter is
 * the outermost factor of the composite.
 */
inline std::array<int, 3> permutation_rep_fvb3(const FlatBraidWord& w) {
  if (w.n != 3) throw std::invalid_argument("permutation representation needs exactly 3 strands");
  auto image = [](const Letter& l) -> std::array<int, 3> {
    if (l.kind == LetterKind::Tau && l.index == 1) return {2, 1, 3};
    if (l.kind == LetterKind::Tau && l.index == 2) return {1, 3, 2};
    return {1, 2, 3};
  };
  std::array<int, 3> acc{1, 2, 3};
  for (const Letter& l : w.letters) {
    std::array<int, 3> g = image(l), next{};
    for (int x = 0; x < 3; ++x) next[x] = acc[g[x] - 1];  // acc o g
    acc = next;
  }
  return acc;
}

inline std::string to_string(const std::array<int, 3>& p) {
  return "(" + std::to_string(p[0]) + ", " + std::to_string(p[1]) + ", " + std::to_string(p[2]) + ")";
}

}  // namespace vsl
