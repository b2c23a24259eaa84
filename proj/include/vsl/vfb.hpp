#pragma once

#include <array>
#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vsl/diagram.hpp"

namespace vsl {

/**
 * Finite virtual flat biquandle on the carrier {0, ..., order-1}.  star[b][a]
 * stores b*a = S_a(b) and circ[b][a] stores b.a = T_a(b); the row index is
 * always the left operand.
 */
struct FiniteVfb {
  int order = 0;
  std::vector<std::vector<int>> star;
  std::vector<std::vector<int>> circ;

  bool operator==(const FiniteVfb&) const = default;
};

/**
 * One failed axiom instance.  `axiom` is a short label plus the identity it
 * names; `witness` lists the elements at which it fails ((a, b, x) for the
 * commuting and stabilizer families, (a, x) for the inverse family, and the
 * quantified elements for the flat-biquandle families).
 */
struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;

  bool operator==(const AxiomViolation&) const = default;
};

inline std::string to_string(const AxiomViolation& v) {
  std::ostringstream out;
  out << v.axiom << " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i != 0) out << ", ";
    out << v.witness[i];
  }
  out << ")";
  return out.str();
}

namespace detail {

inline void require_table_shape(const FiniteVfb& S) {
  const int m = S.order;
  if (m < 1) throw std::invalid_argument("virtual flat biquandle needs order >= 1");
  auto check = [&](const std::vector<std::vector<int>>& table, const char* name) {
    if (static_cast<int>(table.size()) != m) {
      throw std::invalid_argument(std::string(name) + " table must have " +
                                  std::to_string(m) + " rows");
    }
    for (int b = 0; b < m; ++b) {
      if (static_cast<int>(table[static_cast<std::size_t>(b)].size()) != m) {
        throw std::invalid_argument(std::string(name) + " table row " +
                                    std::to_string(b) + " must have " +
                                    std::to_string(m) + " entries");
      }
      for (int a = 0; a < m; ++a) {
        int v = table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        if (v < 0 || v >= m) {
          throw std::invalid_argument(std::string(name) + "[" + std::to_string(b) +
                                      "][" + std::to_string(a) + "] = " +
                                      std::to_string(v) + " is outside the carrier");
        }
      }
    }
  };
  check(S.star, "star");
  check(S.circ, "circ");
}

}  // namespace detail

/**
 * Exhaustive check of the three defining axiom families.  Malformed tables
 * throw std::invalid_argument; axiom failures are returned, one violation
 * (the first witness) per sub-family.  An empty result means S is a virtual
 * flat biquandle.
 */
inline std::vector<AxiomViolation> validate_vfb(const FiniteVfb& S) {
  detail::require_table_shape(S);
  const int m = S.order;
  std::vector<AxiomViolation> out;
  auto star = [&](int b, int a) {
    return S.star[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  auto circ = [&](int b, int a) {
    return S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  auto scan_abx = [&](const char* label, auto&& holds) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int x = 0; x < m; ++x)
          if (!holds(a, b, x)) {
            out.push_back({label, {a, b, x}});
            return;
          }
  };
  auto scan_ax = [&](const char* label, auto&& holds) {
    for (int a = 0; a < m; ++a)
      for (int x = 0; x < m; ++x)
        if (!holds(a, x)) {
          out.push_back({label, {a, x}});
          return;
        }
  };
  scan_abx("1a: S_a S_b = S_b S_a",
           [&](int a, int b, int x) { return star(star(x, b), a) == star(star(x, a), b); });
  scan_abx("1b: T_a T_b = T_b T_a",
           [&](int a, int b, int x) { return circ(circ(x, b), a) == circ(circ(x, a), b); });
  scan_abx("1c: S_a T_b = T_b S_a",
           [&](int a, int b, int x) { return star(circ(x, b), a) == circ(star(x, a), b); });
  scan_abx("2a: S_a = S_{T_b(a)}",
           [&](int a, int b, int x) { return star(x, a) == star(x, circ(a, b)); });
  scan_abx("2b: S_a = S_{S_b(a)}",
           [&](int a, int b, int x) { return star(x, a) == star(x, star(a, b)); });
  scan_abx("2c: T_a = T_{S_b(a)}",
           [&](int a, int b, int x) { return circ(x, a) == circ(x, star(a, b)); });
  scan_abx("2d: T_a = T_{T_b(a)}",
           [&](int a, int b, int x) { return circ(x, a) == circ(x, circ(a, b)); });
  scan_ax("3a: T_a S_a = id", [&](int a, int x) { return circ(star(x, a), a) == x; });
  scan_ax("3b: S_a T_a = id", [&](int a, int x) { return star(circ(x, a), a) == x; });
  return out;
}

/** Throws std::invalid_argument unless S is a valid virtual flat biquandle. */
inline void require_valid_vfb(const FiniteVfb& S) {
  auto violations = validate_vfb(S);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid virtual flat biquandle: " +
                                to_string(violations.front()));
  }
}

/** The trivial structure b*a = b.a = b on m elements. */
inline FiniteVfb trivial_vfb(int m) {
  if (m < 1) throw std::invalid_argument("trivial_vfb needs order >= 1");
  FiniteVfb S;
  S.order = m;
  S.star.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  S.circ = S.star;
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      S.star[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = b;
      S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = b;
    }
  return S;
}

/** b*a = psi(b), b.a = psi^{-1}(b) for a permutation psi of the carrier. */
inline FiniteVfb constant_action_vfb(const std::vector<int>& psi) {
  const int m = static_cast<int>(psi.size());
  if (m < 1) throw std::invalid_argument("constant_action_vfb needs a nonempty permutation");
  std::vector<int> inverse(static_cast<std::size_t>(m), -1);
  for (int b = 0; b < m; ++b) {
    int image = psi[static_cast<std::size_t>(b)];
    if (image < 0 || image >= m || inverse[static_cast<std::size_t>(image)] != -1) {
      throw std::invalid_argument("constant_action_vfb needs a permutation of 0.." +
                                  std::to_string(m - 1));
    }
    inverse[static_cast<std::size_t>(image)] = b;
  }
  FiniteVfb S;
  S.order = m;
  S.star.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  S.circ = S.star;
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      S.star[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
          psi[static_cast<std::size_t>(b)];
      S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
          inverse[static_cast<std::size_t>(b)];
    }
  return S;
}

/**
 * The linear structure on Z_m[s]/(s^2): the carrier is pairs b = b0 + b1 s
 * encoded as b0*m + b1, with S_a(b) = -sa + (1-s)b and T_a(b) = sa + (1+s)b
 * taken componentwise mod m.  Order m^2.
 */
inline FiniteVfb linear_vfb(int m) {
  if (m < 1) throw std::invalid_argument("linear_vfb needs modulus >= 1");
  auto mod = [m](int v) { return ((v % m) + m) % m; };
  FiniteVfb S;
  S.order = m * m;
  S.star.assign(static_cast<std::size_t>(S.order),
               std::vector<int>(static_cast<std::size_t>(S.order)));
  S.circ = S.star;
  for (int b0 = 0; b0 < m; ++b0)
    for (int b1 = 0; b1 < m; ++b1)
      for (int a0 = 0; a0 < m; ++a0)
        for (int a1 = 0; a1 < m; ++a1) {
          std::size_t b = static_cast<std::size_t>(b0 * m + b1);
          std::size_t a = static_cast<std::size_t>(a0 * m + a1);
          S.star[b][a] = b0 * m + mod(b1 - b0 - a0);
          S.circ[b][a] = b0 * m + mod(b1 + b0 + a0);
        }
  return S;
}

/**
 * Checks the three flat-biquandle axiom families (a theorem for every valid
 * virtual flat biquandle): the two uniqueness clauses by exhaustive search,
 * the derived identities pointwise.  Returns the first witness per
 * sub-family; tables are only required to be total.
 */
inline std::vector<AxiomViolation> check_flat_biquandle_axioms(const FiniteVfb& S) {
  detail::require_table_shape(S);
  const int m = S.order;
  std::vector<AxiomViolation> out;
  auto star = [&](int b, int a) {
    return S.star[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  auto circ = [&](int b, int a) {
    return S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };

  bool x_clause_done = false;
  bool y_clause_done = false;
  for (int a = 0; a < m && !(x_clause_done && y_clause_done); ++a) {
    int x_count = 0;
    int y_count = 0;
    for (int v = 0; v < m; ++v) {
      if (circ(a, v) == v && star(v, a) == a) ++x_count;
      if (circ(v, a) == a && star(a, v) == v) ++y_count;
    }
    if (x_count != 1 && !x_clause_done) {
      out.push_back({"F1x: unique x with a.x = x and x*a = a", {a}});
      x_clause_done = true;
    }
    if (y_count != 1 && !y_clause_done) {
      out.push_back({"F1y: unique y with y.a = a and a*y = y", {a}});
      y_clause_done = true;
    }
  }

  bool pair_done = false;
  bool left_done = false;
  bool right_done = false;
  for (int a = 0; a < m && !(pair_done && left_done && right_done); ++a) {
    for (int b = 0; b < m; ++b) {
      if (!pair_done) {
        int pairs = 0;
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y)
            if (x == circ(b, y) && y == circ(a, x) && b == star(x, a) && a == star(y, b))
              ++pairs;
        if (pairs != 1) {
          out.push_back({"F2u: unique (x, y) with x = b.y, y = a.x, b = x*a, a = y*b", {a, b}});
          pair_done = true;
        }
      }
      if (!left_done && star(circ(a, b), star(b, a)) != a) {
        out.push_back({"F2l: (a.b)*(b*a) = a", {a, b}});
        left_done = true;
      }
      if (!right_done && circ(star(b, a), circ(a, b)) != b) {
        out.push_back({"F2r: (b*a).(a.b) = b", {a, b}});
        right_done = true;
      }
    }
  }

  bool f3a_done = false;
  bool f3b_done = false;
  bool f3c_done = false;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (!f3a_done && circ(circ(a, b), c) != circ(circ(a, star(c, b)), circ(b, c))) {
          out.push_back({"F3a: (a.b).c = (a.(c*b)).(b.c)", {a, b, c}});
          f3a_done = true;
        }
        if (!f3b_done && star(star(c, b), a) != star(star(c, circ(a, b)), star(b, a))) {
          out.push_back({"F3b: (c*b)*a = (c*(a.b))*(b*a)", {a, b, c}});
          f3b_done = true;
        }
        if (!f3c_done &&
            star(circ(b, c), circ(a, star(c, b))) != circ(star(b, a), star(c, circ(a, b)))) {
          out.push_back({"F3c: (b.c)*(a.(c*b)) = (b*a).(c*(a.b))", {a, b, c}});
          f3c_done = true;
        }
      }
  return out;
}

/**
 * The subset generated by a single element: the closure of {a} under S_a and
 * T_a alone, which for a valid structure already equals the full subalgebra
 * generated by a (the stabilizer axioms force S_y = S_a and T_y = T_a on the
 * orbit).  The full closure is recomputed independently and a mismatch --
 * possible only for invalid tables -- throws std::logic_error.  Returns the
 * sorted element list.
 */
inline std::vector<int> singly_generated_orbit(const FiniteVfb& S, int a) {
  detail::require_table_shape(S);
  if (a < 0 || a >= S.order) {
    throw std::out_of_range("orbit base element " + std::to_string(a) +
                            " is outside the carrier of order " + std::to_string(S.order));
  }
  auto star = [&](int b, int c) {
    return S.star[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
  };
  auto circ = [&](int b, int c) {
    return S.circ[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
  };

  std::set<int> orbit{a};
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : std::vector<int>(orbit.begin(), orbit.end())) {
      grew = orbit.insert(star(x, a)).second || grew;
      grew = orbit.insert(circ(x, a)).second || grew;
    }
  }

  std::set<int> full{a};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> elements(full.begin(), full.end());
    for (int x : elements)
      for (int y : elements) {
        grew = full.insert(star(x, y)).second || grew;
        grew = full.insert(circ(x, y)).second || grew;
      }
  }
  if (full != orbit) {
    throw std::logic_error("singly generated orbit of " + std::to_string(a) +
                           " differs from the subalgebra closure; the tables "
                           "do not form a virtual flat biquandle");
  }
  return std::vector<int>(orbit.begin(), orbit.end());
}

/**
 * One crossing relation of a fundamental presentation: the color of out_arc
 * equals color(lhs_arc) * color(rhs_arc) when star is set and
 * color(lhs_arc) . color(rhs_arc) otherwise.
 */
struct VfbRelation {
  int out_arc = 0;
  bool star = true;
  int lhs_arc = 0;
  int rhs_arc = 0;

  bool operator==(const VfbRelation&) const = default;
};

/**
 * Fundamental presentation of a diagram: generators are the v-arcs, numbered
 * 0..arc_count-1 component by component; one relation pair per virtual
 * crossing.  virtual_crossing_inputs records each virtual crossing's
 * (left-in, right-in) arc pair in diagram order, for the cocycle state-sum.
 */
struct VfbPresentation {
  int arc_count = 0;
  std::vector<VfbRelation> relations;
  std::vector<std::array<int, 2>> virtual_crossing_inputs;

  bool operator==(const VfbPresentation&) const = default;
};

inline std::string to_string(const VfbPresentation& p) {
  std::ostringstream out;
  out << "<";
  for (int i = 0; i < p.arc_count; ++i) {
    if (i != 0) out << ", ";
    out << "a" << i;
  }
  if (!p.relations.empty()) {
    out << " | ";
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      const VfbRelation& r = p.relations[i];
      if (i != 0) out << ", ";
      out << "a" << r.out_arc << " = a" << r.lhs_arc << (r.star ? " * a" : " o a")
          << r.rhs_arc;
    }
  }
  out << ">";
  return out.str();
}

namespace detail {

// Arc bookkeeping for one passage line (closed component or open strand):
// at each virtual position p, in[p]/out[p] give the arcs ending/beginning
// there.  Closed lines with no virtual passage form one circular arc; open
// lines always have one more arc than virtual passages.
struct ArcChart {
  std::unordered_map<int, int> in;
  std::unordered_map<int, int> out;
};

template <typename DiagramT>
std::vector<ArcChart> chart_arcs(const DiagramT& d,
                                 const std::vector<std::vector<int>>& lines, bool closed,
                                 int& arc_count) {
  auto idx = crossing_index(d.crossings);
  std::vector<ArcChart> charts(lines.size());
  arc_count = 0;
  for (std::size_t line = 0; line < lines.size(); ++line) {
    std::vector<int> virtual_positions;
    for (std::size_t p = 0; p < lines[line].size(); ++p) {
      const Crossing& c = d.crossings[static_cast<std::size_t>(idx.at(lines[line][p]))];
      if (c.kind == CrossingKind::Virtual) virtual_positions.push_back(static_cast<int>(p));
    }
    const int k = static_cast<int>(virtual_positions.size());
    if (k == 0) {
      ++arc_count;  // one free (or circular) arc, never referenced by a crossing
      continue;
    }
    if (closed) {
      for (int j = 0; j < k; ++j) {
        charts[line].out[virtual_positions[static_cast<std::size_t>(j)]] = arc_count + j;
        charts[line].in[virtual_positions[static_cast<std::size_t>(j)]] =
            arc_count + (j + k - 1) % k;
      }
      arc_count += k;
    } else {
      for (int j = 0; j < k; ++j) {
        charts[line].in[virtual_positions[static_cast<std::size_t>(j)]] = arc_count + j;
        charts[line].out[virtual_positions[static_cast<std::size_t>(j)]] = arc_count + j + 1;
      }
      arc_count += k + 1;
    }
  }
  return charts;
}

template <typename DiagramT>
VfbPresentation present_from_charts(const DiagramT& d, const std::vector<ArcChart>& charts,
                                    int arc_count) {
  VfbPresentation p;
  p.arc_count = arc_count;
  for (const Crossing& c : d.crossings) {
    if (c.kind != CrossingKind::Virtual) continue;
    const Slot& left = c.slots[static_cast<std::size_t>(c.left_slot)];
    const Slot& right = c.slots[static_cast<std::size_t>(1 - c.left_slot)];
    int left_in = charts[static_cast<std::size_t>(left.strand)].in.at(left.pos);
    int left_out = charts[static_cast<std::size_t>(left.strand)].out.at(left.pos);
    int right_in = charts[static_cast<std::size_t>(right.strand)].in.at(right.pos);
    int right_out = charts[static_cast<std::size_t>(right.strand)].out.at(right.pos);
    p.relations.push_back({left_out, true, left_in, right_in});
    p.relations.push_back({right_out, false, right_in, left_in});
    p.virtual_crossing_inputs.push_back({left_in, right_in});
  }
  return p;
}

}  // namespace detail

/**
 * Fundamental presentation of a flat link diagram.  V-arcs run from one
 * virtual passage to the next (flat crossings do not cut arcs; a component
 * with no virtual passage is a single circular arc).  At each virtual
 * crossing the Left-approach incoming color a exits as a * b and the
 * Right-approach incoming color b exits as b . a.
 */
inline VfbPresentation present_fundamental_vfb(const FlatLinkDiagram& d) {
  require_valid(d);
  int arc_count = 0;
  auto charts = detail::chart_arcs(d, d.components, /*closed=*/true, arc_count);
  return detail::present_from_charts(d, charts, arc_count);
}

/**
 * Fundamental presentation of an open string-link diagram.  Strand endpoints
 * are free: a strand with k virtual passages contributes k + 1 arcs and its
 * first and last arcs satisfy no boundary relations.  Real crossings do not
 * cut arcs, matching the flat case.
 */
inline VfbPresentation present_fundamental_vfb(const StringLinkDiagram& d) {
  require_valid(d);
  int arc_count = 0;
  auto charts = detail::chart_arcs(d, d.strands, /*closed=*/false, arc_count);
  return detail::present_from_charts(d, charts, arc_count);
}

namespace detail {

inline void require_presentation_shape(const VfbPresentation& p) {
  if (p.arc_count < 0) throw std::invalid_argument("negative arc count");
  auto check_arc = [&](int arc) {
    if (arc < 0 || arc >= p.arc_count) {
      throw std::invalid_argument("presentation references arc " + std::to_string(arc) +
                                  " outside 0.." + std::to_string(p.arc_count - 1));
    }
  };
  for (const VfbRelation& r : p.relations) {
    check_arc(r.out_arc);
    check_arc(r.lhs_arc);
    check_arc(r.rhs_arc);
  }
  for (const auto& pair : p.virtual_crossing_inputs) {
    check_arc(pair[0]);
    check_arc(pair[1]);
  }
}

// Backtracking over a precomputed assignment schedule.  An arc whose value a
// relation forces (out = lhs op rhs with both sides already placed) is
// derived instead of enumerated, which keeps the search tree small on the
// chained relations of long diagrams; every remaining relation is enforced as
// soon as its last arc is placed.  Calls `on` with each complete coloring.
template <typename OnColoring>
void for_each_coloring(const VfbPresentation& p, const FiniteVfb& S, OnColoring&& on) {
  require_presentation_shape(p);
  const int arcs = p.arc_count;
  auto at = [](int i) { return static_cast<std::size_t>(i); };

  struct Step {
    int arc = -1;
    int derived_from = -1;    // relation index, -1 for a free choice
    std::vector<int> checks;  // relations whose last arc lands here
  };
  std::vector<Step> schedule;
  schedule.reserve(at(arcs));
  std::vector<char> placed(at(arcs), 0);
  std::vector<char> consumed(p.relations.size(), 0);
  int next_free = 0;
  for (int done = 0; done < arcs; ++done) {
    Step step;
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      const VfbRelation& rel = p.relations[r];
      if (consumed[r] || placed[at(rel.out_arc)]) continue;
      if (rel.out_arc == rel.lhs_arc || rel.out_arc == rel.rhs_arc) continue;
      if (placed[at(rel.lhs_arc)] && placed[at(rel.rhs_arc)]) {
        step.arc = rel.out_arc;
        step.derived_from = static_cast<int>(r);
        consumed[r] = 1;
        break;
      }
    }
    if (step.arc < 0) {
      // Free choice.  Prefer the missing input of a pending relation, so the
      // next round derives its output instead of branching; on a cold start
      // open the first pending relation's inputs.  Only arcs no relation can
      // ever determine fall back to index order.
      int partner = -1;
      int opener = -1;
      for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const VfbRelation& rel = p.relations[r];
        if (consumed[r] || placed[at(rel.out_arc)]) continue;
        if (rel.out_arc == rel.lhs_arc || rel.out_arc == rel.rhs_arc) continue;
        const bool lhs_placed = placed[at(rel.lhs_arc)];
        const bool rhs_placed = placed[at(rel.rhs_arc)];
        if (lhs_placed != rhs_placed) {
          partner = lhs_placed ? rel.rhs_arc : rel.lhs_arc;
          break;
        }
        if (opener < 0 && !lhs_placed) opener = rel.lhs_arc;
      }
      if (partner >= 0) {
        step.arc = partner;
      } else if (opener >= 0) {
        step.arc = opener;
      } else {
        while (next_free < arcs && placed[at(next_free)]) ++next_free;
        step.arc = next_free;
      }
    }
    placed[at(step.arc)] = 1;
    schedule.push_back(std::move(step));
  }
  std::vector<int> pos(at(arcs));
  for (int i = 0; i < arcs; ++i) pos[at(schedule[at(i)].arc)] = i;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    if (consumed[r]) continue;  // satisfied by construction at its derive step
    const VfbRelation& rel = p.relations[r];
    int last = std::max(pos[at(rel.out_arc)], std::max(pos[at(rel.lhs_arc)], pos[at(rel.rhs_arc)]));
    schedule[at(last)].checks.push_back(static_cast<int>(r));
  }

  std::vector<int> color(at(arcs), 0);
  auto satisfied = [&](const VfbRelation& r) {
    const auto& table = r.star ? S.star : S.circ;
    return color[at(r.out_arc)] == table[at(color[at(r.lhs_arc)])][at(color[at(r.rhs_arc)])];
  };
  auto descend = [&](auto&& self, int depth) -> void {
    if (depth == arcs) {
      on(color);
      return;
    }
    const Step& step = schedule[at(depth)];
    if (step.derived_from >= 0) {
      const VfbRelation& rel = p.relations[at(step.derived_from)];
      const auto& table = rel.star ? S.star : S.circ;
      color[at(step.arc)] = table[at(color[at(rel.lhs_arc)])][at(color[at(rel.rhs_arc)])];
      for (int r : step.checks) {
        if (!satisfied(p.relations[at(r)])) return;
      }
      self(self, depth + 1);
      return;
    }
    for (int v = 0; v < S.order; ++v) {
      color[at(step.arc)] = v;
      bool ok = true;
      for (int r : step.checks) {
        if (!satisfied(p.relations[at(r)])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
    }
  };
  descend(descend, 0);
}

}  // namespace detail

/** All colorings of a presentation by S, in lexicographic arc-color order. */
inline std::vector<std::vector<int>> enumerate_colorings(const VfbPresentation& p,
                                                         const FiniteVfb& S) {
  require_valid_vfb(S);
  std::vector<std::vector<int>> found;
  detail::for_each_coloring(p, S, [&](const std::vector<int>& color) { found.push_back(color); });
  std::sort(found.begin(), found.end());  // the schedule emits in its own order
  return found;
}

inline std::vector<std::vector<int>> enumerate_colorings(const FlatLinkDiagram& d,
                                                         const FiniteVfb& S) {
  return enumerate_colorings(present_fundamental_vfb(d), S);
}

/** The coloring-counting invariant vc: the number of colorings by S. */
inline long long count_colorings(const VfbPresentation& p, const FiniteVfb& S) {
  require_valid_vfb(S);
  long long count = 0;
  detail::for_each_coloring(p, S, [&](const std::vector<int>&) { ++count; });
  return count;
}

inline long long count_colorings(const FlatLinkDiagram& d, const FiniteVfb& S) {
  return count_colorings(present_fundamental_vfb(d), S);
}

}  // namespace vsl
