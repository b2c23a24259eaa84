#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vsl/abelian.hpp"
#include "vsl/diagram.hpp"
#include "vsl/homology.hpp"
#include "vsl/vfb.hpp"

namespace vsl {

/**
 * A cocycle state sum: the group-ring value sum_theta [w(theta)] together
 * with the per-coloring weights behind it.  The total multiplicity of the
 * value equals the number of colorings.
 */
struct StateSumResult {
  GroupRingElem value;
  std::vector<std::pair<std::vector<int>, std::vector<Int>>> per_coloring;
};

namespace detail {

inline FgAbelianGroup coefficient_group(const Coefficients& A) {
  return A.is_integers() ? FgAbelianGroup::integers() : FgAbelianGroup::cyclic(A.modulus);
}

}  // namespace detail

/**
 * The state-sum invariant: each coloring contributes the weight
 * w(theta) = sum over virtual crossings of phi(left-in color, right-in color);
 * flat crossings carry no weight.  phi must pass all three state-sum cocycle
 * conditions (checked; the first violation is reported).
 */
inline StateSumResult state_sum(const FlatLinkDiagram& d, const FiniteVfb& S,
                                const Cochain2& phi) {
  require_valid(d);
  require_valid_vfb(S);
  auto violations = is_state_sum_cocycle(S, phi);
  if (!violations.empty()) {
    throw std::invalid_argument("weight cochain is not a state-sum cocycle: " +
                                to_string(violations.front()));
  }
  VfbPresentation p = present_fundamental_vfb(d);
  FgAbelianGroup group = detail::coefficient_group(phi.coeff);
  StateSumResult out{GroupRingElem(group), {}};
  for (const auto& coloring : enumerate_colorings(p, S)) {
    Int w = 0;
    for (const auto& inputs : p.virtual_crossing_inputs) {
      w += phi.table[static_cast<std::size_t>(coloring[static_cast<std::size_t>(inputs[0])])]
                    [static_cast<std::size_t>(coloring[static_cast<std::size_t>(inputs[1])])];
    }
    std::vector<Int> element = group.from_scalar(w);
    out.value.add(element, 1);
    out.per_coloring.emplace_back(coloring, std::move(element));
  }
  return out;
}

/** phi + d(eta), entries reduced in phi's coefficient group. */
inline Cochain2 perturb_by_coboundary(const FiniteVfb& S, const Cochain2& phi,
                                      const std::vector<Int>& eta) {
  detail::require_cochain_shape(S, phi);
  Cochain2 shifted = coboundary(S, eta, phi.coeff);
  for (int a = 0; a < S.order; ++a)
    for (int b = 0; b < S.order; ++b) {
      auto sa = static_cast<std::size_t>(a);
      auto sb = static_cast<std::size_t>(b);
      shifted.table[sa][sb] = phi.coeff.reduce(shifted.table[sa][sb] + phi.table[sa][sb]);
    }
  return shifted;
}

/**
 * Coboundary-invariance check on one diagram: phi + d(eta) must still satisfy
 * the SF cocycle condition and must produce the same state sum as phi.
 * Returns nothing when both hold, else a description of the failure.
 */
inline std::optional<std::string> verify_coboundary_invariance(const FlatLinkDiagram& d,
                                                               const FiniteVfb& S,
                                                               const Cochain2& phi,
                                                               const std::vector<Int>& eta) {
  Cochain2 shifted = perturb_by_coboundary(S, phi, eta);
  for (const auto& v : is_state_sum_cocycle(S, shifted)) {
    if (v.condition == 3) {
      return "perturbed cochain fails the SF cocycle condition: " + to_string(v);
    }
  }
  StateSumResult base = state_sum(d, S, phi);
  StateSumResult moved = state_sum(d, S, shifted);
  if (!(base.value == moved.value)) {
    return "state sums differ: " + base.value.to_string() + " vs " + moved.value.to_string();
  }
  return std::nullopt;
}

}  // namespace vsl
