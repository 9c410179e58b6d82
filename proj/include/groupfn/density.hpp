#pragma once

#include "groupfn/group_functions.hpp"
#include "groupfn/hamel.hpp"

#include <vector>

namespace groupfn {

// One constructed point of the graph of pi near a target (x*, y*):
// pi(x) equals y* exactly, and the real value of x lies within eps of x*
// (the carried enclosure certifies it: |mid - x*| + width/2 < eps).
struct GraphHit {
  HamelNumber x;
  Rat pi_value;
  QInterval x_interval;
  Rat target_x;
  Rat target_y;
  Rat eps;
};

// Pick the b-coefficient mu = y* (mu = 1 on the top edge, riding the
// odd-integer branch), then steer the atom coefficient so that
// mu*b + lambda*atom lands within eps of x*. Always succeeds; the returned
// hit is re-verified against its own invariants before returning.
GraphHit hit_target(const Rat& x_star, const Rat& y_star, const Rat& eps, const RegistryPtr& reg,
                    const AtomId& atom);

// One hit per (x, y) grid pair.
std::vector<GraphHit> graph_cloud(const std::vector<Rat>& x_grid, const std::vector<Rat>& y_grid,
                                  const Rat& eps, const RegistryPtr& reg, const AtomId& atom);

// A graph point within 2^-k of the rational x0 whose pi-value differs from
// pi(x0) by exactly 1/2 — no one-sided limit can exist at x0.
GraphHit discontinuity_witness(const Rat& x0, int k, const RegistryPtr& reg, const AtomId& atom);

}  // namespace groupfn
