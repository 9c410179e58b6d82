#pragma once

#include "groupfn/check_report.hpp"
#include "groupfn/group_functions.hpp"
#include "groupfn/sampler.hpp"

#include <vector>

namespace groupfn {

// Finite-support member candidate for the group problem: points with
// positive integer multiplicities, pairwise distinct points.
struct Solution {
  struct Term {
    HamelNumber point;
    long multiplicity = 1;
  };
  std::vector<Term> support;

  HamelNumber weighted_sum() const;
  Json to_json() const;
};

// Membership: the weighted sum is congruent to b mod 1, i.e. the difference
// has empty atom part and an even b-coefficient. Exact, no rounding.
bool is_member(const Solution& y);

struct SolutionParams {
  int max_support = 6;
  long max_multiplicity = 3;
  long closing_z_range = 3;  // the closing integer shift is drawn from [-range, range]
};

// Draws support-1 free points from the sampler, then closes the congruence
// with a final multiplicity-1 point b + z - (partial sum). The result always
// passes is_member.
Solution random_solution(const PointSampler& sampler, Rng& rng, const SolutionParams& p = {});

// sum of multiplicity * f(point), exact.
HamelNumber halfspace_value(const GroupFunction& f, const Solution& y);

// halfspace_value(f, y) >= 1, decided exactly (enclosure refinement for
// irrational totals). Requires is_member(y).
bool check_validity(const GroupFunction& f, const Solution& y);

// sum of multiplicity * theta(point) - theta(b) for an additive theta
// vanishing on the rationals (c_b must be 0); zero on every member.
Rat affine_hull_residual(const AdditiveSpec& theta, const Solution& y);

// halfspace_value(pi_fn, y) == halfspace_value(pi_fn + theta, y), exact.
bool equivalence_check(const GroupFunction& pi_fn, const AdditiveSpec& theta, const Solution& y);

// For the perturbed GMI function gmi + theta (theta additive, c_b = 0,
// c != 0): finds a point k*a where the perturbed function is negative and
// returns it together with the corrected function (the perturbation undone,
// i.e. exactly gmi again).
struct NonnegDemo {
  GroupFunction perturbed;
  GroupFunction corrected;
  HamelNumber witness;
  QInterval witness_value;  // enclosure of the negative value
};
NonnegDemo nonneg_form_demo(const RegistryPtr& reg, const AdditiveSpec& theta,
                            long search_range = 64);

}  // namespace groupfn
