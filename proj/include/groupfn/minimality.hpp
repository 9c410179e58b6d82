#pragma once

#include "groupfn/check_report.hpp"
#include "groupfn/group_functions.hpp"
#include "groupfn/sampler.hpp"

namespace groupfn {

// Sampled exact checks of the minimality conditions: subadditivity
// f(x)+f(y) >= f(x+y), symmetry f(x)+f(b-x) = 1, f = 0 on the integers,
// and periodicity f(x+z) = f(x). Comparisons are exact: structural on
// coordinates, with sign-determining enclosure refinement for strict
// inequalities between irrational values. Reports are deterministic
// functions of (function, sampler, samples, seed).

CheckReport check_subadditivity(const GroupFunction& f, const PointSampler& sampler,
                                std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

CheckReport check_symmetry(const GroupFunction& f, const PointSampler& sampler,
                           std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

// Exhaustive over the integer range [z_min, z_max].
CheckReport check_integers_zero(const GroupFunction& f, long z_min, long z_max);

// z drawn uniformly from [-bound, bound].
CheckReport check_integers_zero_sampled(const GroupFunction& f, std::uint64_t samples,
                                        std::uint64_t seed, long bound = 1000000,
                                        unsigned threads = 0);

// x sampled, shift z uniform in [-3, 3].
CheckReport check_periodicity(const GroupFunction& f, const PointSampler& sampler,
                              std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

// Informational for perturbed functions: scans sampled points plus the
// deterministic lines k*a (|k| <= ladder_range, every atom) where additive
// perturbations of a bounded function must eventually go negative.
CheckReport check_nonnegativity(const GroupFunction& f, const PointSampler& sampler,
                                std::uint64_t samples, std::uint64_t seed,
                                long ladder_range = 25, unsigned threads = 0);

// Exhaustive minimality check on the cyclic grid: v[0] = 0, all n^2
// subadditivity pairs, and the symmetry complement at every index.
CheckReport verify_minimal_finite(const FiniteGroupFunction& F);

}  // namespace groupfn
