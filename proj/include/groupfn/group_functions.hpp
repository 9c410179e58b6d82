#pragma once

#include "groupfn/hamel.hpp"

#include <map>
#include <variant>
#include <vector>

namespace groupfn {

// pi(x): the fractional part of the b-coefficient, except that an odd-integer
// b-coefficient maps to 1. Always rational, always in [0, 1], and congruent
// to the b-coefficient mod 1. The odd-integer branch is decided exactly on
// the canonical form, never numerically.
Rat dense_pi(const HamelNumber& x);

// The two-slope GMI cut coefficient function for b = 1/2, extended
// periodically: 2*r on [0, b], 2*(1 - r) on [b, 1), where r = x mod 1.
// Irrational inputs give irrational values; the periodic reduction uses
// enclosure refinement and can throw RefinementBudgetError.
HamelNumber gmi(const HamelNumber& x);

// An additive (Cauchy) function determined by its values on the basis:
// theta(x) = c_b * (b-coefficient of x) + sum_a c[a] * (a-coefficient of x).
// With c_b = 0 it vanishes on every rational.
struct AdditiveSpec {
  Rat c_b;
  std::map<AtomId, Rat> c;
};
Rat additive_eval(const AdditiveSpec& theta, const HamelNumber& x);

struct DensePiFn {};
struct GmiFn {};

// Periodic piecewise linear interpolant of rational breakpoint data on [0,1).
// Only defined at rational arguments; segment i runs from breakpoints[i] to
// breakpoints[i+1] (wrapping to breakpoints[0] + 1 with value values[0]).
struct PiecewiseLinearFn {
  std::vector<Rat> breakpoints;  // sorted, distinct, in [0,1), starts at 0
  std::vector<Rat> values;       // same length
};

struct GroupFunction;

struct SumFn {
  std::vector<GroupFunction> parts;
};

// Closed evaluator family: pi, GMI, additive perturbations, pointwise sums,
// and grid-compatible piecewise linear data.
struct GroupFunction {
  std::variant<DensePiFn, GmiFn, AdditiveSpec, SumFn, PiecewiseLinearFn> node;

  static GroupFunction pi() { return {DensePiFn{}}; }
  static GroupFunction gmi_fn() { return {GmiFn{}}; }
  static GroupFunction additive(AdditiveSpec t) { return {std::move(t)}; }
  static GroupFunction piecewise_linear(PiecewiseLinearFn p) { return {std::move(p)}; }
};

GroupFunction fn_sum(std::vector<GroupFunction> parts);

// Exact pointwise evaluation. Rational-valued nodes embed their value as a
// rational HamelNumber, so sums mixing pi/theta with GMI stay exact.
HamelNumber evaluate(const GroupFunction& f, const HamelNumber& x);

Rat piecewise_linear_eval(const PiecewiseLinearFn& f, const Rat& x);

// Rational values on the cyclic grid {0, 1/n, ..., (n-1)/n}, n even, with
// the group right-hand side b = 1/2 sitting at index n/2.
struct FiniteGroupFunction {
  int n = 0;
  std::vector<Rat> values;

  int b_index() const { return n / 2; }
  static FiniteGroupFunction from_values(std::vector<Rat> v);
};

// values[k] = f(k/n), requiring f to be rational-valued on the grid.
// An irrational grid value throws std::domain_error.
FiniteGroupFunction restrict_to_grid(const GroupFunction& f, int n);

}  // namespace groupfn
