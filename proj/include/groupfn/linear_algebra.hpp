#pragma once

#include "groupfn/rat.hpp"

#include <vector>

namespace groupfn {

// Full description of the solution set of A x = rhs over the rationals:
// { particular + span(kernel) } when feasible.
struct LinearSolution {
  bool feasible = false;
  std::vector<Rat> particular;             // free variables set to 0
  std::vector<std::vector<Rat>> kernel;    // basis, one vector per free column
};

// Gauss-Jordan with deterministic pivoting: columns left to right, first row
// with a nonzero entry, exact arithmetic, no scaling heuristics.
LinearSolution solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs);

}  // namespace groupfn
