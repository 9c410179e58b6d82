#pragma once

#include "groupfn/check_report.hpp"
#include "groupfn/group_functions.hpp"
#include "groupfn/linear_algebra.hpp"
#include "groupfn/sampler.hpp"

#include <array>
#include <vector>

namespace groupfn {

// Checks pi(x) = pi(mu*b) with mu the b-coefficient of x, together with the
// mechanism behind it: y := mu*b - x has pi(y) = 0 and the additivity
// relation pi(x) + pi(y) = pi(x+y) holds with equality.
CheckReport claim_reduction_check(const PointSampler& sampler, std::uint64_t samples,
                                  std::uint64_t seed, unsigned threads = 0);

// Exact identities of pi on rational multiples of b, organised by the size
// of p/q relative to [0,1], (1,3/2], (3/2,2):
//   1. q * pi(b/q) = 1
//   2. pi(p*b/q) = p/q                       for 0 <= p <= q
//   3. with x = p*b/q, y = 3b-2x:            for q <  2p <= 3q
//        pi(y) = (3q-2p)/q, pi(x+y) = 1 - pi(x), pi(x) = p/q - 1
//   4. pi(p*b/q) = 1 - pi(3b - p*b/q)        for 3q < 2p, p < 2q
CheckReport verify_proof_cases(long q_max);

// g[0] = 0, g[b] = 1, the symmetry complements, and one equation per
// additivity equality F(u) + F(v) = F(u+v). The source values are a
// solution by construction.
struct TightnessSystem {
  int n = 0;
  std::vector<std::vector<Rat>> lhs;
  std::vector<Rat> rhs;
  std::vector<std::array<int, 3>> tight_triples;  // (u, v, (u+v) mod n)
};

// Requires F minimal on the grid (throws std::domain_error otherwise).
TightnessSystem tightness_graph(const FiniteGroupFunction& F);

// UNIQUE when the tightness system pins the grid function down completely.
// NON_UNIQUE certificates are self-checking: they carry a kernel direction h
// and a rational eps > 0 such that F + eps*h and F - eps*h both pass
// verify_minimal_finite (re-verified before returning).
struct Certificate {
  enum class Verdict { Unique, NonUnique };
  Verdict verdict = Verdict::Unique;
  int n = 0;
  std::vector<Rat> values;
  std::vector<std::vector<Rat>> kernel_basis;  // empty iff Unique
  std::vector<Rat> direction;                  // first kernel vector when NonUnique
  Rat eps = Rat(0);

  Json to_json() const;
};

Certificate finite_uniqueness_certificate(const FiniteGroupFunction& F);

}  // namespace groupfn
