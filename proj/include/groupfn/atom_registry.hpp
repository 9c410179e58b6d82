#pragma once

#include "groupfn/interval.hpp"
#include "groupfn/rat.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupfn {

// Names one irrational basis atom. Distinct ids denote distinct atoms within
// one registry; registries never reuse an id.
using AtomId = std::string;

struct RegistryMismatch : std::runtime_error {
  RegistryMismatch() : std::runtime_error("values belong to different atom registries") {}
};

// An atom is an algebraic irrational given by an integer-coefficient
// polynomial (ascending powers) and an isolating bracket [lo, hi] on which the
// polynomial changes sign exactly once.
struct AtomSpec {
  AtomId id;
  std::vector<mpz_class> minpoly;
  QInterval bracket;
  std::string source;  // "sqrt2" | "sqrt3" | "sqrt5" | "minpoly"
};

// Immutable set of declared atoms. Enclosure requests are pure functions
// (bisection from the declared bracket), so intervals are nested under
// refinement and identical across threads and calls.
//
// Declared assumption, not verified: {1} and the atom values are
// Q-linearly independent. Every report embeds independence_note().
class AtomRegistry {
 public:
  static std::shared_ptr<const AtomRegistry> builtin();  // sqrt2, sqrt3, sqrt5
  static std::shared_ptr<const AtomRegistry> make(std::vector<AtomSpec> atoms);

  const std::vector<AtomSpec>& atoms() const { return atoms_; }
  bool has(const AtomId& id) const { return index_.count(id) != 0; }
  const AtomSpec& spec(const AtomId& id) const;

  // Rational interval of width <= max_width containing the atom's value.
  QInterval enclose(const AtomId& id, const Rat& max_width) const;

  // FNV-1a hash of the canonical atom list, hex; identifies the registry in
  // report headers.
  std::string fingerprint() const;

  static const char* independence_note() {
    return "assumes {1} together with the declared atom values is Q-linearly "
           "independent; this is not verified for user-supplied atoms";
  }

 private:
  AtomRegistry() = default;
  std::vector<AtomSpec> atoms_;
  std::map<AtomId, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const AtomRegistry>;

// Exact sign of the polynomial at a rational point.
int minpoly_sign_at(const std::vector<mpz_class>& poly, const Rat& x);

}  // namespace groupfn
