#pragma once

#include "groupfn/hamel.hpp"

#include <cstdint>
#include <string_view>

namespace groupfn {

// splitmix64 step; the project's one seed-expansion primitive.
std::uint64_t splitmix64(std::uint64_t& state);

// Sub-seed for a named check under a master seed: splitmix64 applied to
// master XOR fnv1a64(label). Chunk c of a check then seeds its stream with
// splitmix64(sub_seed + c), which keeps reports byte-identical for any
// worker count.
std::uint64_t mix_seed(std::uint64_t master, std::string_view label);

// Deterministic stream generator (splitmix64 sequence). Not cryptographic;
// chosen over <random> distributions so streams are identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return splitmix64(state_); }
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Random points of the Q-subspace. The b-coefficient is uniform over
// {p/q : |p| <= max_abs_num, 1 <= q <= max_den}; up to max_atoms atom
// coefficients are drawn from the same set. One sample in pure_line_period
// is a pure integer multiple k*a of a single atom, |k| <= pure_line_range —
// the shape on which nonnegativity of perturbed functions fails.
struct SamplerParams {
  long max_abs_num = 40;
  long max_den = 20;
  int max_atoms = 2;
  int pure_line_period = 8;
  long pure_line_range = 20;
};

class PointSampler {
 public:
  PointSampler(RegistryPtr reg, SamplerParams params = {})
      : reg_(std::move(reg)), params_(params) {}

  Rat rational(Rng& rng) const {
    return Rat(rng.range(-params_.max_abs_num, params_.max_abs_num),
               rng.range(1, params_.max_den));
  }

  HamelNumber sample(Rng& rng) const;

  const RegistryPtr& registry() const { return reg_; }
  const SamplerParams& params() const { return params_; }

 private:
  RegistryPtr reg_;
  SamplerParams params_;
};

}  // namespace groupfn
