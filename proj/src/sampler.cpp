#include "groupfn/sampler.hpp"

namespace groupfn {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t s = master ^ h;
  return splitmix64(s);
}

HamelNumber PointSampler::sample(Rng& rng) const {
  const auto& atoms = reg_ ? reg_->atoms() : std::vector<AtomSpec>{};
  if (!atoms.empty() && params_.pure_line_period > 0 &&
      rng.below(static_cast<std::uint64_t>(params_.pure_line_period)) == 0) {
    const AtomId& id = atoms[rng.below(atoms.size())].id;
    long k = rng.range(-params_.pure_line_range, params_.pure_line_range);
    if (k == 0) k = 1;
    return HamelNumber::atom(reg_, id, Rat(k));
  }
  HamelNumber x = HamelNumber::from_rational(rational(rng));
  if (!atoms.empty()) {
    const int active = static_cast<int>(rng.below(static_cast<std::uint64_t>(params_.max_atoms) + 1));
    // pick distinct atom indices by rejection over the small registry
    std::vector<std::size_t> chosen;
    while (static_cast<int>(chosen.size()) < active && chosen.size() < atoms.size()) {
      const std::size_t i = rng.below(atoms.size());
      bool dup = false;
      for (std::size_t j : chosen) dup = dup || j == i;
      if (!dup) chosen.push_back(i);
    }
    for (std::size_t i : chosen)
      x = x + HamelNumber::atom(reg_, atoms[i].id, rational(rng));  // zero coeff just drops out
  }
  return x;
}

}  // namespace groupfn
