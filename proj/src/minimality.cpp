#include "groupfn/minimality.hpp"

namespace groupfn {

namespace {

Json pair_json(const HamelNumber& x, const HamelNumber& y, const HamelNumber& lhs,
               const HamelNumber& rhs) {
  return Json{{"x", hnum_json(x)}, {"y", hnum_json(y)}, {"lhs", hnum_json(lhs)},
              {"rhs", hnum_json(rhs)}};
}

}  // namespace

CheckReport check_subadditivity(const GroupFunction& f, const PointSampler& sampler,
                                std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  return run_sampled_check(
      "subadditivity", seed, samples,
      [&](Rng& rng, CheckReport& rep) {
        const HamelNumber x = sampler.sample(rng);
        const HamelNumber y = sampler.sample(rng);
        const HamelNumber lhs = evaluate(f, x) + evaluate(f, y);
        const HamelNumber rhs = evaluate(f, x + y);
        switch (compare(lhs, rhs)) {
          case Ordering::LT: rep.add_violation(pair_json(x, y, lhs, rhs)); break;
          case Ordering::EQ: rep.add_tight(pair_json(x, y, lhs, rhs)); break;
          case Ordering::GT: break;
        }
      },
      threads);
}

CheckReport check_symmetry(const GroupFunction& f, const PointSampler& sampler,
                           std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  const HamelNumber b = HamelNumber::from_rational(b_point());
  return run_sampled_check(
      "symmetry", seed, samples,
      [&, b](Rng& rng, CheckReport& rep) {
        const HamelNumber x = sampler.sample(rng);
        const HamelNumber total = evaluate(f, x) + evaluate(f, b - x);
        if (!(total == HamelNumber::from_rational(Rat(1))))
          rep.add_violation(Json{{"x", hnum_json(x)}, {"sum", hnum_json(total)}});
      },
      threads);
}

CheckReport check_integers_zero(const GroupFunction& f, long z_min, long z_max) {
  CheckReport rep;
  rep.check = "integers-zero";
  for (long z = z_min; z <= z_max; ++z) {
    ++rep.samples;
    const HamelNumber v = evaluate(f, HamelNumber::from_integer(z));
    if (!(v == HamelNumber()))
      rep.add_violation(Json{{"z", z}, {"value", hnum_json(v)}});
  }
  return rep;
}

CheckReport check_integers_zero_sampled(const GroupFunction& f, std::uint64_t samples,
                                        std::uint64_t seed, long bound, unsigned threads) {
  return run_sampled_check(
      "integers-zero", seed, samples,
      [&](Rng& rng, CheckReport& rep) {
        const long z = rng.range(-bound, bound);
        const HamelNumber v = evaluate(f, HamelNumber::from_integer(z));
        if (!(v == HamelNumber()))
          rep.add_violation(Json{{"z", z}, {"value", hnum_json(v)}});
      },
      threads);
}

CheckReport check_periodicity(const GroupFunction& f, const PointSampler& sampler,
                              std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  return run_sampled_check(
      "periodicity", seed, samples,
      [&](Rng& rng, CheckReport& rep) {
        const HamelNumber x = sampler.sample(rng);
        const long z = rng.range(-3, 3);
        const HamelNumber lhs = evaluate(f, x + HamelNumber::from_integer(z));
        const HamelNumber rhs = evaluate(f, x);
        if (!(lhs == rhs))
          rep.add_violation(Json{{"x", hnum_json(x)}, {"z", z}, {"f(x+z)", hnum_json(lhs)},
                                 {"f(x)", hnum_json(rhs)}});
      },
      threads);
}

CheckReport check_nonnegativity(const GroupFunction& f, const PointSampler& sampler,
                                std::uint64_t samples, std::uint64_t seed, long ladder_range,
                                unsigned threads) {
  auto flag_if_negative = [&f](const HamelNumber& x, CheckReport& rep) {
    const HamelNumber v = evaluate(f, x);
    if (v.sign_real() < 0)
      rep.add_violation(Json{{"x", hnum_json(x)}, {"value", hnum_json(v)},
                             {"value_float", v.to_double()}});
  };

  CheckReport rep = run_sampled_check(
      "nonnegativity", seed, samples,
      [&](Rng& rng, CheckReport& r) { flag_if_negative(sampler.sample(rng), r); }, threads);

  if (sampler.registry()) {
    for (const auto& atom : sampler.registry()->atoms()) {
      for (long k = -ladder_range; k <= ladder_range; ++k) {
        if (k == 0) continue;
        ++rep.samples;
        flag_if_negative(HamelNumber::atom(sampler.registry(), atom.id, Rat(k)), rep);
      }
    }
  }
  return rep;
}

CheckReport verify_minimal_finite(const FiniteGroupFunction& F) {
  CheckReport rep;
  rep.check = "minimal-finite";
  const int n = F.n;
  const auto at = [&](int k) -> const Rat& { return F.values[static_cast<std::size_t>(k)]; };

  ++rep.samples;
  if (!(at(0) == Rat(0)))
    rep.add_violation(Json{{"relation", "origin"}, {"value", rat_json(at(0))}});

  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      ++rep.samples;
      const Rat lhs = at(j) + at(k);
      const Rat& rhs = at((j + k) % n);
      if (lhs < rhs)
        rep.add_violation(Json{{"relation", "subadditivity"}, {"j", j}, {"k", k},
                               {"lhs", rat_json(lhs)}, {"rhs", rat_json(rhs)}});
      else if (lhs == rhs)
        rep.add_tight(Json{{"u", j}, {"v", k}, {"w", (j + k) % n}});
    }
  }

  const int b = F.b_index();
  for (int k = 0; k < n; ++k) {
    ++rep.samples;
    const Rat sum = at(k) + at(((b - k) % n + n) % n);
    if (!(sum == Rat(1)))
      rep.add_violation(Json{{"relation", "symmetry"}, {"k", k}, {"sum", rat_json(sum)}});
  }
  return rep;
}

}  // namespace groupfn
