#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupfn/group_functions.hpp"
#include "groupfn/sampler.hpp"

using namespace groupfn;

namespace {

const RegistryPtr& reg() {
  static const RegistryPtr r = AtomRegistry::builtin();
  return r;
}

HamelNumber rat_point(long p, long q) { return HamelNumber::from_rational(Rat(p, q)); }

}  // namespace

TEST_CASE("pi anchor values") {
  CHECK(dense_pi(rat_point(0, 1)) == Rat(0));
  CHECK(dense_pi(HamelNumber::from_rational(b_point())) == Rat(1));
  CHECK(dense_pi(rat_point(1, 6)) == Rat(1, 3));          // b-coefficient 1/3
  CHECK(dense_pi(HamelNumber::atom(reg(), "sqrt2")) == Rat(0));
  CHECK(dense_pi(rat_point(3, 2)) == Rat(1));             // odd-integer branch
  CHECK(dense_pi(rat_point(3, 2)) == dense_pi(rat_point(1, 2)));  // periodic cross-check
  CHECK(dense_pi(rat_point(-1, 2)) == Rat(1));            // b-coefficient -1, odd
  CHECK(dense_pi(rat_point(13, 6)) == Rat(1, 3));
}

TEST_CASE("pi stays in [0,1], matches its b-coefficient mod 1, and is periodic") {
  Rng rng(23);
  const PointSampler sampler(reg());
  for (int i = 0; i < 2000; ++i) {
    const HamelNumber x = sampler.sample(rng);
    const Rat v = dense_pi(x);
    CHECK(v >= Rat(0));
    CHECK(v <= Rat(1));
    CHECK((v - x.b_coefficient()).is_integer());
    const long z = rng.range(-3, 3);
    CHECK(dense_pi(x + HamelNumber::from_integer(z)) == v);
    // depends on x only through the b-coefficient
    CHECK(dense_pi(HamelNumber::from_rational(x.b_coefficient() * b_point())) == v);
  }
}

TEST_CASE("gmi at rational and irrational points") {
  CHECK(gmi(rat_point(1, 4)) == rat_point(1, 2));
  CHECK(gmi(rat_point(3, 4)) == rat_point(1, 2));
  CHECK(gmi(rat_point(5, 4)) == rat_point(1, 2));  // periodic reduction first
  CHECK(gmi(rat_point(0, 1)) == rat_point(0, 1));
  CHECK(gmi(HamelNumber::from_rational(b_point())) == rat_point(1, 1));

  // gmi(sqrt2) = 2*sqrt2 - 2: reduce to sqrt2 - 1 in [0, 1/2], double.
  const HamelNumber a1 = HamelNumber::atom(reg(), "sqrt2");
  const HamelNumber expected = Rat(2) * a1 - rat_point(2, 1);
  CHECK(gmi(a1) == expected);
}

TEST_CASE("gmi is bounded by [0,1] and periodic") {
  Rng rng(29);
  const PointSampler sampler(reg());
  for (int i = 0; i < 400; ++i) {
    const HamelNumber x = sampler.sample(rng);
    const HamelNumber v = gmi(x);
    CHECK(v.compare_to_rational(Rat(0)) != Ordering::LT);
    CHECK(v.compare_to_rational(Rat(1)) != Ordering::GT);
    CHECK(gmi(x + HamelNumber::from_integer(rng.range(-3, 3))) == v);
  }
}

TEST_CASE("additive functions evaluate through the coordinates") {
  AdditiveSpec theta;
  theta.c_b = Rat(0);
  theta.c["sqrt2"] = Rat(1);

  CHECK(additive_eval(theta, rat_point(7, 3)) == Rat(0));  // vanishes on rationals
  CHECK(additive_eval(theta, HamelNumber::atom(reg(), "sqrt2")) == Rat(1));
  const HamelNumber x = rat_point(3, 1) - Rat(2) * HamelNumber::atom(reg(), "sqrt2");
  CHECK(additive_eval(theta, x) == Rat(-2));
  CHECK(additive_eval(theta, HamelNumber::atom(reg(), "sqrt3")) == Rat(0));  // absent atom

  // exact Q-linearity
  Rng rng(31);
  const PointSampler sampler(reg());
  AdditiveSpec rich;
  rich.c_b = Rat(2, 3);
  rich.c["sqrt2"] = Rat(-1, 2);
  rich.c["sqrt5"] = Rat(7, 4);
  for (int i = 0; i < 300; ++i) {
    const HamelNumber u = sampler.sample(rng);
    const HamelNumber v = sampler.sample(rng);
    const Rat p = sampler.rational(rng);
    CHECK(additive_eval(rich, p * u + v) ==
          p * additive_eval(rich, u) + additive_eval(rich, v));
  }
}

TEST_CASE("pointwise sums evaluate exactly") {
  AdditiveSpec theta;
  theta.c_b = Rat(0);
  theta.c["sqrt2"] = Rat(-1);
  const GroupFunction perturbed = fn_sum({GroupFunction::gmi_fn(), GroupFunction::additive(theta)});

  CHECK(evaluate(perturbed, rat_point(1, 4)) == rat_point(1, 2));  // theta vanishes on Q

  const HamelNumber a1 = HamelNumber::atom(reg(), "sqrt2");
  // gmi(sqrt2) - 1 = 2*sqrt2 - 3, about -0.1716
  CHECK(evaluate(perturbed, a1) == Rat(2) * a1 - rat_point(3, 1));
  CHECK(evaluate(perturbed, a1).sign_real() < 0);

  const GroupFunction pi_plus_zero =
      fn_sum({GroupFunction::pi(), GroupFunction::additive(AdditiveSpec{})});
  CHECK(evaluate(pi_plus_zero, HamelNumber::from_rational(b_point())) == rat_point(1, 1));

  // singleton sum identity
  Rng rng(37);
  const PointSampler sampler(reg());
  const GroupFunction single = fn_sum({GroupFunction::gmi_fn()});
  for (int i = 0; i < 100; ++i) {
    const HamelNumber x = sampler.sample(rng);
    CHECK(evaluate(single, x) == gmi(x));
  }
}

TEST_CASE("grid restrictions match the hand tables") {
  const FiniteGroupFunction pi6 = restrict_to_grid(GroupFunction::pi(), 6);
  const std::vector<Rat> pi6_expected{Rat(0), Rat(1, 3), Rat(2, 3), Rat(1), Rat(1, 3), Rat(2, 3)};
  CHECK(pi6.values == pi6_expected);
  CHECK(pi6.b_index() == 3);

  const FiniteGroupFunction gmi6 = restrict_to_grid(GroupFunction::gmi_fn(), 6);
  const std::vector<Rat> gmi6_expected{Rat(0), Rat(1, 3), Rat(2, 3), Rat(1), Rat(2, 3), Rat(1, 3)};
  CHECK(gmi6.values == gmi6_expected);

  const FiniteGroupFunction gmi4 = restrict_to_grid(GroupFunction::gmi_fn(), 4);
  const std::vector<Rat> gmi4_expected{Rat(0), Rat(1, 2), Rat(1), Rat(1, 2)};
  CHECK(gmi4.values == gmi4_expected);

  CHECK_THROWS_AS(restrict_to_grid(GroupFunction::pi(), 5), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_grid(GroupFunction::pi(), 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroupFunction::from_values({Rat(0), Rat(1), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("piecewise linear data reproduces gmi on the rationals") {
  PiecewiseLinearFn pwl;
  pwl.breakpoints = {Rat(0), Rat(1, 2)};
  pwl.values = {Rat(0), Rat(1)};
  const GroupFunction f = GroupFunction::piecewise_linear(pwl);

  for (long p = -24; p <= 24; ++p) {
    const Rat x(p, 12);
    CHECK(piecewise_linear_eval(pwl, x) ==
          gmi(HamelNumber::from_rational(x)).rational_value());
  }
  CHECK(restrict_to_grid(f, 4).values == restrict_to_grid(GroupFunction::gmi_fn(), 4).values);

  CHECK_THROWS_AS(evaluate(f, HamelNumber::atom(reg(), "sqrt2")), std::domain_error);

  PiecewiseLinearFn bad;
  bad.breakpoints = {Rat(1, 4)};
  bad.values = {Rat(0)};
  CHECK_THROWS_AS(piecewise_linear_eval(bad, Rat(1, 2)), std::invalid_argument);
}
