#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupfn/model.hpp"

using namespace groupfn;

namespace {

const RegistryPtr& reg() {
  static const RegistryPtr r = AtomRegistry::builtin();
  return r;
}

Solution single(const HamelNumber& x, long mult = 1) {
  Solution y;
  y.support.push_back({x, mult});
  return y;
}

AdditiveSpec theta_sqrt2(const Rat& c) {
  AdditiveSpec t;
  t.c_b = Rat(0);
  t.c["sqrt2"] = c;
  return t;
}

}  // namespace

TEST_CASE("membership is an exact congruence") {
  const HamelNumber b = HamelNumber::from_rational(b_point());
  CHECK(is_member(single(b)));
  CHECK_FALSE(is_member(Solution{}));  // empty support

  const HamelNumber a1 = HamelNumber::atom(reg(), "sqrt2");
  Solution pair;
  pair.support.push_back({a1, 1});
  pair.support.push_back({b - a1, 1});
  CHECK(is_member(pair));  // atoms cancel, sum is b

  CHECK(is_member(single(HamelNumber::from_rational(b_point() / Rat(3)), 3)));  // 3*(b/3)
  CHECK(is_member(single(b + HamelNumber::from_integer(-2))));                  // shift by Z
  CHECK_FALSE(is_member(single(a1)));
  CHECK_FALSE(is_member(single(HamelNumber::from_rational(Rat(1, 3)))));
}

TEST_CASE("generated solutions always satisfy the congruence") {
  const PointSampler sampler(reg());
  Rng rng(321);
  for (int i = 0; i < 500; ++i) {
    const Solution y = random_solution(sampler, rng);
    CHECK(is_member(y));
    CHECK(y.support.size() <= 6);
    for (std::size_t a = 0; a < y.support.size(); ++a) {
      CHECK(y.support[a].multiplicity >= 1);
      for (std::size_t c = a + 1; c < y.support.size(); ++c)
        CHECK_FALSE(y.support[a].point == y.support[c].point);
    }
  }
}

TEST_CASE("halfspace values of pi at the classic members") {
  const GroupFunction pi = GroupFunction::pi();
  const HamelNumber b = HamelNumber::from_rational(b_point());
  CHECK(halfspace_value(pi, single(b)) == HamelNumber::from_rational(Rat(1)));
  CHECK(halfspace_value(pi, single(HamelNumber::from_rational(b_point() / Rat(3)), 3)) ==
        HamelNumber::from_rational(Rat(1)));

  const HamelNumber a1 = HamelNumber::atom(reg(), "sqrt2");
  Solution pair;
  pair.support.push_back({a1, 1});
  pair.support.push_back({b - a1, 1});
  CHECK(halfspace_value(pi, pair) == HamelNumber::from_rational(Rat(1)));  // 0 + 1

  CHECK(check_validity(pi, single(HamelNumber::from_rational(Rat(1, 4)), 2)));  // 2 * 1/2
}

TEST_CASE("gmi is valid on members, including irrational supports") {
  const GroupFunction g = GroupFunction::gmi_fn();
  const HamelNumber b = HamelNumber::from_rational(b_point());
  CHECK(check_validity(g, single(b)));

  const HamelNumber a1 = HamelNumber::atom(reg(), "sqrt2");
  Solution pair;
  pair.support.push_back({a1, 1});
  pair.support.push_back({b - a1, 1});
  // gmi(sqrt2) = 2*sqrt2-2 and gmi(b - sqrt2) = 3-2*sqrt2 sum to exactly 1
  CHECK(halfspace_value(g, pair) == HamelNumber::from_rational(Rat(1)));
  CHECK(check_validity(g, pair));

  CHECK_THROWS_AS(check_validity(g, single(a1)), std::invalid_argument);  // not a member
}

TEST_CASE("pi is valid on a batch of random members") {
  const GroupFunction pi = GroupFunction::pi();
  const PointSampler sampler(reg());
  Rng rng(654);
  for (int i = 0; i < 400; ++i) CHECK(check_validity(pi, random_solution(sampler, rng)));
}

TEST_CASE("affine hull residuals vanish on members") {
  const HamelNumber b = HamelNumber::from_rational(b_point());
  CHECK(affine_hull_residual(theta_sqrt2(Rat(1)), single(b)) == Rat(0));

  const HamelNumber a1 = HamelNumber::atom(reg(), "sqrt2");
  Solution pair;
  pair.support.push_back({a1, 1});
  pair.support.push_back({b - a1, 1});
  CHECK(affine_hull_residual(theta_sqrt2(Rat(1)), pair) == Rat(0));  // +1 and -1 cancel

  CHECK(affine_hull_residual(theta_sqrt2(Rat(5)),
                             single(HamelNumber::from_rational(b_point() / Rat(3)), 3)) == Rat(0));

  AdditiveSpec with_cb;
  with_cb.c_b = Rat(1);
  CHECK_THROWS_AS(affine_hull_residual(with_cb, single(b)), std::invalid_argument);
}

TEST_CASE("residuals vanish and equivalence holds over random members and thetas") {
  const PointSampler sampler(reg());
  Rng rng(987);
  const GroupFunction pi = GroupFunction::pi();
  const GroupFunction g = GroupFunction::gmi_fn();
  for (int i = 0; i < 250; ++i) {
    AdditiveSpec theta;
    theta.c_b = Rat(0);
    for (const auto& a : reg()->atoms())
      if (rng.below(2) == 0) {
        const Rat c = sampler.rational(rng);
        if (!c.is_zero()) theta.c[a.id] = c;
      }
    const Solution y = random_solution(sampler, rng);
    CHECK(affine_hull_residual(theta, y) == Rat(0));
    CHECK(equivalence_check(pi, theta, y));
    CHECK(equivalence_check(g, theta, y));

    // linear accounting: value(f + theta) = value(f) + residual + theta(b)
    const GroupFunction sum = fn_sum({pi, GroupFunction::additive(theta)});
    const HamelNumber lhs = halfspace_value(sum, y);
    const HamelNumber rhs =
        halfspace_value(pi, y) +
        HamelNumber::from_rational(affine_hull_residual(theta, y)) +
        HamelNumber::from_rational(additive_eval(theta, HamelNumber::from_rational(b_point())));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("equivalence on the worked pairs") {
  const HamelNumber b = HamelNumber::from_rational(b_point());
  const HamelNumber a1 = HamelNumber::atom(reg(), "sqrt2");
  Solution pair;
  pair.support.push_back({a1, 1});
  pair.support.push_back({b - a1, 1});
  CHECK(equivalence_check(GroupFunction::gmi_fn(), theta_sqrt2(Rat(-1)), pair));
  CHECK(equivalence_check(GroupFunction::pi(), AdditiveSpec{}, pair));  // zero theta
  CHECK(equivalence_check(GroupFunction::pi(), theta_sqrt2(Rat(7)),
                          single(HamelNumber::from_rational(b_point() / Rat(3)), 3)));
}

TEST_CASE("negativity witness and correction for perturbed gmi") {
  {
    const NonnegDemo demo = nonneg_form_demo(reg(), theta_sqrt2(Rat(-1)));
    // first scan point sqrt2 already works: gmi(sqrt2) - 1 = 2*sqrt2 - 3 < 0
    CHECK(demo.witness == HamelNumber::atom(reg(), "sqrt2"));
    CHECK(demo.witness_value.hi < Rat(0));
    CHECK(evaluate(demo.corrected, demo.witness).sign_real() > 0);
  }
  {
    const NonnegDemo demo = nonneg_form_demo(reg(), theta_sqrt2(Rat(-1, 10)));
    const Rat k = demo.witness.atom_coefficients().at("sqrt2");
    CHECK(k.is_integer());
    CHECK(k.abs() <= Rat(20));
    CHECK(evaluate(demo.perturbed, demo.witness).sign_real() < 0);

    // corrected function is exactly gmi everywhere we look
    const PointSampler sampler(reg());
    Rng rng(111);
    for (int i = 0; i < 200; ++i) {
      const HamelNumber x = sampler.sample(rng);
      CHECK(evaluate(demo.corrected, x) == gmi(x));
    }
  }
  CHECK_THROWS_AS(nonneg_form_demo(reg(), AdditiveSpec{}), std::invalid_argument);
}

TEST_CASE("solution JSON carries points and multiplicities") {
  const Solution y = single(HamelNumber::from_rational(b_point() / Rat(3)), 3);
  const Json j = y.to_json();
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["mult"] == 3);
  CHECK(j[0]["point"]["lambda_b"] == "1/3");
}
