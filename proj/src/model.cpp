#include "groupfn/model.hpp"

#include <stdexcept>

namespace groupfn {

HamelNumber Solution::weighted_sum() const {
  HamelNumber acc;
  for (const auto& t : support) acc = acc + Rat(t.multiplicity) * t.point;
  return acc;
}

Json Solution::to_json() const {
  Json arr = Json::array();
  for (const auto& t : support)
    arr.push_back(Json{{"point", hnum_json(t.point)}, {"mult", t.multiplicity}});
  return arr;
}

bool is_member(const Solution& y) {
  if (y.support.empty()) return false;  // the zero function is excluded by construction
  for (const auto& t : y.support)
    if (t.multiplicity < 1) return false;
  const HamelNumber d = y.weighted_sum() - HamelNumber::from_rational(b_point());
  return d.is_rational() && d.b_coefficient().is_even_integer();
}

Solution random_solution(const PointSampler& sampler, Rng& rng, const SolutionParams& p) {
  Solution y;
  const int support = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_support)));
  HamelNumber partial;
  for (int i = 0; i + 1 < support; ++i) {
    Solution::Term t;
    t.point = sampler.sample(rng);
    t.multiplicity = rng.range(1, p.max_multiplicity);
    bool dup = false;
    for (const auto& prev : y.support) dup = dup || prev.point == t.point;
    if (dup) continue;
    partial = partial + Rat(t.multiplicity) * t.point;
    y.support.push_back(std::move(t));
  }
  // Close the congruence: a final multiplicity-1 point b + z - partial.
  const long z0 = rng.range(-p.closing_z_range, p.closing_z_range);
  for (long off = 0; off <= 2 * p.closing_z_range + 1; ++off) {
    const long z = z0 + off;
    const HamelNumber closing =
        HamelNumber::from_rational(b_point()) + HamelNumber::from_integer(z) - partial;
    bool dup = false;
    for (const auto& prev : y.support) dup = dup || prev.point == closing;
    if (dup) continue;
    y.support.push_back({closing, 1});
    return y;
  }
  throw std::logic_error("random_solution: could not close the congruence without collision");
}

HamelNumber halfspace_value(const GroupFunction& f, const Solution& y) {
  HamelNumber acc;
  for (const auto& t : y.support) acc = acc + Rat(t.multiplicity) * evaluate(f, t.point);
  return acc;
}

bool check_validity(const GroupFunction& f, const Solution& y) {
  if (!is_member(y)) throw std::invalid_argument("check_validity: y is not a member");
  return halfspace_value(f, y).compare_to_rational(Rat(1)) != Ordering::LT;
}

Rat affine_hull_residual(const AdditiveSpec& theta, const Solution& y) {
  if (!theta.c_b.is_zero())
    throw std::invalid_argument("affine_hull_residual: theta must vanish on the rationals");
  if (!is_member(y)) throw std::invalid_argument("affine_hull_residual: y is not a member");
  Rat acc(0);
  for (const auto& t : y.support)
    acc += Rat(t.multiplicity) * additive_eval(theta, t.point);
  return acc - additive_eval(theta, HamelNumber::from_rational(b_point()));
}

bool equivalence_check(const GroupFunction& pi_fn, const AdditiveSpec& theta, const Solution& y) {
  if (!theta.c_b.is_zero())
    throw std::invalid_argument("equivalence_check: theta must vanish on the rationals");
  if (!is_member(y)) throw std::invalid_argument("equivalence_check: y is not a member");
  const GroupFunction sum = fn_sum({pi_fn, GroupFunction::additive(theta)});
  return halfspace_value(pi_fn, y) == halfspace_value(sum, y);
}

NonnegDemo nonneg_form_demo(const RegistryPtr& reg, const AdditiveSpec& theta, long search_range) {
  if (!theta.c_b.is_zero() || theta.c.empty())
    throw std::invalid_argument("nonneg_form_demo: theta must have c_b = 0 and c != 0");
  for (const auto& [id, c] : theta.c)
    if (c.is_zero()) throw std::invalid_argument("nonneg_form_demo: zero coefficient for " + id);

  NonnegDemo demo;
  demo.perturbed = fn_sum({GroupFunction::gmi_fn(), GroupFunction::additive(theta)});
  AdditiveSpec undo;
  undo.c_b = Rat(0);
  for (const auto& [id, c] : theta.c) undo.c.emplace(id, -c);
  demo.corrected = fn_sum({demo.perturbed, GroupFunction::additive(undo)});

  for (long k = 1; k <= search_range; ++k) {
    for (const auto& [id, c] : theta.c) {
      for (int sign : {+1, -1}) {
        const HamelNumber x = HamelNumber::atom(reg, id, Rat(sign * k));
        const HamelNumber v = evaluate(demo.perturbed, x);
        if (v.sign_real() < 0) {
          demo.witness = x;
          demo.witness_value = v.approx(Rat(1, 1 << 20));
          if (evaluate(demo.corrected, demo.witness).sign_real() < 0)
            throw std::logic_error("corrected function negative at the witness");
          return demo;
        }
      }
    }
  }
  throw std::runtime_error("nonneg_form_demo: no negativity witness within the search budget");
}

}  // namespace groupfn
