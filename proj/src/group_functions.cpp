#include "groupfn/group_functions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace groupfn {

Rat dense_pi(const HamelNumber& x) {
  const Rat& lb = x.b_coefficient();
  if (lb.is_odd_integer()) return Rat(1);
  return lb.frac();
}

HamelNumber gmi(const HamelNumber& x) {
  const HamelNumber r = split_mod_one(x).fractional_part;  // in [0, 1)
  switch (r.compare_to_rational(b_point())) {
    case Ordering::LT:
    case Ordering::EQ:
      return Rat(2) * r;
    case Ordering::GT:
      return HamelNumber::from_rational(Rat(2)) - Rat(2) * r;
  }
  throw std::logic_error("unreachable");
}

Rat additive_eval(const AdditiveSpec& theta, const HamelNumber& x) {
  Rat acc = theta.c_b * x.b_coefficient();
  for (const auto& [id, lam] : x.atom_coefficients()) {
    auto it = theta.c.find(id);
    if (it != theta.c.end()) acc += it->second * lam;
  }
  return acc;
}

GroupFunction fn_sum(std::vector<GroupFunction> parts) {
  return GroupFunction{SumFn{std::move(parts)}};
}

Rat piecewise_linear_eval(const PiecewiseLinearFn& f, const Rat& x) {
  if (f.breakpoints.empty() || f.breakpoints.size() != f.values.size())
    throw std::invalid_argument("piecewise linear: malformed breakpoint data");
  if (!(f.breakpoints.front() == Rat(0)))
    throw std::invalid_argument("piecewise linear: breakpoints must start at 0");
  const Rat t = x.frac();
  auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - f.breakpoints.begin()) - 1;
  const Rat x0 = f.breakpoints[i];
  const Rat y0 = f.values[i];
  const bool last = i + 1 == f.breakpoints.size();
  const Rat x1 = last ? Rat(1) : f.breakpoints[i + 1];
  const Rat y1 = last ? f.values[0] : f.values[i + 1];  // periodic wrap
  if (t == x0) return y0;
  return y0 + (t - x0) * (y1 - y0) / (x1 - x0);
}

HamelNumber evaluate(const GroupFunction& f, const HamelNumber& x) {
  struct Visitor {
    const HamelNumber& x;
    HamelNumber operator()(const DensePiFn&) const {
      return HamelNumber::from_rational(dense_pi(x));
    }
    HamelNumber operator()(const GmiFn&) const { return gmi(x); }
    HamelNumber operator()(const AdditiveSpec& t) const {
      return HamelNumber::from_rational(additive_eval(t, x));
    }
    HamelNumber operator()(const SumFn& s) const {
      HamelNumber acc;
      for (const auto& part : s.parts) acc = acc + evaluate(part, x);
      return acc;
    }
    HamelNumber operator()(const PiecewiseLinearFn& p) const {
      if (!x.is_rational())
        throw std::domain_error("piecewise linear functions are defined at rational points only");
      return HamelNumber::from_rational(piecewise_linear_eval(p, x.rational_value()));
    }
  };
  return std::visit(Visitor{x}, f.node);
}

FiniteGroupFunction FiniteGroupFunction::from_values(std::vector<Rat> v) {
  if (v.size() < 2 || v.size() % 2 != 0)
    throw std::invalid_argument("finite group function: n must be a positive even integer");
  FiniteGroupFunction g;
  g.n = static_cast<int>(v.size());
  g.values = std::move(v);
  return g;
}

FiniteGroupFunction restrict_to_grid(const GroupFunction& f, int n) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("restrict_to_grid: n must be a positive even integer");
  std::vector<Rat> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const HamelNumber val = evaluate(f, HamelNumber::from_rational(Rat(k, n)));
    if (!val.is_rational())
      throw std::domain_error("restrict_to_grid: irrational value at grid point " +
                              Rat(k, n).str());
    v.push_back(val.rational_value());
  }
  return FiniteGroupFunction::from_values(std::move(v));
}

}  // namespace groupfn
