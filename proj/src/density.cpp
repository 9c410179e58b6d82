#include "groupfn/density.hpp"

#include <stdexcept>

namespace groupfn {

namespace {

// Nearest rational with denominator 2^bits.
Rat round_to_dyadic(const Rat& t, long bits) {
  const Rat scale = Rat::pow2(bits);
  return Rat((t * scale + Rat(1, 2)).floor()) / scale;
}

}  // namespace

GraphHit hit_target(const Rat& x_star, const Rat& y_star, const Rat& eps, const RegistryPtr& reg,
                    const AtomId& atom) {
  if (y_star < Rat(0) || y_star > Rat(1))
    throw std::invalid_argument("hit_target: y* must lie in [0, 1]");
  if (eps.sign() <= 0) throw std::invalid_argument("hit_target: eps must be positive");
  if (!reg) throw std::invalid_argument("hit_target: null registry");

  const Rat mu = y_star == Rat(1) ? Rat(1) : y_star;
  const Rat residual = x_star - mu * b_point();

  Rat lambda(0);
  if (!residual.is_zero()) {
    Rat width = eps / Rat(8);
    long bits = 3;
    while (Rat::pow2(-bits) > eps / Rat(8)) ++bits;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 64) throw std::logic_error("hit_target: atom coefficient did not converge");
      const QInterval enc = reg->enclose(atom, width);
      if (enc.midpoint().is_zero()) {  // bracket still straddles zero
        width = width / Rat(16);
        continue;
      }
      lambda = round_to_dyadic(residual / enc.midpoint(), bits);
      // residual error interval: lambda * atom - residual
      const QInterval err = (lambda * enc).shifted(-residual);
      if (-(eps / Rat(2)) < err.lo && err.hi < eps / Rat(2)) break;
      width = width / Rat(16);
      bits += 4;
    }
  }

  GraphHit hit;
  hit.x = HamelNumber::from_rational(mu * b_point()) + HamelNumber::atom(reg, atom, lambda);
  hit.pi_value = dense_pi(hit.x);
  hit.target_x = x_star;
  hit.target_y = y_star;
  hit.eps = eps;
  hit.x_interval = hit.x.approx(eps / Rat(4));
  if (!(hit.pi_value == y_star))
    throw std::logic_error("hit_target: constructed point misses the target value");
  const Rat mid_err = (hit.x_interval.midpoint() - x_star).abs();
  if (!(mid_err + hit.x_interval.width() / Rat(2) < eps))
    throw std::logic_error("hit_target: constructed point misses the target abscissa");
  return hit;
}

std::vector<GraphHit> graph_cloud(const std::vector<Rat>& x_grid, const std::vector<Rat>& y_grid,
                                  const Rat& eps, const RegistryPtr& reg, const AtomId& atom) {
  if (x_grid.empty() || y_grid.empty())
    throw std::invalid_argument("graph_cloud: grids must be nonempty");
  std::vector<GraphHit> hits;
  hits.reserve(x_grid.size() * y_grid.size());
  for (const Rat& x : x_grid)
    for (const Rat& y : y_grid) hits.push_back(hit_target(x, y, eps, reg, atom));
  return hits;
}

GraphHit discontinuity_witness(const Rat& x0, int k, const RegistryPtr& reg, const AtomId& atom) {
  if (k < 0) throw std::invalid_argument("discontinuity_witness: k must be nonnegative");
  const Rat pi0 = dense_pi(HamelNumber::from_rational(x0));
  const Rat y_star = pi0 <= Rat(1, 2) ? pi0 + Rat(1, 2) : pi0 - Rat(1, 2);
  return hit_target(x0, y_star, Rat::pow2(-k), reg, atom);
}

}  // namespace groupfn
