#include "groupfn/extremality.hpp"

#include "groupfn/minimality.hpp"

#include <stdexcept>

namespace groupfn {

CheckReport claim_reduction_check(const PointSampler& sampler, std::uint64_t samples,
                                  std::uint64_t seed, unsigned threads) {
  return run_sampled_check(
      "claim-reduction", seed, samples,
      [&](Rng& rng, CheckReport& rep) {
        const HamelNumber x = sampler.sample(rng);
        const Rat mu = x.b_coefficient();
        const HamelNumber mb = HamelNumber::from_rational(mu * b_point());  // mu * b
        const HamelNumber y = mb - x;
        const Rat pix = dense_pi(x);
        bool ok = pix == dense_pi(mb);
        ok = ok && dense_pi(y) == Rat(0);
        ok = ok && pix + dense_pi(y) == dense_pi(x + y);
        if (!ok)
          rep.add_violation(Json{{"x", hnum_json(x)},
                                 {"pi(x)", rat_json(pix)},
                                 {"pi(mu*b)", rat_json(dense_pi(mb))},
                                 {"pi(y)", rat_json(dense_pi(y))}});
      },
      threads);
}

CheckReport verify_proof_cases(long q_max) {
  if (q_max < 1) throw std::invalid_argument("verify_proof_cases: q_max must be >= 1");
  CheckReport rep;
  rep.check = "proof-cases";

  const auto pi_at = [](const Rat& mu) {  // pi at the point mu*b
    return dense_pi(HamelNumber::from_rational(mu * b_point()));
  };
  const auto expect = [&rep](bool ok, int the_case, long q, long p, const Rat& got,
                             const Rat& want) {
    ++rep.samples;
    if (!ok)
      rep.add_violation(Json{{"case", the_case}, {"q", q}, {"p", p},
                             {"got", rat_json(got)}, {"want", rat_json(want)}});
  };

  for (long q = 1; q <= q_max; ++q) {
    {
      const Rat v = pi_at(Rat(1, q));
      expect(Rat(q) * v == Rat(1), 1, q, 1, Rat(q) * v, Rat(1));
    }
    for (long p = 0; p <= q; ++p) {
      const Rat v = pi_at(Rat(p, q));
      expect(v == Rat(p, q), 2, q, p, v, Rat(p, q));
    }
    for (long p = q + 1; 2 * p <= 3 * q; ++p) {
      const Rat x(p, q);
      const Rat y = Rat(3) - Rat(2) * x;  // b-coefficient of 3b - 2x
      expect(pi_at(y) == Rat(3 * q - 2 * p, q), 3, q, p, pi_at(y), Rat(3 * q - 2 * p, q));
      const Rat sum_pt = x + y;  // = 3 - x, the b-coefficient of x + y
      expect(pi_at(sum_pt) == Rat(1) - pi_at(x), 3, q, p, pi_at(sum_pt), Rat(1) - pi_at(x));
      expect(pi_at(x) == Rat(p, q) - Rat(1), 3, q, p, pi_at(x), Rat(p, q) - Rat(1));
    }
    for (long p = 1; p < 2 * q; ++p) {
      if (2 * p <= 3 * q) continue;
      const Rat x(p, q);
      const Rat reflected = Rat(3) - x;  // in case-3 range
      expect(pi_at(x) == Rat(1) - pi_at(reflected), 4, q, p, pi_at(x),
             Rat(1) - pi_at(reflected));
    }
  }
  return rep;
}

TightnessSystem tightness_graph(const FiniteGroupFunction& F) {
  const CheckReport minimal = verify_minimal_finite(F);
  if (!minimal.pass())
    throw std::domain_error("tightness_graph: source function is not minimal on the grid");

  TightnessSystem sys;
  sys.n = F.n;
  const int n = F.n;
  const auto row = [n]() { return std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)); };

  {
    auto e = row();
    e[0] = Rat(1);
    sys.lhs.push_back(std::move(e));
    sys.rhs.push_back(Rat(0));  // g[0] = 0
  }
  {
    auto e = row();
    e[static_cast<std::size_t>(F.b_index())] = Rat(1);
    sys.lhs.push_back(std::move(e));
    sys.rhs.push_back(Rat(1));  // g[b] = 1
  }
  for (int k = 0; k < n; ++k) {
    auto e = row();
    const int m = ((F.b_index() - k) % n + n) % n;
    e[static_cast<std::size_t>(k)] += Rat(1);
    e[static_cast<std::size_t>(m)] += Rat(1);
    sys.lhs.push_back(std::move(e));
    sys.rhs.push_back(Rat(1));  // g[k] + g[b-k] = 1
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {  // unordered pairs; (v,u) adds the same equation
      const int w = (u + v) % n;
      if (!(F.values[static_cast<std::size_t>(u)] + F.values[static_cast<std::size_t>(v)] ==
            F.values[static_cast<std::size_t>(w)]))
        continue;
      auto e = row();
      e[static_cast<std::size_t>(u)] += Rat(1);
      e[static_cast<std::size_t>(v)] += Rat(1);
      e[static_cast<std::size_t>(w)] -= Rat(1);
      sys.tight_triples.push_back({u, v, w});
      sys.lhs.push_back(std::move(e));
      sys.rhs.push_back(Rat(0));
    }
  }
  return sys;
}

Json Certificate::to_json() const {
  Json j{{"verdict", verdict == Verdict::Unique ? "UNIQUE" : "NON_UNIQUE"},
         {"n", n},
         {"values", Json::array()}};
  for (const auto& v : values) j["values"].push_back(rat_json(v));
  if (verdict == Verdict::NonUnique) {
    j["kernel_basis"] = Json::array();
    for (const auto& h : kernel_basis) {
      Json hv = Json::array();
      for (const auto& c : h) hv.push_back(rat_json(c));
      j["kernel_basis"].push_back(std::move(hv));
    }
    Json dir = Json::array();
    for (const auto& c : direction) dir.push_back(rat_json(c));
    j["direction"] = std::move(dir);
    j["eps"] = rat_json(eps);
  }
  return j;
}

Certificate finite_uniqueness_certificate(const FiniteGroupFunction& F) {
  const TightnessSystem sys = tightness_graph(F);
  const LinearSolution sol = solve_exact(sys.lhs, sys.rhs);
  if (!sol.feasible)
    throw std::logic_error("tightness system infeasible although F solves it");

  Certificate cert;
  cert.n = F.n;
  cert.values = F.values;

  if (sol.kernel.empty()) {
    if (!(sol.particular == F.values))
      throw std::logic_error("unique tightness solution differs from the source values");
    cert.verdict = Certificate::Verdict::Unique;
    return cert;
  }

  cert.verdict = Certificate::Verdict::NonUnique;
  cert.kernel_basis = sol.kernel;
  cert.direction = sol.kernel.front();

  // Largest 1/2^k below slack/(2*max|h|), where slack is the smallest strict
  // subadditivity margin; then halve until F +/- eps*h re-verify as minimal.
  const int n = F.n;
  Rat slack(1);
  bool have_slack = false;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const Rat margin = F.values[static_cast<std::size_t>(u)] +
                         F.values[static_cast<std::size_t>(v)] -
                         F.values[static_cast<std::size_t>((u + v) % n)];
      if (margin.sign() > 0 && (!have_slack || margin < slack)) {
        slack = margin;
        have_slack = true;
      }
    }
  }
  Rat hmax(0);
  for (const auto& c : cert.direction) hmax = max(hmax, c.abs());
  if (!have_slack || hmax.is_zero())
    throw std::logic_error("degenerate kernel direction in uniqueness certificate");

  const Rat bound = slack / (Rat(2) * hmax);
  Rat eps(1);
  while (eps > bound) eps = eps / Rat(2);

  const auto perturbed = [&](const Rat& e, int sign) {
    FiniteGroupFunction g = F;
    for (int k = 0; k < n; ++k)
      g.values[static_cast<std::size_t>(k)] +=
          Rat(sign) * e * cert.direction[static_cast<std::size_t>(k)];
    return g;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (verify_minimal_finite(perturbed(eps, +1)).pass() &&
        verify_minimal_finite(perturbed(eps, -1)).pass()) {
      cert.eps = eps;
      return cert;
    }
    eps = eps / Rat(2);
  }
  throw std::logic_error("could not validate a perturbation step for the kernel direction");
}

}  // namespace groupfn
