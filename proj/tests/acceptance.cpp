// Acceptance suite: every check is exact (rational equality / verified
// enclosures); each criterion also carries a wall-clock budget. Run with no
// arguments for the full suite, or pass criterion numbers to run a subset.

#include "groupfn/density.hpp"
#include "groupfn/extremality.hpp"
#include "groupfn/minimality.hpp"
#include "groupfn/model.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace groupfn;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<bool(std::string&)> body;
};

RegistryPtr registry_23() {
  return AtomRegistry::make({
      {"sqrt2", {mpz_class(-2), mpz_class(0), mpz_class(1)}, QInterval(Rat(1), Rat(2)), "sqrt2"},
      {"sqrt3", {mpz_class(-3), mpz_class(0), mpz_class(1)}, QInterval(Rat(1), Rat(2)), "sqrt3"},
  });
}

bool criterion_minimality_suite(std::string& note) {
  const auto reg = registry_23();
  const PointSampler sampler(reg);
  const GroupFunction pi = GroupFunction::pi();
  const std::uint64_t n = 100000;
  std::uint64_t total = 0;
  bool ok = true;
  for (const CheckReport& rep : {check_subadditivity(pi, sampler, n, 20260810),
                                 check_symmetry(pi, sampler, n, 20260810),
                                 check_integers_zero_sampled(pi, n, 20260810),
                                 check_periodicity(pi, sampler, n, 20260810)}) {
    ok = ok && rep.pass();
    total += rep.samples;
  }
  note = std::to_string(total) + " exact checks, 0 counterexamples";
  return ok;
}

bool criterion_anchor_values(std::string& note) {
  bool ok = dense_pi(HamelNumber::from_rational(b_point())) == Rat(1);
  for (long z = -5; z <= 5; ++z)
    ok = ok && dense_pi(HamelNumber::from_integer(z)) == Rat(0);
  for (long q = 1; q <= 100; ++q)
    ok = ok && dense_pi(HamelNumber::from_rational(b_point() / Rat(q))) == Rat(1, q);
  note = "pi(b), pi(Z), pi(b/q) for q <= 100";
  return ok;
}

bool criterion_proof_cases(std::string& note) {
  const CheckReport rep = verify_proof_cases(100);
  note = std::to_string(rep.samples) + " identities";
  return rep.pass();
}

bool criterion_claim_reduction(std::string& note) {
  const PointSampler sampler(AtomRegistry::builtin());
  const CheckReport rep = claim_reduction_check(sampler, 10000, 42);
  note = std::to_string(rep.samples) + " reductions";
  return rep.pass();
}

bool criterion_finite_certificates(std::string& note) {
  bool ok = true;
  int unique_count = 0;
  for (int n = 4; n <= 24; n += 2) {
    const FiniteGroupFunction F = restrict_to_grid(GroupFunction::pi(), n);
    ok = ok && verify_minimal_finite(F).pass();
    const Certificate cert = finite_uniqueness_certificate(F);
    if (cert.verdict == Certificate::Verdict::Unique) {
      ++unique_count;
      ok = ok && cert.kernel_basis.empty();
    } else {
      // self-consistency: the carried perturbation must verify
      ok = ok && cert.eps > Rat(0);
      for (int sign : {+1, -1}) {
        FiniteGroupFunction g = F;
        for (int k = 0; k < n; ++k)
          g.values[static_cast<std::size_t>(k)] +=
              Rat(sign) * cert.eps * cert.direction[static_cast<std::size_t>(k)];
        ok = ok && verify_minimal_finite(g).pass();
      }
    }
  }

  // hand-solved oracles
  ok = ok && finite_uniqueness_certificate(restrict_to_grid(GroupFunction::gmi_fn(), 4)).verdict ==
                 Certificate::Verdict::Unique;
  ok = ok && finite_uniqueness_certificate(restrict_to_grid(GroupFunction::pi(), 6)).verdict ==
                 Certificate::Verdict::Unique;

  // negative control: midpoint of two distinct minimal functions on n = 6
  const FiniteGroupFunction p6 = restrict_to_grid(GroupFunction::pi(), 6);
  const FiniteGroupFunction g6 = restrict_to_grid(GroupFunction::gmi_fn(), 6);
  std::vector<Rat> mixed;
  for (int k = 0; k < 6; ++k)
    mixed.push_back(Rat(1, 2) * (p6.values[static_cast<std::size_t>(k)] +
                                 g6.values[static_cast<std::size_t>(k)]));
  const FiniteGroupFunction mid = FiniteGroupFunction::from_values(std::move(mixed));
  const Certificate cert = finite_uniqueness_certificate(mid);
  ok = ok && cert.verdict == Certificate::Verdict::NonUnique && cert.eps > Rat(0);
  for (int sign : {+1, -1}) {
    FiniteGroupFunction g = mid;
    for (int k = 0; k < 6; ++k)
      g.values[static_cast<std::size_t>(k)] +=
          Rat(sign) * cert.eps * cert.direction[static_cast<std::size_t>(k)];
    ok = ok && verify_minimal_finite(g).pass();
  }

  note = "n in {4..24}: " + std::to_string(unique_count) + " UNIQUE; midpoint control NON_UNIQUE";
  return ok;
}

bool criterion_affine_hull(std::string& note) {
  const auto reg = AtomRegistry::builtin();
  const PointSampler sampler(reg);
  const GroupFunction pi = GroupFunction::pi();

  std::vector<AdditiveSpec> thetas;
  {
    std::uint64_t s = mix_seed(20260810, "affine-thetas");
    Rng rng(s);
    while (thetas.size() < 5) {
      AdditiveSpec t;
      t.c_b = Rat(0);
      for (const auto& a : reg->atoms()) {
        const Rat c = sampler.rational(rng);
        if (!c.is_zero()) t.c[a.id] = c;
      }
      if (!t.c.empty()) thetas.push_back(std::move(t));
    }
  }

  const CheckReport rep = run_sampled_check(
      "affine-hull", 20260810, 10000,
      [&](Rng& rng, CheckReport& r) {
        const Solution y = random_solution(sampler, rng);
        for (const auto& theta : thetas) {
          const bool zero = affine_hull_residual(theta, y).is_zero();
          const bool equiv = equivalence_check(pi, theta, y);
          if (!zero || !equiv) r.add_violation(Json{{"y", y.to_json()}});
        }
      });
  note = "10000 members x 5 thetas";
  return rep.pass();
}

bool criterion_validity(std::string& note) {
  const auto reg = AtomRegistry::builtin();
  const PointSampler sampler(reg);
  const GroupFunction pi = GroupFunction::pi();
  const CheckReport rep = run_sampled_check(
      "validity", 20260810, 10000,
      [&](Rng& rng, CheckReport& r) {
        Solution y;
        if (rng.below(16) == 0) {
          const long q = rng.range(1, 12);
          y.support.push_back({HamelNumber::from_rational(b_point() / Rat(q)), q});
        } else {
          y = random_solution(sampler, rng);
        }
        switch (halfspace_value(pi, y).compare_to_rational(Rat(1))) {
          case Ordering::LT: r.add_violation(Json{{"y", y.to_json()}}); break;
          case Ordering::EQ: r.add_tight(Json::object()); break;
          case Ordering::GT: break;
        }
      });
  note = "tight fraction " + std::to_string(static_cast<double>(rep.tight_count) /
                                            static_cast<double>(rep.samples));
  return rep.pass() && rep.tight_count > 0;
}

bool criterion_density(std::string& note) {
  const auto reg = AtomRegistry::builtin();
  const Rat eps(1, 10000);

  std::vector<Rat> xg, yg;
  for (int i = 0; i <= 20; ++i) xg.push_back(Rat(i, 20));  // 21 targets
  for (int i = 0; i <= 10; ++i) yg.push_back(Rat(i, 10));  // 11 targets
  bool ok = true;
  const auto hits = graph_cloud(xg, yg, eps, reg, "sqrt2");
  ok = ok && hits.size() == 21 * 11;
  for (const auto& h : hits) {
    ok = ok && h.pi_value == h.target_y;
    const Rat mid_err = (h.x_interval.midpoint() - h.target_x).abs();
    ok = ok && mid_err + h.x_interval.width() / Rat(2) < eps;
  }

  int witnesses = 0;
  for (long p = 0; p < 100; ++p) {
    const Rat x0(p, 37);
    const GraphHit w = discontinuity_witness(x0, 20, reg, "sqrt2");
    const Rat gap = (w.pi_value - dense_pi(HamelNumber::from_rational(x0))).abs();
    const Rat dist =
        (w.x_interval.midpoint() - x0).abs() + w.x_interval.width() / Rat(2);
    if (gap >= Rat(1, 2) && dist <= Rat::pow2(-20)) ++witnesses;
  }
  ok = ok && witnesses == 100;
  note = "231 grid hits at eps 1/10000; 100 witnesses at 2^-20";
  return ok;
}

bool criterion_nonneg_demo(std::string& note) {
  const auto reg = AtomRegistry::builtin();
  const PointSampler sampler(reg);
  bool ok = true;
  for (const Rat& c : {Rat(-1), Rat(-1, 10)}) {
    AdditiveSpec theta;
    theta.c_b = Rat(0);
    theta.c["sqrt2"] = c;
    const NonnegDemo demo = nonneg_form_demo(reg, theta);
    ok = ok && demo.witness_value.hi < Rat(0);
    const CheckReport rep = run_sampled_check(
        "corrected-equals-gmi", 20260810, 1000,
        [&](Rng& rng, CheckReport& r) {
          const HamelNumber x = sampler.sample(rng);
          if (!(evaluate(demo.corrected, x) == gmi(x)))
            r.add_violation(Json{{"x", hnum_json(x)}});
        });
    ok = ok && rep.pass();
  }
  note = "witnesses for c in {-1, -1/10}; corrected == gmi at 1000 points each";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  const std::vector<Criterion> criteria{
      {1, "minimality suite for pi over {sqrt2, sqrt3}", 60.0, criterion_minimality_suite},
      {2, "anchor values", 1.0, criterion_anchor_values},
      {3, "proof-case identities up to q = 100", 10.0, criterion_proof_cases},
      {4, "claim reduction on 10^4 random points", 10.0, criterion_claim_reduction},
      {5, "finite certificates for n in {4,...,24} with controls", 30.0,
       criterion_finite_certificates},
      {6, "affine hull residuals and equivalence", 30.0, criterion_affine_hull},
      {7, "validity of pi on 10^4 random members", 30.0, criterion_validity},
      {8, "graph density and discontinuity witnesses", 30.0, criterion_density},
      {9, "nonnegative-form demo", 10.0, criterion_nonneg_demo},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
      ok = false;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.time_limit_s;
    all_ok = all_ok && ok && in_time;
    std::printf("[%s] criterion %d: %s — %s (%.2fs / limit %.0fs)%s\n",
                ok && in_time ? "PASS" : "FAIL", c.id, c.title.c_str(), note.c_str(), elapsed,
                c.time_limit_s, in_time ? "" : " [over time budget]");
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
