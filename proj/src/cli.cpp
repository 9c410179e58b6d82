#include "groupfn/cli.hpp"

#include "groupfn/density.hpp"
#include "groupfn/extremality.hpp"
#include "groupfn/json_io.hpp"
#include "groupfn/minimality.hpp"
#include "groupfn/model.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

namespace groupfn::cli {

namespace {

RegistryPtr resolve_registry(const std::string& path_flag) {
  if (!path_flag.empty()) return load_registry_file(path_flag);
  if (const char* env = std::getenv("GROUPFN_REGISTRY"); env && *env)
    return load_registry_file(env);
  return AtomRegistry::builtin();
}

void emit(const Json& report, const std::string& out_path) {
  if (!out_path.empty()) write_text_file(out_path, report.dump(2) + "\n");
}

void print_check_line(const CheckReport& rep) {
  std::cout << (rep.pass() ? "[PASS] " : "[FAIL] ") << rep.check << ": " << rep.samples
            << " samples, " << rep.violations << " counterexamples";
  if (rep.tight_count > 0) std::cout << ", " << rep.tight_count << " tight";
  std::cout << "\n";
}

// "a:b:step" (inclusive) or a single rational "x".
std::vector<Rat> parse_grid(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  const auto rat = [](const std::string& t) {
    auto r = Rat::parse(t);
    if (!r) throw CLI::ValidationError("grid", "not a rational: '" + t + "'");
    return *r;
  };
  if (parts.size() == 1) return {rat(parts[0])};
  if (parts.size() != 3) throw CLI::ValidationError("grid", "expected a:b:step, got '" + s + "'");
  const Rat a = rat(parts[0]), b = rat(parts[1]), step = rat(parts[2]);
  if (step.sign() <= 0) throw CLI::ValidationError("grid", "step must be positive");
  std::vector<Rat> grid;
  for (Rat v = a; v <= b; v += step) grid.push_back(v);
  if (grid.empty()) throw CLI::ValidationError("grid", "empty grid '" + s + "'");
  return grid;
}

std::string csv_escape_free_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_check_minimal(const std::string& fn_spec, const RegistryPtr& reg, std::uint64_t samples,
                      std::uint64_t seed, unsigned threads, const std::string& out) {
  const GroupFunction f = parse_function_spec(fn_spec, reg);
  const PointSampler sampler(reg);

  std::vector<CheckReport> checks;
  checks.push_back(check_subadditivity(f, sampler, samples, seed, threads));
  checks.push_back(check_symmetry(f, sampler, samples, seed, threads));
  checks.push_back(check_integers_zero_sampled(f, samples, seed, 1000000, threads));
  checks.push_back(check_periodicity(f, sampler, samples, seed, threads));
  // Informational: not part of the exit verdict (additive perturbations keep
  // the four conditions above but can dip below zero).
  const CheckReport nonneg = check_nonnegativity(f, sampler, samples, seed, 25, threads);

  bool pass = true;
  Json arr = Json::array();
  for (const auto& rep : checks) {
    print_check_line(rep);
    pass = pass && rep.pass();
    arr.push_back(rep.to_json());
  }
  std::cout << "[" << (nonneg.pass() ? "info" : "INFO") << "] nonnegativity: "
            << nonneg.violations << " negative values in " << nonneg.samples << " samples\n";

  Json report = report_header("check-minimal",
                              Json{{"fn", fn_spec},
                                   {"samples", samples},
                                   {"seed", seed}},
                              reg);
  report["checks"] = std::move(arr);
  report["nonnegativity"] = nonneg.to_json();
  report["verdict"] = pass ? "pass" : "fail";
  emit(report, out);
  return pass ? kOk : kCounterexample;
}

int run_check_extreme_finite(const std::string& fn_spec, const RegistryPtr& reg, int n,
                             const std::string& out) {
  const GroupFunction f = parse_function_spec(fn_spec, reg);
  const FiniteGroupFunction F = restrict_to_grid(f, n);
  const CheckReport minimal = verify_minimal_finite(F);
  print_check_line(minimal);

  Json report = report_header("check-extreme-finite", Json{{"fn", fn_spec}, {"n", n}}, reg);
  report["minimal"] = minimal.to_json();
  if (!minimal.pass()) {
    report["verdict"] = "fail";
    emit(report, out);
    return kCounterexample;
  }
  const Certificate cert = finite_uniqueness_certificate(F);
  report["certificate"] = cert.to_json();
  report["verdict"] = "pass";
  std::cout << "[PASS] certificate: "
            << (cert.verdict == Certificate::Verdict::Unique ? "UNIQUE" : "NON_UNIQUE");
  if (cert.verdict == Certificate::Verdict::NonUnique)
    std::cout << " (eps = " << cert.eps.str() << ")";
  std::cout << "\n";
  emit(report, out);
  return kOk;
}

int run_verify_proof_cases(long qmax, const std::string& out) {
  const CheckReport rep = verify_proof_cases(qmax);
  print_check_line(rep);
  Json report = report_header("verify-proof-cases", Json{{"qmax", qmax}}, nullptr);
  report["proof_cases"] = rep.to_json();
  report["verdict"] = rep.pass() ? "pass" : "fail";
  emit(report, out);
  return rep.pass() ? kOk : kCounterexample;
}

int run_validity_demo(const std::string& fn_spec, const RegistryPtr& reg, std::uint64_t samples,
                      std::uint64_t seed, unsigned threads, const std::string& out) {
  const GroupFunction f = parse_function_spec(fn_spec, reg);
  const PointSampler sampler(reg);

  CheckReport rep = run_sampled_check(
      "validity", seed, samples,
      [&](Rng& rng, CheckReport& r) {
        Solution y;
        if (rng.below(16) == 0) {  // injected tight family {(b/q, q)}
          const long q = rng.range(1, 12);
          y.support.push_back({HamelNumber::from_rational(b_point() / Rat(q)), q});
        } else {
          y = random_solution(sampler, rng);
        }
        const HamelNumber value = halfspace_value(f, y);
        switch (value.compare_to_rational(Rat(1))) {
          case Ordering::LT:
            r.add_violation(Json{{"y", y.to_json()}, {"value", hnum_json(value)}});
            break;
          case Ordering::EQ:
            r.add_tight(Json{{"y", y.to_json()}});
            break;
          case Ordering::GT:
            break;
        }
      },
      threads);
  print_check_line(rep);

  Json report = report_header(
      "validity-demo", Json{{"fn", fn_spec}, {"samples", samples}, {"seed", seed}}, reg);
  report["validity"] = rep.to_json();
  report["tight_fraction"] =
      rep.samples == 0 ? 0.0 : static_cast<double>(rep.tight_count) / static_cast<double>(rep.samples);
  report["verdict"] = rep.pass() ? "pass" : "fail";
  emit(report, out);
  return rep.pass() ? kOk : kCounterexample;
}

int run_perturb_demo(const std::string& fn_spec, const std::string& theta_path,
                     const RegistryPtr& reg, std::uint64_t samples, std::uint64_t seed,
                     unsigned threads, const std::string& out) {
  const GroupFunction f = parse_function_spec(fn_spec, reg);
  const AdditiveSpec theta = load_theta_file(theta_path, reg);
  if (!theta.c_b.is_zero())
    throw std::invalid_argument("perturb-demo: theta must have c_b = 0");
  const PointSampler sampler(reg);

  CheckReport rep = run_sampled_check(
      "affine-hull-equivalence", seed, samples,
      [&](Rng& rng, CheckReport& r) {
        const Solution y = random_solution(sampler, rng);
        const Rat residual = affine_hull_residual(theta, y);
        const bool equiv = equivalence_check(f, theta, y);
        if (!residual.is_zero() || !equiv)
          r.add_violation(Json{{"y", y.to_json()},
                               {"residual", rat_json(residual)},
                               {"halfspace_equal", equiv}});
      },
      threads);
  print_check_line(rep);

  Json report = report_header("perturb-demo",
                              Json{{"fn", fn_spec},
                                   {"theta", theta_path},
                                   {"samples", samples},
                                   {"seed", seed}},
                              reg);
  report["equivalence"] = rep.to_json();
  report["verdict"] = rep.pass() ? "pass" : "fail";
  emit(report, out);
  return rep.pass() ? kOk : kCounterexample;
}

int run_nonneg_demo(const std::string& theta_path, const RegistryPtr& reg, std::uint64_t samples,
                    std::uint64_t seed, long search_range, unsigned threads,
                    const std::string& out) {
  const AdditiveSpec theta = load_theta_file(theta_path, reg);
  const NonnegDemo demo = nonneg_form_demo(reg, theta, search_range);

  const PointSampler sampler(reg);
  CheckReport rep = run_sampled_check(
      "corrected-equals-gmi", seed, samples,
      [&](Rng& rng, CheckReport& r) {
        const HamelNumber x = sampler.sample(rng);
        const HamelNumber lhs = evaluate(demo.corrected, x);
        const HamelNumber rhs = gmi(x);
        if (!(lhs == rhs))
          r.add_violation(
              Json{{"x", hnum_json(x)}, {"corrected", hnum_json(lhs)}, {"gmi", hnum_json(rhs)}});
      },
      threads);

  std::cout << "[PASS] negativity witness: x = " << demo.witness.str() << ", value in ["
            << demo.witness_value.lo.str() << ", " << demo.witness_value.hi.str() << "]\n";
  print_check_line(rep);

  Json report = report_header("nonneg-demo",
                              Json{{"theta", theta_path},
                                   {"samples", samples},
                                   {"seed", seed},
                                   {"search_range", search_range}},
                              reg);
  report["witness"] = Json{{"x", hnum_json(demo.witness)},
                           {"value_interval",
                            Json::array({rat_json(demo.witness_value.lo),
                                         rat_json(demo.witness_value.hi)})},
                           {"value_float", demo.witness_value.midpoint().to_double()}};
  report["corrected_equals_gmi"] = rep.to_json();
  report["verdict"] = rep.pass() ? "pass" : "fail";
  emit(report, out);
  return rep.pass() ? kOk : kCounterexample;
}

int run_density_sample(const std::string& xgrid_s, const std::string& ygrid_s, const Rat& eps,
                       const std::string& atom, const RegistryPtr& reg, const std::string& out) {
  const std::vector<Rat> xg = parse_grid(xgrid_s);
  const std::vector<Rat> yg = parse_grid(ygrid_s);
  for (const Rat& y : yg)
    if (y < Rat(0) || y > Rat(1))
      throw std::invalid_argument("density-sample: y grid must lie in [0, 1]");
  const AtomId id = atom.empty() ? reg->atoms().front().id : atom;
  const std::vector<GraphHit> hits = graph_cloud(xg, yg, eps, reg, id);

  std::ostringstream csv;
  csv << "x_lo,x_hi,x_float,pi_num,pi_den,target_x,target_y\n";
  for (const auto& h : hits) {
    csv << h.x_interval.lo.str() << "," << h.x_interval.hi.str() << ","
        << csv_escape_free_double(h.x_interval.midpoint().to_double()) << ","
        << h.pi_value.num().get_str() << "," << h.pi_value.den().get_str() << ","
        << h.target_x.str() << "," << h.target_y.str() << "\n";
  }
  if (out.empty())
    std::cout << csv.str();
  else
    write_text_file(out, csv.str());
  std::cout << "[PASS] density-sample: " << hits.size() << " graph points within eps = "
            << eps.str() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact verification for cut-generating functions of the single-row group model"};
  app.require_subcommand(1);

  std::string fn_spec = "pi", registry_path, out_path, theta_path, xgrid, ygrid, eps_s = "1/10000",
              atom;
  std::uint64_t samples = 1000, seed = 1;
  unsigned threads = 0;
  int n = 6;
  long qmax = 50, search_range = 64;

  const auto add_common = [&](CLI::App* cmd, bool with_fn = true) {
    if (with_fn) cmd->add_option("--fn", fn_spec, "function spec: pi | gmi | pi+theta:<file> | gmi+theta:<file>");
    cmd->add_option("--registry", registry_path, "atom registry JSON (default: $GROUPFN_REGISTRY or builtin sqrt2/sqrt3/sqrt5)");
    cmd->add_option("--out", out_path, "write the JSON report here");
    cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
  };

  auto* cm = app.add_subcommand("check-minimal", "sampled exact minimality checks");
  add_common(cm);
  cm->add_option("--samples", samples, "samples per check");
  cm->add_option("--seed", seed, "master seed");

  auto* ce = app.add_subcommand("check-extreme-finite",
                                "cyclic-grid minimality + uniqueness certificate");
  add_common(ce);
  ce->add_option("--n", n, "grid size (even)")->required();

  auto* vp = app.add_subcommand("verify-proof-cases", "exact rational identities of pi");
  vp->add_option("--qmax", qmax, "largest denominator");
  vp->add_option("--out", out_path, "write the JSON report here");

  auto* vd = app.add_subcommand("validity-demo", "halfspace membership on random solutions");
  add_common(vd);
  vd->add_option("--samples", samples, "number of random solutions");
  vd->add_option("--seed", seed, "master seed");

  auto* pd = app.add_subcommand("perturb-demo", "affine-hull residuals and equivalence under theta");
  add_common(pd);
  pd->add_option("--theta", theta_path, "theta coefficient JSON")->required();
  pd->add_option("--samples", samples, "number of random solutions");
  pd->add_option("--seed", seed, "master seed");

  auto* nd = app.add_subcommand("nonneg-demo", "negativity witness for gmi+theta and its correction");
  add_common(nd, false);
  nd->add_option("--theta", theta_path, "theta coefficient JSON")->required();
  nd->add_option("--samples", samples, "points for corrected==gmi verification");
  nd->add_option("--seed", seed, "master seed");
  nd->add_option("--search-range", search_range, "max |k| scanned along atom lines");

  auto* ds = app.add_subcommand("density-sample", "graph points of pi near a target grid");
  ds->add_option("--xgrid", xgrid, "x targets, a:b:step or single rational")->required();
  ds->add_option("--ygrid", ygrid, "y targets in [0,1], a:b:step or single rational")->required();
  ds->add_option("--eps", eps_s, "target distance (rational)");
  ds->add_option("--atom", atom, "atom id used to steer (default: first in registry)");
  ds->add_option("--registry", registry_path, "atom registry JSON");
  ds->add_option("--out", out_path, "write CSV here (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const RegistryPtr reg = resolve_registry(registry_path);
    if (cm->parsed())
      return run_check_minimal(fn_spec, reg, samples, seed, threads, out_path);
    if (ce->parsed()) return run_check_extreme_finite(fn_spec, reg, n, out_path);
    if (vp->parsed()) return run_verify_proof_cases(qmax, out_path);
    if (vd->parsed())
      return run_validity_demo(fn_spec, reg, samples, seed, threads, out_path);
    if (pd->parsed())
      return run_perturb_demo(fn_spec, theta_path, reg, samples, seed, threads, out_path);
    if (nd->parsed())
      return run_nonneg_demo(theta_path, reg, samples, seed, search_range, threads, out_path);
    if (ds->parsed()) {
      const auto eps = Rat::parse(eps_s);
      if (!eps || eps->sign() <= 0)
        throw std::invalid_argument("density-sample: --eps must be a positive rational");
      return run_density_sample(xgrid, ygrid, *eps, atom, reg, out_path);
    }
    return kUsage;
  } catch (const RefinementBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::runtime_error& e) {
    if (std::string(e.what()).find("search budget") != std::string::npos) {
      std::cerr << "error: " << e.what() << "\n";
      return kBudget;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace groupfn::cli
