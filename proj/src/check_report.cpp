#include "groupfn/check_report.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace groupfn {

Json rat_json(const Rat& q) { return q.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    if (auto r = Rat::parse(j.get<std::string>())) return *r;
  }
  throw std::invalid_argument("expected a rational as \"p/q\" string, got: " + j.dump());
}

Json hnum_json(const HamelNumber& x) {
  Json coeffs = Json::object();
  for (const auto& [id, c] : x.atom_coefficients()) coeffs[id] = rat_json(c);
  return Json{{"lambda_b", rat_json(x.b_coefficient())}, {"coeffs", std::move(coeffs)}};
}

HamelNumber hnum_from_json(const RegistryPtr& reg, const Json& j) {
  HamelNumber x = HamelNumber::from_rational(rat_from_json(j.at("lambda_b")) / Rat(2));
  if (j.contains("coeffs")) {
    for (const auto& [id, c] : j.at("coeffs").items())
      x = x + HamelNumber::atom(reg, id, rat_from_json(c));
  }
  return x;
}

void CheckReport::merge(CheckReport&& other) {
  samples += other.samples;
  violations += other.violations;
  for (auto& j : other.counterexamples)
    if (counterexamples.size() < kMaxStored) counterexamples.push_back(std::move(j));
  tight_count += other.tight_count;
  for (auto& j : other.tight_examples)
    if (tight_examples.size() < kMaxStored) tight_examples.push_back(std::move(j));
}

Json CheckReport::to_json() const {
  Json j{{"check", check},
         {"samples", samples},
         {"seed", seed},
         {"counterexamples", counterexamples},
         {"violations", violations},
         {"verdict", pass() ? "pass" : "fail"}};
  if (tight_count > 0) {
    j["tight_count"] = tight_count;
    j["tight_examples"] = tight_examples;
  }
  return j;
}

CheckReport run_sampled_check(const std::string& name, std::uint64_t master_seed,
                              std::uint64_t samples,
                              const std::function<void(Rng&, CheckReport&)>& per_sample,
                              unsigned threads) {
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t sub_seed = mix_seed(master_seed, name);
  const std::uint64_t n_chunks = (samples + kChunk - 1) / kChunk;

  auto run_chunk = [&](std::uint64_t c) {
    std::uint64_t s = sub_seed + c;
    Rng rng(splitmix64(s));
    CheckReport rep;
    const std::uint64_t count = std::min(kChunk, samples - c * kChunk);
    for (std::uint64_t i = 0; i < count; ++i) {
      per_sample(rng, rep);
      ++rep.samples;
    }
    return rep;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  CheckReport total;
  total.check = name;
  total.seed = master_seed;
  if (threads == 1 || n_chunks <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) total.merge(run_chunk(c));
    return total;
  }

  std::uint64_t next = 0;
  while (next < n_chunks) {
    std::vector<std::future<CheckReport>> wave;
    for (unsigned t = 0; t < threads && next < n_chunks; ++t, ++next)
      wave.push_back(std::async(std::launch::async, run_chunk, next));
    for (auto& f : wave) total.merge(f.get());
  }
  return total;
}

}  // namespace groupfn
