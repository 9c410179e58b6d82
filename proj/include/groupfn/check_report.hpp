#pragma once

#include "groupfn/hamel.hpp"
#include "groupfn/sampler.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace groupfn {

using Json = nlohmann::json;

Json rat_json(const Rat& q);
Json hnum_json(const HamelNumber& x);
HamelNumber hnum_from_json(const RegistryPtr& reg, const Json& j);
Rat rat_from_json(const Json& j);

// Outcome of one named check. verdict == pass exactly when the
// counterexample list is empty; storage is capped but the count is not,
// and a nonzero count always keeps at least one stored example.
struct CheckReport {
  static constexpr std::size_t kMaxStored = 32;

  std::string check;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  std::vector<Json> counterexamples;
  // Additivity equalities seen along the way; these are the relations the
  // finite tightness systems are built from.
  std::uint64_t tight_count = 0;
  std::vector<Json> tight_examples;

  bool pass() const { return violations == 0; }
  void add_violation(Json j) {
    ++violations;
    if (counterexamples.size() < kMaxStored) counterexamples.push_back(std::move(j));
  }
  void add_tight(Json j) {
    ++tight_count;
    if (tight_examples.size() < kMaxStored) tight_examples.push_back(std::move(j));
  }
  // Associative merge; chunk reports are merged in chunk order.
  void merge(CheckReport&& other);

  Json to_json() const;
};

// Runs per_sample `samples` times, split into fixed 4096-sample chunks that
// may execute on different threads. Chunk c draws from an Rng seeded with
// splitmix64(mix_seed(master_seed, name) + c), and chunk reports merge in
// chunk order, so the result is byte-identical for every thread count.
// threads == 0 means hardware concurrency.
CheckReport run_sampled_check(const std::string& name, std::uint64_t master_seed,
                              std::uint64_t samples,
                              const std::function<void(Rng&, CheckReport&)>& per_sample,
                              unsigned threads = 0);

}  // namespace groupfn
