#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace guidepost {

struct FuzzOutcome {
  std::string kind;
  int runs = 0;
  int failures = 0;
  // Iteration and message of the first failure, empty when none failed.
  std::string first_failure;
};

// Kinds: sanitize, encode, certificates, oracles, factorization, pipeline.
const std::vector<std::string>& fuzz_kinds();
// Seeded property checks of one kind; the seed of iteration i is derived from seed and i only.
FuzzOutcome run_fuzz(const std::string& kind, std::uint64_t seed, int iterations);

}  // namespace guidepost
