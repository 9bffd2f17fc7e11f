#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktdom/exact.hpp"

namespace ktdom {

struct BenchOptions {
  int k = 2;
  int n = 10;
  int trials = 1;
  std::uint64_t seed = 0;
  int exact_max = 20;  // oracle is skipped (cell left empty) when n exceeds this
  std::uint64_t node_limit = kDefaultNodeLimit;
};

struct BenchRow {
  int trial = 0;
  std::uint64_t seed = 0;  // per-trial generator seed
  int k = 0;
  int n = 0;
  long long m = 0;
  long long vk = 0;
  long long bound_num = 0;
  long long bound_den = 0;
  long long bound_floor = 0;
  long long constructed_size = 0;
  std::optional<long long> exact_size;  // empty when skipped or budget-limited
  bool exact_limit_hit = false;
};

inline constexpr const char* kBenchCsvHeader =
    "trial,seed,k,n,m,vk,bound_num,bound_den,bound_floor,constructed_size,"
    "exact_size,exact_limit_hit";

// One trial per row: generate a random k-tree from the trial seed, build and
// verify the certificate, and (for n <= exact_max) solve exactly. Trial
// seeds are the successive outputs of a SplitMix64 stream seeded with
// opts.seed, so the whole run is reproducible from the flags. Trials may
// execute concurrently; rows come back in trial order regardless.
// Throws BoundViolationError if any row contradicts the certified bound.
std::vector<BenchRow> run_bench(const BenchOptions& opts);

std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace ktdom
