#include "ktdom/bench.hpp"

#include <exception>
#include <stdexcept>

#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/generators.hpp"

namespace ktdom {

namespace {

BenchRow run_trial(const BenchOptions& opts, int trial, std::uint64_t seed) {
  BenchRow row;
  row.trial = trial;
  row.seed = seed;
  row.k = opts.k;
  row.n = opts.n;

  const KTree t = gen_random_ktree(opts.k, opts.n, seed);
  row.m = t.graph.edge_count();

  const DominationCertificate cert = construct_independent_dominating_set(t);
  const CertificateReport rep = verify_certificate(t.graph, cert);
  if (!rep.valid()) {
    throw BoundViolationError("trial " + std::to_string(trial) + " (seed " +
                              std::to_string(seed) + "): certificate failed verification: " +
                              rep.violations.front());
  }
  row.vk = cert.bound_num - cert.n;
  row.bound_num = cert.bound_num;
  row.bound_den = cert.bound_den;
  row.bound_floor = cert.bound_floor();
  row.constructed_size = static_cast<long long>(cert.chosen.size());
  if (row.constructed_size * row.bound_den > row.bound_num) {
    throw BoundViolationError("trial " + std::to_string(trial) + " (seed " +
                              std::to_string(seed) + "): constructed size " +
                              std::to_string(row.constructed_size) + " violates bound " +
                              std::to_string(row.bound_num) + "/" + std::to_string(row.bound_den));
  }

  if (opts.n <= opts.exact_max) {
    const OracleResult res = exact_gamma_i(t.graph, opts.node_limit);
    if (res.limit_hit) {
      row.exact_limit_hit = true;
    } else {
      row.exact_size = res.size;
      if (res.size > row.constructed_size) {
        throw BoundViolationError("trial " + std::to_string(trial) + " (seed " +
                                  std::to_string(seed) + "): exact " + std::to_string(res.size) +
                                  " exceeds constructed " + std::to_string(row.constructed_size));
      }
    }
  }
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (opts.k < 1) throw std::invalid_argument("k must be positive");
  if (opts.n < opts.k + 1) throw std::invalid_argument("n must be at least k+1");

  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(opts.trials));
  SplitMix64 stream(opts.seed);
  for (auto& s : seeds) s = stream.next();

  std::vector<BenchRow> rows(static_cast<std::size_t>(opts.trials));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < opts.trials; ++i) {
    bool skip = false;
#pragma omp critical(ktdom_bench_failure)
    skip = (failure != nullptr);
    if (skip) continue;
    try {
      rows[static_cast<std::size_t>(i)] = run_trial(opts, i, seeds[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(ktdom_bench_failure)
      if (failure == nullptr) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const BenchRow& r : rows) {
    out += std::to_string(r.trial);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += std::to_string(r.vk);
    out += ',';
    out += std::to_string(r.bound_num);
    out += ',';
    out += std::to_string(r.bound_den);
    out += ',';
    out += std::to_string(r.bound_floor);
    out += ',';
    out += std::to_string(r.constructed_size);
    out += ',';
    if (r.exact_size) out += std::to_string(*r.exact_size);
    out += ',';
    out += r.exact_limit_hit ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace ktdom
