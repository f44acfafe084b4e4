#pragma once

// Replayable multiplication workloads and request-count reports for the cache strategies.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncaffine/cache.hpp"

namespace ncaffine {

struct WorkloadOp {
  enum class Kind { Product, Power };
  Kind kind = Kind::Product;
  NcPoly lhs;
  NcPoly rhs;  // unused for powers
  unsigned exponent = 0;
};

struct Workload {
  std::string name;
  Algebra algebra;
  std::vector<WorkloadOp> ops;
};

/// Random polynomial of total degree at most max_degree with small nonzero integer coefficients.
NcPoly random_poly(const Algebra& alg, std::mt19937_64& rng, unsigned max_degree, unsigned max_terms = 4);

Workload powers_workload(const Algebra& alg, unsigned max_n = 12);
Workload random_products_workload(const Algebra& alg, std::uint64_t seed, unsigned count = 100, unsigned max_degree = 5);
/// (x+y)^n in the Weyl and shift models for n <= 12 and in the quantum plane for n <= 10.
std::vector<Workload> binomial_workloads(const FieldMode& mode);
/// Algebra used by the benchmark suite when none is given.
Algebra default_bench_algebra();
/// Powers and random products in alg, followed by the binomial suite.
std::vector<Workload> default_suite(const Algebra& alg, std::uint64_t seed = 42);

struct BenchReport {
  std::string workload;
  Strategy strategy = Strategy::CacheAndFormulas;
  double wall_ms = 0;
  std::size_t peak_entries = 0;
  std::size_t final_entries = 0;
  std::map<CommuteCache::Index, std::uint64_t> requests;
  std::vector<NcPoly> outputs;

  [[nodiscard]] std::string to_json() const;
  /// Header "m,n,count", one line per requested cell.
  [[nodiscard]] std::string to_csv() const;
  /// Request matrix with m down and n across.
  [[nodiscard]] std::string to_table() const;
};

/// Runs the workload against a fresh cache. clear_above_degree, if set, is applied after every op.
BenchReport run_bench(const Workload& w, Strategy strategy, std::optional<unsigned> clear_above_degree = {});

}  // namespace ncaffine
