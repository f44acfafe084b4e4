#include "ncaffine/bench.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace ncaffine {

NcPoly random_poly(const Algebra& alg, std::mt19937_64& rng, unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-5, 4);
  NcPoly f(alg);
  const unsigned t = terms(rng);
  for (unsigned i = 0; i < t; ++i) {
    unsigned d = deg(rng);
    unsigned a = std::uniform_int_distribution<unsigned>(0, d)(rng);
    long c = coef(rng);
    if (c >= 0) ++c;  // skip zero
    f.add_term(a, d - a, FieldElem::from_int(alg->mode, c));
  }
  if (f.is_zero()) f.add_term(0, 0, FieldElem::one(alg->mode));
  return f;
}

Workload powers_workload(const Algebra& alg, unsigned max_n) {
  Workload w{"powers", alg, {}};
  const NcPoly s = NcPoly::x(alg) + NcPoly::y(alg);
  for (unsigned n = 1; n <= max_n; ++n) w.ops.push_back({WorkloadOp::Kind::Power, s, NcPoly(alg), n});
  return w;
}

Workload random_products_workload(const Algebra& alg, std::uint64_t seed, unsigned count, unsigned max_degree) {
  Workload w{"random-products", alg, {}};
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < count; ++i) {
    NcPoly f = random_poly(alg, rng, max_degree);
    NcPoly g = random_poly(alg, rng, max_degree);
    w.ops.push_back({WorkloadOp::Kind::Product, std::move(f), std::move(g), 0});
  }
  return w;
}

std::vector<Workload> binomial_workloads(const FieldMode& mode) {
  std::vector<Workload> out;
  auto add = [&out](std::string name, const Algebra& alg, unsigned max_n) {
    Workload w = powers_workload(alg, max_n);
    w.name = std::move(name);
    out.push_back(std::move(w));
  };
  add("binomial-weyl", model_algebra(ModelClass::Weyl, mode), 12);
  add("binomial-shift", model_algebra(ModelClass::Shift, mode), 12);
  const FieldElem q = mode.kind() == FieldMode::Kind::Param ? FieldElem::symbol(Symbol::q)
                                                            : FieldElem::from_int(mode, 2);
  add("binomial-qplane", model_algebra(ModelClass::QuantumPlane, q), 10);
  return out;
}

Algebra default_bench_algebra() { return generic_algebra(); }

std::vector<Workload> default_suite(const Algebra& alg, std::uint64_t seed) {
  std::vector<Workload> out{powers_workload(alg), random_products_workload(alg, seed)};
  for (Workload& w : binomial_workloads(alg->mode)) out.push_back(std::move(w));
  return out;
}

BenchReport run_bench(const Workload& w, Strategy strategy, std::optional<unsigned> clear_above_degree) {
  BenchReport r;
  r.workload = w.name;
  r.strategy = strategy;
  CommuteCache cache(w.algebra, strategy);
  const auto start = std::chrono::steady_clock::now();
  for (const WorkloadOp& op : w.ops) {
    if (op.kind == WorkloadOp::Kind::Power)
      r.outputs.push_back(pow(op.lhs, op.exponent, cache));
    else
      r.outputs.push_back(mul(op.lhs, op.rhs, cache));
    if (clear_above_degree) cache.clear_above(*clear_above_degree);
  }
  const auto stop = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  r.peak_entries = cache.peak_entries();
  r.final_entries = cache.stored_entries();
  r.requests = cache.request_counts();
  return r;
}

std::string BenchReport::to_json() const {
  nlohmann::json j;
  j["workload"] = workload;
  j["strategy"] = std::string(ncaffine::to_string(strategy));
  j["wall_ms"] = wall_ms;
  j["peak_entries"] = peak_entries;
  j["requests"] = nlohmann::json::array();
  for (const auto& [idx, count] : requests)
    j["requests"].push_back({{"m", idx.first}, {"n", idx.second}, {"count", count}});
  return j.dump(2);
}

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "m,n,count\n";
  for (const auto& [idx, count] : requests) out << idx.first << ',' << idx.second << ',' << count << '\n';
  return out.str();
}

std::string BenchReport::to_table() const {
  unsigned max_m = 0, max_n = 0;
  for (const auto& [idx, count] : requests) {
    max_m = std::max(max_m, idx.first);
    max_n = std::max(max_n, idx.second);
  }
  std::ostringstream out;
  out << "m\\n";
  for (unsigned n = 1; n <= max_n; ++n) out << '\t' << n;
  out << '\n';
  for (unsigned m = 1; m <= max_m; ++m) {
    out << m;
    for (unsigned n = 1; n <= max_n; ++n) {
      auto it = requests.find({m, n});
      out << '\t' << (it == requests.end() ? 0 : it->second);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ncaffine
