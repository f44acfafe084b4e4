#include "ncaffine/cache.hpp"

#include <numeric>

namespace ncaffine {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::CacheAndFormulas: return "cache+formulas";
    case Strategy::FormulasOnly: return "formulas";
    case Strategy::CacheOnly: return "cache";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  for (Strategy s : kStrategies)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

CommuteCache::CommuteCache(Algebra alg, Strategy strategy) : alg_(std::move(alg)), strategy_(strategy) {}

std::uint64_t CommuteCache::total_requests() const {
  return std::accumulate(requests_.begin(), requests_.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
}

void CommuteCache::clear_above(unsigned degree) {
  std::erase_if(matrix_, [degree](const auto& kv) { return kv.first.first + kv.first.second > degree; });
}

void CommuteCache::store(unsigned m, unsigned n, NcPoly p) {
  matrix_.insert_or_assign(Index{m, n}, std::move(p));
  peak_ = std::max(peak_, matrix_.size());
}

// Requires m, n > 0. Strategy 1: y x^n from y x^(n-1), then y^m x^n from y^(m-1) x^n.
const NcPoly& CommuteCache::build(unsigned m, unsigned n) {
  if (auto it = matrix_.find(Index{m, n}); it != matrix_.end()) return it->second;
  NcPoly entry(alg_);
  if (m == 1) {
    entry = times_x_low(n == 1 ? NcPoly::y(alg_) : build(1, n - 1));
  } else {
    const NcPoly& lower = build(m - 1, n);
    for (const auto& [mono, c] : lower.terms()) {
      if (mono.a == 0) {
        entry.add_term(0, mono.b + 1, c);
        continue;
      }
      for (const auto& [t, tc] : build(1, mono.a).terms()) entry.add_term(t.a, t.b + mono.b, c * tc);
    }
  }
  store(m, n, std::move(entry));
  return matrix_.at(Index{m, n});
}

NcPoly CommuteCache::request(unsigned m, unsigned n) {
  ++requests_[Index{m, n}];
  if (m == 0 || n == 0) return NcPoly::monomial(alg_, n, m);
  switch (strategy_) {
    case Strategy::CacheOnly:
      return build(m, n);
    case Strategy::FormulasOnly:
      return commute(alg_, m, n);
    case Strategy::CacheAndFormulas: {
      if (auto it = matrix_.find(Index{m, n}); it != matrix_.end()) return it->second;
      NcPoly r = commute(alg_, m, n);
      store(m, n, r);
      return r;
    }
  }
  return commute(alg_, m, n);
}

NcPoly commute_cached(CommuteCache& cache, const Algebra& alg, unsigned m, unsigned n) {
  if (!same_algebra(cache.algebra(), alg)) throw AlgebraMismatch();
  return cache.request(m, n);
}

NcPoly mul(const NcPoly& f, const NcPoly& g, CommuteCache& cache) {
  if (!same_algebra(cache.algebra(), f.algebra())) throw AlgebraMismatch();
  return mul_with(f, g, [&cache](unsigned m, unsigned n) { return cache.request(m, n); });
}

NcPoly pow(const NcPoly& f, unsigned n, CommuteCache& cache) {
  NcPoly r = NcPoly::constant(f.algebra(), FieldElem::one(f.mode()));
  for (unsigned i = 0; i < n; ++i) r = mul(r, f, cache);
  return r;
}

}  // namespace ncaffine
