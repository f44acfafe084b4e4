#pragma once

// Multiplication matrix M[i][j] = y^i x^j with the three filling strategies:
//   CacheOnly        - build entries recursively from lower-degree entries, keep all intermediates
//   FormulasOnly     - evaluate formulas on every request, store nothing
//   CacheAndFormulas - evaluate formulas for requested entries and store only those

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "ncaffine/commute.hpp"

namespace ncaffine {

enum class Strategy { CacheAndFormulas, FormulasOnly, CacheOnly };
inline constexpr std::array<Strategy, 3> kStrategies{Strategy::CacheAndFormulas, Strategy::FormulasOnly,
                                                     Strategy::CacheOnly};
std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

class CommuteCache {
 public:
  using Index = std::pair<unsigned, unsigned>;  // (m, n) for y^m x^n

  CommuteCache(Algebra alg, Strategy strategy);

  /// One request for y^m x^n; increments the request counter for (m, n).
  NcPoly request(unsigned m, unsigned n);

  [[nodiscard]] const Algebra& algebra() const { return alg_; }
  [[nodiscard]] Strategy strategy() const { return strategy_; }
  [[nodiscard]] const std::map<Index, NcPoly>& matrix() const { return matrix_; }
  [[nodiscard]] const std::map<Index, std::uint64_t>& request_counts() const { return requests_; }
  [[nodiscard]] std::uint64_t total_requests() const;
  [[nodiscard]] std::size_t stored_entries() const { return matrix_.size(); }
  [[nodiscard]] std::size_t peak_entries() const { return peak_; }

  /// Drops stored entries with m + n > degree; counters are kept.
  void clear_above(unsigned degree);

 private:
  const NcPoly& build(unsigned m, unsigned n);
  void store(unsigned m, unsigned n, NcPoly p);

  Algebra alg_;
  Strategy strategy_;
  std::map<Index, NcPoly> matrix_;
  std::map<Index, std::uint64_t> requests_;
  std::size_t peak_ = 0;
};

NcPoly commute_cached(CommuteCache& cache, const Algebra& alg, unsigned m, unsigned n);
NcPoly mul(const NcPoly& f, const NcPoly& g, CommuteCache& cache);
NcPoly pow(const NcPoly& f, unsigned n, CommuteCache& cache);

}  // namespace ncaffine
