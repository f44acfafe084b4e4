#include "ncaffine/qcomb.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncaffine {

namespace {

// Per-thread memo tables; rows grow on demand.
std::vector<std::vector<BigInt>>& pascal_rows() {
  thread_local std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  return rows;
}

std::vector<std::vector<BigInt>>& stirling_rows() {
  thread_local std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  return rows;
}

bool is_symbolic_q(const FieldElem& q) {
  return q.is_param() && q.param() == ParamRat::symbol(Symbol::q);
}

}  // namespace

FieldElem q_number(unsigned n, const FieldElem& q) {
  FieldElem acc = FieldElem::zero(q.mode());
  FieldElem power = FieldElem::one(q.mode());
  for (unsigned i = 0; i < n; ++i) {
    acc += power;
    if (i + 1 < n) power *= q;
  }
  return acc;
}

FieldElem q_factorial(unsigned n, const FieldElem& q) {
  FieldElem acc = FieldElem::one(q.mode());
  for (unsigned i = 2; i <= n; ++i) acc *= q_number(i, q);
  return acc;
}

FieldElem q_binomial(unsigned n, unsigned k, const FieldElem& q) {
  if (k > n) return FieldElem::zero(q.mode());
  if (k == 0 || k == n) return FieldElem::one(q.mode());
  k = std::min(k, n - k);
  thread_local std::map<std::pair<unsigned, unsigned>, FieldElem> symbolic_memo;
  const bool memo = is_symbolic_q(q);
  if (memo) {
    auto it = symbolic_memo.find({n, k});
    if (it != symbolic_memo.end()) return it->second;
  }
  // Row-by-row Pascal: [i j] = [i-1 j-1] + q^j [i-1 j].
  std::vector<FieldElem> row(k + 1, FieldElem::zero(q.mode()));
  row[0] = FieldElem::one(q.mode());
  std::vector<FieldElem> qpow(k + 1, FieldElem::one(q.mode()));
  for (unsigned j = 1; j <= k; ++j) qpow[j] = qpow[j - 1] * q;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + qpow[j] * row[j];
  }
  if (memo) symbolic_memo.emplace(std::make_pair(n, k), row[k]);
  return row[k];
}

FieldElem q_pochhammer(const FieldElem& a, unsigned n, const FieldElem& q) {
  FieldElem one = FieldElem::one(q.mode());
  FieldElem acc = one;
  FieldElem aq = a;
  for (unsigned k = 0; k < n; ++k) {
    acc *= one - aq;
    aq *= q;
  }
  return acc;
}

FieldElem q_falling(unsigned n, unsigned k, const FieldElem& q) {
  if (k > n) throw std::invalid_argument("q_falling requires k <= n");
  FieldElem acc = FieldElem::one(q.mode());
  for (unsigned i = n - k + 1; i <= n; ++i) acc *= q_number(i, q);
  return acc;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  auto& rows = pascal_rows();
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> next(prev.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t j = 1; j + 1 < next.size(); ++j) next[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(next));
  }
  return rows[n][k];
}

BigInt double_fact_even(unsigned n) {
  if (n % 2 == 1) return 0;
  BigInt acc = 1;
  for (unsigned i = 1; i + 1 <= n; i += 2) acc *= i;
  return acc;
}

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  auto& rows = stirling_rows();
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> next(prev.size() + 1, BigInt(0));
    for (std::size_t j = 1; j < next.size(); ++j) {
      BigInt keep = j < prev.size() ? BigInt(prev[j] * static_cast<unsigned long>(j)) : BigInt(0);
      next[j] = keep + prev[j - 1];
    }
    rows.push_back(std::move(next));
  }
  return rows[n][k];
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt falling(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt acc = 1;
  for (unsigned i = 0; i < k; ++i) acc *= n - i;
  return acc;
}

}  // namespace ncaffine
