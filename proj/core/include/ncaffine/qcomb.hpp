#pragma once

// q-analogues and classical combinatorial numbers. Everything is division-free so that
// q = 1 and roots of unity specialize cleanly.

#include "ncaffine/coeffs.hpp"

namespace ncaffine {

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
FieldElem q_number(unsigned n, const FieldElem& q);
/// [n]_q! = [1][2]...[n].
FieldElem q_factorial(unsigned n, const FieldElem& q);
/// Gaussian binomial via the Pascal recurrence; zero when k > n.
FieldElem q_binomial(unsigned n, unsigned k, const FieldElem& q);
/// (a; q)_n = prod_{k<n} (1 - a q^k).
FieldElem q_pochhammer(const FieldElem& a, unsigned n, const FieldElem& q);
/// q-falling factorial [n-k+1][n-k+2]...[n]; requires k <= n.
FieldElem q_falling(unsigned n, unsigned k, const FieldElem& q);

BigInt binomial(unsigned n, unsigned k);
/// (n-1)!! for even n, 0 for odd n, 1 for n = 0.
BigInt double_fact_even(unsigned n);
/// Stirling numbers of the second kind.
BigInt stirling2(unsigned n, unsigned k);
BigInt factorial(unsigned n);
/// n (n-1) ... (n-k+1).
BigInt falling(unsigned n, unsigned k);

}  // namespace ncaffine
