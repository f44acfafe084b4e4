#pragma once

// Binomial-type identities and the misordering index of words over {a, b}.

#include <string>
#include <string_view>
#include <utility>

#include "ncaffine/commute.hpp"

namespace ncaffine {

/// Word over the alphabet {a, b}; a stands for x and b for y.
using Word = std::string;

/// [u+v]^n = sum_i C(n,i) u^i v^(n-i), or with Gaussian binomials in q when q_binomials is set.
/// No commutation between u and v is applied beyond forming u^i v^(n-i).
NcPoly bracket_pow(const NcPoly& u, const NcPoly& v, unsigned n, bool q_binomials = false);

/// (x+d)^n - [x+d]^n in the Weyl algebra as the double sum with g(n) = (n-1)!! for even n.
NcPoly weyl_binomial_defect(unsigned n, const FieldMode& mode = FieldMode::rational());
/// Same sum written with n! / (j! k! ((n-j-k)/2)!) (1/2)^((n-j-k)/2).
NcPoly weyl_binomial_defect_factorial(unsigned n, const FieldMode& mode = FieldMode::rational());

/// (x+s)^n in the shift algebra sx = xs + s, as [x+s]^n plus the Stirling correction.
NcPoly shift_binomial(unsigned n, const FieldMode& mode = FieldMode::rational());

/// Number of b-before-a pairs. Throws std::invalid_argument on letters outside {a, b}.
std::size_t misordering_index(std::string_view w);

struct Convergence {
  unsigned a = 0;  // exponent of x in the standard monomial
  unsigned b = 0;  // exponent of y
  std::size_t index = 0;
};

/// The standard word a^#a b^#b that w converges to, with the misordering index.
Convergence converge(std::string_view w);

}  // namespace ncaffine
