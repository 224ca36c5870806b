#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cubealg/ideals.hpp"

namespace cubealg {

struct DivisionResult {
  std::vector<Polynomial> quotients;  // aligned with the divisor list
  Polynomial remainder;
};

// Multivariate division in divisor order: f = sum quotients[i]*divisors[i]
// + remainder, with no remainder term divisible by any divisor's leading
// monomial. Deterministic given the divisor order.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

// S(f,g) = (lcm/lt(f)) f - (lcm/lt(g)) g; throws ZeroPolynomialError on zero
// input. The leading monomial of the result is strictly below the lcm.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct BuchbergerOptions {
  bool coprime_criterion = true;  // skip pairs whose leading monomials are coprime
  bool chain_criterion = true;    // skip (i,j) when some k divides the lcm and
                                  // both [i,k] and [j,k] have left the pair set
};

struct BuchbergerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t criterion1_skips = 0;
  std::uint64_t criterion2_skips = 0;
  std::uint64_t reductions_to_zero = 0;

  friend bool operator==(const BuchbergerStats&, const BuchbergerStats&) = default;
};

struct GroebnerBasis {
  int n = 1;
  int r = 0;
  // The reduced basis: monic, interreduced, sorted by ascending leading
  // monomial. Unique for the ideal and term order.
  std::vector<Polynomial> basis;
  BuchbergerStats stats;
};

// Buchberger's algorithm with pair selection by smallest lcm (FIFO on ties)
// and the two skip criteria above. The returned basis is interreduced, so
// the output does not depend on which criteria were active.
GroebnerBasis buchberger(const GeneratorSet& gens, const BuchbergerOptions& options = {});

// Minimal generators of the leading-term ideal of the basis.
MonomialIdeal lt_ideal(const GroebnerBasis& gb);

// All monomials outside the ideal, sorted ascending by mono_cmp. Requires a
// pure power of every variable among the generators; otherwise the quotient
// is infinite-dimensional and InfiniteQuotientError is thrown.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal);

// Remainder test: f lies in the ideal iff division by the basis leaves 0.
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

}  // namespace cubealg
