#pragma once

#include <vector>

#include "cubealg/colored_perm.hpp"
#include "cubealg/subset_poly.hpp"

namespace cubealg {

// Garsia-Stanton analogue in T_n: the product over descent positions j of pi
// of the prefix-set variable z_{pi(1),...,pi(j)}. Its bidegree is
// (des(pi), maj(pi)).
Monomial gs_element(const std::vector<int>& pi);

// Negative descent basis element: gs_element(sigma) times the prefix-set
// variable z_{sigma(1),...,sigma(j)} for every j in X. Throws
// InvalidMultisetError when a multiplicity in X reaches r.
Monomial nd_element(const SigmaXPair& p, int r);

// A basis monomial carrying the pair it was built from; bidegree(mono)
// always equals (ndes, nmajor) of recompose(source, r).
struct XMonomial {
  Monomial mono;
  SigmaXPair source;
};

XMonomial nd_xmonomial(const SigmaXPair& p, int r);

struct DecodeResult {
  SigmaXPair pair;
  // Product of the chain variables whose block boundary carries no descent;
  // their sizes move into X instead.
  Monomial non_descent_factors;
};

// Inverse of nd_element on standard monomials: the support must be a chain
// B_1 < ... < B_s, exponents within the caps (r-1 on prefixes [k], r
// elsewhere), and the recovered multiset within bounds. Anything else throws
// NotStandardError.
DecodeResult decode(const Monomial& m, int r);

// The algebra map z_A -> prod_{i in A} x_i, reported as the exponent vector
// of the image monomial in x_1..x_n. Multiplicative; total degree matches
// the q-degree.
std::vector<int> coinvariant_image(const Monomial& m);

// Relabel every subset in m elementwise by sigma.
Monomial permute_subsets(const Monomial& m, const std::vector<int>& sigma);

}  // namespace cubealg
