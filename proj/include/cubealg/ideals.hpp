#pragma once

#include <string>
#include <vector>

#include "cubealg/subset_poly.hpp"

namespace cubealg {

enum class GeneratorLabel { toric, invariant, combined, predicted_lt };

std::string to_string(GeneratorLabel label);

struct GeneratorSet {
  int n = 1;
  int r = 1;  // 0 when not applicable (pure toric set)
  GeneratorLabel label = GeneratorLabel::toric;
  std::vector<Polynomial> gens;
};

// One binomial z_A z_B - z_{A&B} z_{A|B} per unordered Sperner 2-pair
// (neither subset contains the other). The leading term is always z_A z_B.
GeneratorSet toric_generators(int n);

// Invariant generators: for r >= 2, z_empty together with the power sums
// sum_{|A|=k} z_A^r for 1 <= k <= n; for r = 1 the analogues of the
// elementary symmetric functions sum_{|A|=k} z_A for 0 <= k <= n.
GeneratorSet invariant_generators(int r, int n);

// Toric generators followed by invariant generators, deduplicated.
GeneratorSet combined_ideal(int r, int n);

// Monomial ideal by its minimal generating set: mono_cmp-ascending and
// pairwise indivisible.
struct MonomialIdeal {
  int n = 1;
  std::vector<Monomial> min_gens;
};

// Deduplicates and prunes generators divisible by another.
MonomialIdeal make_monomial_ideal(int n, std::vector<Monomial> gens);

// Minimality of min_gens makes generator-list comparison sound.
bool monomial_ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);

struct TaggedMonomial {
  Monomial mono;
  int family = 0;  // which of the seven generator families produced it
};

// The predicted leading-term ideal: seven monomial families
//   1. z_empty
//   2. z_[k]^r for 1 <= k <= n
//   3. z_A^{r+1} for A not a prefix [k]
//   4. z_A z_B for Sperner 2-pairs
//   5. z_A^r z_B with A not a prefix, A < B, min(B\A) > max(A)
//   6. z_A z_B^r with B not a prefix, A < B, and some prefix [l] with
//      [l] not contained in A, [l] contained in B, B\A contained in [l]
//   7. z_A1 z_A2^r z_A3 with A2 not a prefix, A1 < A2 < A3 and
//      max(A2\A1) < min(A3\A2)
// minimized by divisibility. Tags survive minimization for auditing.
std::vector<TaggedMonomial> predicted_lt_generators(int r, int n);
MonomialIdeal predicted_lt_ideal(int r, int n);

}  // namespace cubealg
