#include "cubealg/descent_basis.hpp"

#include <algorithm>
#include <bit>

namespace cubealg {

Monomial gs_element(const std::vector<int>& pi) {
  if (!is_permutation(pi)) throw std::invalid_argument("not a permutation of [1,n]");
  const int n = static_cast<int>(pi.size());
  Monomial m(n);
  std::uint32_t prefix = 0;
  for (int i = 0; i + 1 < n; ++i) {
    prefix |= 1u << (pi[i] - 1);
    if (pi[i] > pi[i + 1]) m *= Monomial::variable(SubsetId(n, prefix));
  }
  return m;
}

Monomial nd_element(const SigmaXPair& p, int r) {
  if (!is_permutation(p.sigma)) throw std::invalid_argument("not a permutation of [1,n]");
  const int n = static_cast<int>(p.sigma.size());
  std::vector<int> mult(n + 1, 0);
  for (int j : p.x) {
    if (j < 1 || j > n) throw InvalidMultisetError("multiset element outside [1,n]");
    if (++mult[j] >= r) throw InvalidMultisetError("multiset multiplicity must be < r");
  }
  std::vector<std::uint32_t> prefix_mask(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    prefix_mask[j] = prefix_mask[j - 1] | (1u << (p.sigma[j - 1] - 1));
  }
  Monomial m = gs_element(p.sigma);
  for (int j : p.x) m *= Monomial::variable(SubsetId(n, prefix_mask[j]));
  return m;
}

XMonomial nd_xmonomial(const SigmaXPair& p, int r) { return {nd_element(p, r), p}; }

DecodeResult decode(const Monomial& m, int r) {
  const int n = m.n();
  const VarTable& table = var_table(n);

  // The support, in ascending rank order, must be a chain of nonempty
  // subsets; ranks sort by cardinality first, so only containment needs
  // checking.
  std::vector<std::uint32_t> chain;
  std::vector<int> exps;
  for (const Monomial::VarExp& e : m.entries()) {
    const std::uint32_t mask = table.mask_of_rank[e.rank];
    if (mask == 0) throw NotStandardError("z{} divides the monomial");
    if (!chain.empty()) {
      if ((chain.back() & mask) != chain.back() || chain.back() == mask) {
        throw NotStandardError("support is not a chain of subsets");
      }
    }
    const bool is_prefix = (mask & (mask + 1)) == 0;
    if (e.exp > (is_prefix ? r - 1 : r)) {
      throw NotStandardError("exponent exceeds the cap for its variable");
    }
    chain.push_back(mask);
    exps.push_back(e.exp);
  }

  const int s = static_cast<int>(chain.size());
  const std::uint32_t full = (1u << n) - 1;
  const bool top_is_full = s > 0 && chain.back() == full;

  // Support permutation: the new elements of each chain step in ascending
  // order, then the unused elements in ascending order.
  std::vector<int> pi;
  pi.reserve(n);
  std::vector<int> block_start(s, 0);
  std::uint32_t covered = 0;
  for (int i = 0; i < s; ++i) {
    block_start[i] = static_cast<int>(pi.size());
    for (int v = 1; v <= n; ++v) {
      const std::uint32_t bit = 1u << (v - 1);
      if ((chain[i] & bit) && !(covered & bit)) pi.push_back(v);
    }
    covered = chain[i];
  }
  for (int v = 1; v <= n; ++v) {
    if (!(covered & (1u << (v - 1)))) pi.push_back(v);
  }

  // Multiset from the exponents: b_i - 1 copies of |B_i| (b_s copies when
  // B_s = [n]), plus |B_i| for every block boundary without a descent, whose
  // chain variable moves to non_descent_factors.
  std::vector<int> x;
  Monomial failed(n);
  for (int i = 0; i < s; ++i) {
    const int size_i = std::popcount(chain[i]);
    const bool last_full = top_is_full && i == s - 1;
    x.insert(x.end(), exps[i] - (last_full ? 0 : 1), size_i);
    if (last_full) continue;  // no boundary beyond [n]
    const int block_end_value = pi[size_i - 1];
    const int next_value = pi[size_i];  // first of the next block or of the tail
    if (block_end_value < next_value) {
      x.push_back(size_i);
      failed *= Monomial::variable(SubsetId(n, chain[i]));
    }
  }
  std::sort(x.begin(), x.end());

  std::vector<int> mult(n + 1, 0);
  for (int j : x) {
    if (++mult[j] >= r) {
      throw NotStandardError("recovered multiset exceeds multiplicity r-1");
    }
  }
  return {SigmaXPair{std::move(pi), std::move(x)}, std::move(failed)};
}

std::vector<int> coinvariant_image(const Monomial& m) {
  const int n = m.n();
  const VarTable& table = var_table(n);
  std::vector<int> exps(n, 0);
  for (const Monomial::VarExp& e : m.entries()) {
    const std::uint32_t mask = table.mask_of_rank[e.rank];
    for (int v = 1; v <= n; ++v) {
      if (mask & (1u << (v - 1))) exps[v - 1] += e.exp;
    }
  }
  return exps;
}

Monomial permute_subsets(const Monomial& m, const std::vector<int>& sigma) {
  const int n = m.n();
  if (!is_permutation(sigma) || static_cast<int>(sigma.size()) != n) {
    throw std::invalid_argument("not a permutation of [1,n]");
  }
  const VarTable& table = var_table(n);
  Monomial out(n);
  for (const Monomial::VarExp& e : m.entries()) {
    const std::uint32_t mask = table.mask_of_rank[e.rank];
    std::uint32_t image = 0;
    for (int v = 1; v <= n; ++v) {
      if (mask & (1u << (v - 1))) image |= 1u << (sigma[v - 1] - 1);
    }
    out *= Monomial::variable(SubsetId(n, image), e.exp);
  }
  return out;
}

}  // namespace cubealg
