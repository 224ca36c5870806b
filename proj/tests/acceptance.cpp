// Acceptance suite: one line per criterion, exact comparisons throughout.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "cubealg/descent_basis.hpp"
#include "cubealg/groebner.hpp"
#include "cubealg/series.hpp"

using namespace cubealg;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::vector<int> classical_gs_exponents(const std::vector<int>& pi) {
  std::vector<int> exps(pi.size(), 0);
  for (std::size_t j = 1; j < pi.size(); ++j) {
    if (pi[j - 1] > pi[j]) {
      for (std::size_t i = 0; i < j; ++i) exps[pi[i] - 1] += 1;
    }
  }
  return exps;
}

bool all_s_polynomials_reduce(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial s = s_polynomial(basis[i], basis[j]);
      if (!s.is_zero() && !divide(s, basis).remainder.is_zero()) return false;
    }
  }
  return true;
}

void criterion_worked_example(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const ColoredPermutation g = parse_window("[2^1 6^3 4^3 1^0 5^2 3^0]", 4);
  c.expect(descent_set_a(g) == std::vector<int>{1, 2, 4}, "Des_A");
  c.expect(major_a(g) == 7, "major_A");
  c.expect(to_window_string(inverse(g)) == "[4^0 1^3 6^0 3^1 5^2 2^1]", "inverse");
  c.expect(nneg(inverse(g)) == std::vector<int>{2, 2, 2, 4, 5, 5, 6}, "NNeg");
  c.expect(ndes(g) == 10, "ndes");
  c.expect(nmajor(g) == 33, "nmajor");

  const SigmaXPair pair = decompose(g);
  c.expect(pair.sigma == std::vector<int>{4, 2, 1, 5, 3, 6}, "sigma");
  c.expect(pair.x == std::vector<int>{2, 2, 2, 4, 5, 5, 6}, "X");
  c.expect(recompose(pair, 4) == g, "recompose");

  c.expect(gs_element(pair.sigma) == parse_monomial("z{4}*z{2,4}*z{1,2,4,5}", 6),
           "descent element");
  const Monomial b = nd_element(pair, 4);
  c.expect(b == parse_monomial("z{4}*z{2,4}^4*z{1,2,4,5}^2*z{1,2,3,4,5}^2*z{1,2,3,4,5,6}", 6),
           "negative descent element");

  const DecodeResult decoded = decode(b, 4);
  c.expect(decoded.pair == pair, "decode pair");
  c.expect(decoded.non_descent_factors == parse_monomial("z{1,2,3,4,5}", 6), "decode m_fail");

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(elapsed < 1.0, "runtime exceeded 1 s");
}

const std::vector<std::pair<int, int>> kGbCases = {
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {2, 4}};

void criterion_lt_ideals(Check& c) {
  for (const auto& [r, n] : kGbCases) {
    const GroebnerBasis gb = buchberger(combined_ideal(r, n));
    const bool equal = monomial_ideal_equal(lt_ideal(gb), predicted_lt_ideal(r, n));
    c.expect(equal, "lt ideal mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
}

void criterion_dimension(Check& c) {
  for (const auto& [r, n] : kGbCases) {
    const std::size_t count = standard_monomials(predicted_lt_ideal(r, n)).size();
    c.expect(count == group_order(r, n),
             "dimension mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
}

void criterion_descent_basis(Check& c) {
  for (const auto& [r, n] :
       std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 2}, {2, 4}}) {
    const std::string where = " at r=" + std::to_string(r) + " n=" + std::to_string(n);
    const std::vector<Monomial> standard = standard_monomials(predicted_lt_ideal(r, n));
    std::vector<Monomial> basis;
    bool round_trip = true;
    for_each_group_element(r, n, [&](const ColoredPermutation& g) {
      const SigmaXPair pair = decompose(g);
      Monomial m = nd_element(pair, r);
      round_trip = round_trip && decode(m, r).pair == pair;
      basis.push_back(std::move(m));
    });
    std::sort(basis.begin(), basis.end(), mono_less);
    c.expect(basis == standard, "set mismatch" + where);
    c.expect(round_trip, "pair round trip failed" + where);
    bool decode_trip = true;
    for (const Monomial& m : standard) {
      decode_trip = decode_trip && nd_element(decode(m, r).pair, r) == m;
    }
    c.expect(decode_trip, "monomial round trip failed" + where);
  }
}

void criterion_bidegrees(Check& c) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      bool all = true;
      for_each_group_element(r, n, [&](const ColoredPermutation& g) {
        const Monomial b = nd_element(decompose(g), r);
        all = all && bidegree(b) == BiDegree{ndes(g), nmajor(g)};
      });
      c.expect(all, "bidegree mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
  }
}

void criterion_identities(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 5; ++n) {
    c.expect(verify_identity(IdentityKind::carlitz, 1, n, 8).holds,
             "carlitz fails at n=" + std::to_string(n));
  }
  for (int r = 2; r <= 4; ++r) {
    for (int n = 1; n <= 4; ++n) {
      c.expect(verify_identity(IdentityKind::bagno, r, n, 8).holds,
               "bagno fails at r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(elapsed < 60.0, "runtime exceeded 1 min");
}

void criterion_coinvariant_map(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    bool all = true;
    for (const std::vector<int>& pi : all_permutations(n)) {
      all = all && coinvariant_image(gs_element(pi)) == classical_gs_exponents(pi);
    }
    c.expect(all, "image mismatch at n=" + std::to_string(n));
  }
  // Multiplicativity on every pair of variables for n <= 4.
  for (int n = 1; n <= 4; ++n) {
    bool multiplicative = true;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        const Monomial ma = Monomial::variable(SubsetId(n, a));
        const Monomial mb = Monomial::variable(SubsetId(n, b), 2);
        const std::vector<int> ia = coinvariant_image(ma);
        const std::vector<int> ib = coinvariant_image(mb);
        std::vector<int> sum(ia.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ia[i] + ib[i];
        multiplicative = multiplicative && coinvariant_image(ma * mb) == sum;
      }
    }
    c.expect(multiplicative, "multiplicativity fails at n=" + std::to_string(n));
  }
  // Equivariance: relabeling subsets permutes the image exponent vector.
  for (int n = 1; n <= 4; ++n) {
    bool equivariant = true;
    for (const std::vector<int>& sigma : all_permutations(n)) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const Monomial za = Monomial::variable(SubsetId(n, mask));
        const std::vector<int> before = coinvariant_image(za);
        std::vector<int> permuted(before.size());
        for (int i = 0; i < n; ++i) permuted[sigma[i] - 1] = before[i];
        equivariant = equivariant && coinvariant_image(permute_subsets(za, sigma)) == permuted;
      }
    }
    c.expect(equivariant, "equivariance fails at n=" + std::to_string(n));
  }
}

void criterion_buchberger_soundness(Check& c) {
  for (const auto& [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 2}}) {
    const std::string where = " at r=" + std::to_string(r) + " n=" + std::to_string(n);
    const GeneratorSet gens = combined_ideal(r, n);
    const GroebnerBasis with_criteria = buchberger(gens);
    const GroebnerBasis without = buchberger(gens, {false, false});
    c.expect(with_criteria.basis == without.basis, "criteria changed the basis" + where);
    c.expect(all_s_polynomials_reduce(with_criteria.basis), "S-polynomial survives" + where);
    c.expect(all_s_polynomials_reduce(without.basis),
             "S-polynomial survives without criteria" + where);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"worked-example suite", criterion_worked_example},
      {"leading-term ideals match the prediction", criterion_lt_ideals},
      {"dimension counts r^n n!", criterion_dimension},
      {"descent basis equals the standard monomials", criterion_descent_basis},
      {"bidegrees encode (ndes, nmajor)", criterion_bidegrees},
      {"Euler-Mahonian identities to order 8", criterion_identities},
      {"coinvariant-algebra map", criterion_coinvariant_map},
      {"Buchberger criteria soundness", criterion_buchberger_soundness},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    criteria[i].second(check);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first
              << " (" << std::fixed << std::setprecision(2) << elapsed << " s)";
    if (!check.ok) {
      std::cout << " -- " << check.detail.str();
      ++failures;
    }
    std::cout << '\n';
  }
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria FAILED\n";
  }
  return failures == 0 ? 0 : 1;
}
