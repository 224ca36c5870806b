#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "cubealg/colored_perm.hpp"
#include "cubealg/rational.hpp"

namespace cubealg {

// Bivariate series in (t, q), exact in q and truncated in t at `trunc`
// (kExact marks an untruncated polynomial). Coefficients are exact
// rationals; zero coefficients are never stored.
class BiSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  explicit BiSeries(int trunc = kExact);

  int trunc() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::pair<int, int>, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int t, int q) const;
  int max_tdeg() const;

  // Terms with t beyond the truncation order are dropped silently.
  void add_term(int t, int q, const Rational& c);

  // Sums and products truncate at the smaller of the two orders.
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  BiSeries truncated(int k) const;

  // Specialize q = 1: the map t -> sum of the q-coefficients.
  std::map<int, Rational> at_q_one() const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  int trunc_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

// sum_{k=0}^{trunc} [k+1]_q^n t^k, the bigraded Hilbert series of the full
// cube algebra; [k+1]_q = 1 + q + ... + q^k.
BiSeries lhs_series(int n, int trunc);

// Descent generating polynomial over S_n; coefficient k counts permutations
// with k descents. A_n(1) = n!.
std::vector<std::uint64_t> eulerian_polynomial(int n);

// sum over Z_r wr S_n of t^ndes q^nmajor (for r = 1 this is the classical
// des/maj generating function of S_n).
BiSeries numerator_negative(int r, int n, std::uint64_t limit = kDefaultEnumerationLimit);

enum class IdentityKind { carlitz, bagno };

// The denominator as an exact polynomial: prod_{j=0}^{n} (1 - t q^j) for
// carlitz, (1 - t) prod_{j=1}^{n} (1 - t^r q^{rj}) for bagno.
BiSeries denominator_product(IdentityKind kind, int r, int n);

// Reciprocal of the denominator expanded mod t^{trunc+1} via geometric
// series; multiplying back by denominator_product gives 1 mod t^{trunc+1}.
BiSeries denominator_expansion(IdentityKind kind, int r, int n, int trunc);

struct Mismatch {
  int t = 0;
  int q = 0;
  Rational lhs;
  Rational rhs;
};

// Coefficientwise differences for tdeg <= trunc.
std::vector<Mismatch> series_mismatches(const BiSeries& lhs, const BiSeries& rhs, int trunc);

struct IdentityReport {
  IdentityKind kind = IdentityKind::carlitz;
  int r = 1;
  int n = 1;
  int trunc = 8;
  bool holds = false;
  std::vector<Mismatch> mismatches;
};

// Checks lhs_series == numerator * expanded reciprocal denominator up to
// t^trunc, coefficientwise in q. Mismatches are data, not errors.
IdentityReport verify_identity(IdentityKind kind, int r, int n, int trunc,
                               std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace cubealg
