#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubealg/errors.hpp"
#include "cubealg/rational.hpp"

namespace cubealg {

// Subset variables are indexed by bitmasks; bit i-1 encodes element i.
inline constexpr int kMaxAmbient = 16;

// A subset A of [n], naming the variable z_A of T_n.
class SubsetId {
 public:
  SubsetId(int n, std::uint32_t mask);

  static SubsetId empty_set(int n) { return SubsetId(n, 0); }
  static SubsetId full_set(int n) { return SubsetId(n, (1u << n) - 1); }
  // The prefix [k] = {1,...,k}; k = 0 gives the empty set.
  static SubsetId prefix(int n, int k);
  static SubsetId of(int n, const std::vector<int>& elements);

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool contains(int element) const { return (mask_ >> (element - 1)) & 1u; }
  std::vector<int> elements() const;

  friend bool operator==(const SubsetId&, const SubsetId&) = default;

 private:
  int n_;
  std::uint32_t mask_;
};

// Variable order of T_n: z_A > z_B iff |A| < |B|, or |A| = |B| and A is
// lexicographically before B (the least element of the symmetric difference
// lies in A). Returns +1 when z_a > z_b.
int var_cmp(const SubsetId& a, const SubsetId& b);

// All 2^n variables ranked once: rank 0 is the largest variable z_empty,
// rank 2^n - 1 the smallest z_[n]. Built on first use, then shared read-only.
struct VarTable {
  int n = 0;
  std::vector<std::uint32_t> mask_of_rank;
  std::vector<std::uint32_t> rank_of_mask;
  std::vector<int> card_of_rank;
};

const VarTable& var_table(int n);

// The (t, q) bidegree induced by deg(z_A) = t q^|A|.
struct BiDegree {
  int tdeg = 0;
  int qdeg = 0;

  BiDegree operator+(const BiDegree& o) const { return {tdeg + o.tdeg, qdeg + o.qdeg}; }
  friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

// Sparse monomial over the 2^n subset variables; exponents keyed by variable
// rank, stored in ascending rank order with no zeros.
class Monomial {
 public:
  struct VarExp {
    std::uint32_t rank = 0;
    int exp = 0;
    friend bool operator==(const VarExp&, const VarExp&) = default;
  };

  explicit Monomial(int n);  // the unit monomial 1
  static Monomial variable(const SubsetId& v, int exp = 1);

  int n() const { return n_; }
  int total_degree() const { return degree_; }
  bool is_unit() const { return entries_.empty(); }
  const std::vector<VarExp>& entries() const { return entries_; }
  int exponent(const SubsetId& v) const;
  // (subset, exponent) pairs in descending variable order.
  std::vector<std::pair<SubsetId, int>> factors() const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) {
    a *= b;
    return a;
  }
  // Whether this divides m.
  bool divides(const Monomial& m) const;
  // Exact division; throws std::invalid_argument when not divisible.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int n_;
  int degree_ = 0;
  std::vector<VarExp> entries_;
};

// Graded reverse lexicographic order on the ranked variables: total degree
// first; ties broken by the rightmost nonzero coordinate of the exponent
// difference (largest variable listed leftmost) being negative.
int mono_cmp(const Monomial& a, const Monomial& b);

inline bool mono_less(const Monomial& a, const Monomial& b) { return mono_cmp(a, b) < 0; }

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) < 0; }
};
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};

BiDegree bidegree(const Monomial& m);

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial with exact rational coefficients; terms kept in strictly
// descending monomial order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(int n);  // the zero polynomial
  static Polynomial constant(int n, const Rational& c);
  static Polynomial term(Monomial m, Rational c);
  // Normalizes: merges duplicate monomials, drops zeros, sorts descending.
  static Polynomial from_terms(int n, std::vector<Term> terms);
  // Trusts the input: strictly descending monomials, no zero coefficients.
  static Polynomial from_sorted(int n, std::vector<Term> terms);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Throws ZeroPolynomialError on the zero polynomial.
  const Term& leading() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int n_;
  std::vector<Term> terms_;
};

// (leading monomial, leading coefficient); throws ZeroPolynomialError on 0.
std::pair<Monomial, Rational> leading_term(const Polynomial& f);

// p - c * (m * g) in one merge pass; the division-step workhorse.
Polynomial subtract_scaled(const Polynomial& p, const Rational& c, const Monomial& m,
                           const Polynomial& g);

// Text formats. Subsets print as sorted comma lists: "z{2,4}", "z{}" for
// z_empty; monomial factors joined by '*' in ascending variable order;
// rational coefficients as "p/q". Round trips are bit-exact.
std::string to_string(const SubsetId& v);
std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& f);
std::string to_string(const BiDegree& d);

Monomial parse_monomial(std::string_view text, int n);
Polynomial parse_polynomial(std::string_view text, int n);

}  // namespace cubealg
