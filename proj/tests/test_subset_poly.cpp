#include "cubealg/subset_poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "cubealg/json_io.hpp"
#include "test_util.hpp"

using namespace cubealg;

namespace {

// Literal reading of the definition: A is lexicographically before B when
// some i in A \ B has every smaller element of B already in A.
bool lex_before_oracle(std::uint32_t a, std::uint32_t b) {
  for (int i = 1; i <= 16; ++i) {
    const std::uint32_t bit = 1u << (i - 1);
    if (!(a & bit) || (b & bit)) continue;
    bool witness = true;
    for (int j = 1; j < i; ++j) {
      const std::uint32_t jbit = 1u << (j - 1);
      if ((b & jbit) && !(a & jbit)) witness = false;
    }
    if (witness) return true;
  }
  return false;
}

bool var_greater_oracle(std::uint32_t a, std::uint32_t b) {
  if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
  if (a == b) return false;
  return lex_before_oracle(a, b);
}

// Dense exponent vector indexed with the largest variable leftmost.
std::vector<int> dense_exponents(const Monomial& m, const std::vector<std::uint32_t>& order) {
  std::vector<int> out(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out[i] = m.exponent(SubsetId(m.n(), order[i]));
  }
  return out;
}

// Grevlex straight from the definition on dense vectors.
bool mono_greater_oracle(const Monomial& a, const Monomial& b,
                         const std::vector<std::uint32_t>& order) {
  const std::vector<int> va = dense_exponents(a, order);
  const std::vector<int> vb = dense_exponents(b, order);
  int da = 0;
  int db = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    da += va[i];
    db += vb[i];
  }
  if (da != db) return da > db;
  for (std::size_t i = order.size(); i-- > 0;) {
    if (va[i] != vb[i]) return va[i] < vb[i];  // rightmost nonzero negative
  }
  return false;
}

// The 2^n masks sorted into variable order by the oracle alone.
std::vector<std::uint32_t> oracle_variable_order(int n) {
  std::vector<std::uint32_t> order(1u << n);
  for (std::uint32_t m = 0; m < order.size(); ++m) order[m] = m;
  std::sort(order.begin(), order.end(), var_greater_oracle);
  return order;
}

Monomial random_monomial(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> factors(0, 3);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
  std::uniform_int_distribution<int> exp(1, 3);
  Monomial m(n);
  const int k = factors(rng);
  for (int i = 0; i < k; ++i) {
    m *= Monomial::variable(SubsetId(n, mask(rng)), exp(rng));
  }
  return m;
}

Polynomial random_polynomial(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Term> out;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    out.push_back({random_monomial(n, rng), Rational(num(rng), den(rng))});
  }
  return Polynomial::from_terms(n, std::move(out));
}

}  // namespace

TEST_CASE("variable order on T_3 and on 3-subsets of [5]") {
  const int n = 3;
  std::vector<SubsetId> expected = {
      SubsetId::of(n, {}),     SubsetId::of(n, {1}),    SubsetId::of(n, {2}),
      SubsetId::of(n, {3}),    SubsetId::of(n, {1, 2}), SubsetId::of(n, {1, 3}),
      SubsetId::of(n, {2, 3}), SubsetId::of(n, {1, 2, 3})};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(var_cmp(expected[i], expected[i]) == 0);
    for (std::size_t j = i + 1; j < expected.size(); ++j) {
      CHECK(var_cmp(expected[i], expected[j]) > 0);
      CHECK(var_cmp(expected[j], expected[i]) < 0);
    }
  }
  const VarTable& table = var_table(n);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(table.mask_of_rank[i] == expected[i].mask());
  }

  // Subset order on the 3-subsets of [5]; reversed as variables.
  const std::vector<std::vector<int>> subsets = {
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
      {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  for (std::size_t i = 0; i + 1 < subsets.size(); ++i) {
    CHECK(var_cmp(SubsetId::of(5, subsets[i]), SubsetId::of(5, subsets[i + 1])) > 0);
  }
}

TEST_CASE("variable order agrees with the literal definition for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<std::uint32_t> order = oracle_variable_order(n);
    const VarTable& table = var_table(n);
    REQUIRE(table.mask_of_rank.size() == order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      CHECK(table.mask_of_rank[i] == order[i]);
    }
  }
}

TEST_CASE("grevlex comparison on the worked example") {
  const int n = 3;
  const Monomial a = parse_monomial("z{2}^4", n);
  const Monomial b = parse_monomial("z{1}^2*z{1,2}*z{}", n);
  CHECK(mono_cmp(a, b) > 0);
  CHECK(mono_cmp(b, a) < 0);
  CHECK(mono_cmp(a, a) == 0);
}

TEST_CASE("grevlex matches the dense-vector oracle") {
  // All degree-2 monomials of T_2, sorted both ways.
  const int n = 2;
  const std::vector<std::uint32_t> order = oracle_variable_order(n);
  std::vector<Monomial> monos;
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = a; b < 4; ++b) {
      monos.push_back(Monomial::variable(SubsetId(n, a)) * Monomial::variable(SubsetId(n, b)));
    }
  }
  std::vector<Monomial> by_library = monos;
  std::sort(by_library.begin(), by_library.end(), MonoGreater{});
  std::vector<Monomial> by_oracle = monos;
  std::sort(by_oracle.begin(), by_oracle.end(),
            [&](const Monomial& x, const Monomial& y) { return mono_greater_oracle(x, y, order); });
  CHECK(by_library == by_oracle);

  // Random cross-check in T_3.
  auto rng = cubealg_test::make_rng(1);
  const std::vector<std::uint32_t> order3 = oracle_variable_order(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Monomial x = random_monomial(3, rng);
    const Monomial y = random_monomial(3, rng);
    const int c = mono_cmp(x, y);
    if (c > 0) CHECK(mono_greater_oracle(x, y, order3));
    if (c < 0) CHECK(mono_greater_oracle(y, x, order3));
    if (c == 0) CHECK(x == y);
  }
}

TEST_CASE("grevlex is a multiplicative well-order") {
  auto rng = cubealg_test::make_rng(2);
  const Monomial one(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Monomial a = random_monomial(3, rng);
    const Monomial b = random_monomial(3, rng);
    const Monomial c = random_monomial(3, rng);
    // 1 is minimal.
    if (!a.is_unit()) CHECK(mono_cmp(a, one) > 0);
    // Multiplicative.
    CHECK(mono_cmp(a * c, b * c) == mono_cmp(a, b));
    // Antisymmetry and transitivity.
    CHECK(mono_cmp(a, b) == -mono_cmp(b, a));
    if (mono_cmp(a, b) <= 0 && mono_cmp(b, c) <= 0) CHECK(mono_cmp(a, c) <= 0);
  }
}

TEST_CASE("monomial division, lcm and coprimality") {
  const int n = 2;
  const Monomial ab = parse_monomial("z{1}^2*z{2}", n);
  const Monomial a = parse_monomial("z{1}", n);
  CHECK(a.divides(ab));
  CHECK_FALSE(ab.divides(a));
  CHECK(ab / a == parse_monomial("z{1}*z{2}", n));
  CHECK_THROWS_AS(a / ab, std::invalid_argument);
  CHECK(lcm(parse_monomial("z{1}^2", n), parse_monomial("z{1}*z{2}", n)) ==
        parse_monomial("z{1}^2*z{2}", n));
  CHECK(coprime(parse_monomial("z{1}^2", n), parse_monomial("z{2}^3", n)));
  CHECK_FALSE(coprime(parse_monomial("z{1}^2", n), parse_monomial("z{1}*z{2}", n)));
}

TEST_CASE("polynomial arithmetic") {
  const int n = 2;
  const Polynomial f = parse_polynomial("z{1}*z{2} - z{}*z{1,2}", n);
  CHECK((f + f.scaled(Rational(-1))).is_zero());
  CHECK(f * parse_polynomial("z{1}", n) ==
        parse_polynomial("z{1}^2*z{2} - z{}*z{1}*z{1,2}", n));

  // Binomial expansion oracle: (z{1} + z{2})^3 has coefficients 1, 3, 3, 1.
  const Polynomial s = parse_polynomial("z{1} + z{2}", n);
  const Polynomial cube = s * s * s;
  CHECK(cube.term_count() == 4);
  CHECK(cube.coefficient(parse_monomial("z{1}^3", n)) == 1);
  CHECK(cube.coefficient(parse_monomial("z{1}^2*z{2}", n)) == 3);
  CHECK(cube.coefficient(parse_monomial("z{1}*z{2}^2", n)) == 3);
  CHECK(cube.coefficient(parse_monomial("z{2}^3", n)) == 1);
}

TEST_CASE("polynomials satisfy ring axioms on random inputs") {
  auto rng = cubealg_test::make_rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = random_polynomial(3, rng);
    const Polynomial g = random_polynomial(3, rng);
    const Polynomial h = random_polynomial(3, rng);
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("leading terms") {
  const int n = 3;
  const Polynomial s = parse_polynomial("-z{2}^4 - z{}*z{1}^2*z{1,2}", n);
  const auto [lm, lc] = leading_term(s);
  CHECK(lm == parse_monomial("z{2}^4", n));
  CHECK(lc == -1);

  const auto [cm, cc] = leading_term(Polynomial::constant(n, Rational(5)));
  CHECK(cm.is_unit());
  CHECK(cc == 5);

  const Polynomial e21 = parse_polynomial("z{1}^2 + z{2}^2", 2);
  CHECK(leading_term(e21).first == parse_monomial("z{1}^2", 2));

  CHECK_THROWS_AS(leading_term(Polynomial(2)), ZeroPolynomialError);
}

TEST_CASE("bidegree") {
  CHECK(bidegree(parse_monomial("z{}", 3)) == BiDegree{1, 0});
  CHECK(bidegree(Monomial(3)) == BiDegree{0, 0});
  const Monomial big =
      parse_monomial("z{4}*z{2,4}^4*z{1,2,4,5}^2*z{1,2,3,4,5}^2*z{1,2,3,4,5,6}", 6);
  CHECK(bidegree(big) == BiDegree{10, 33});

  auto rng = cubealg_test::make_rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Monomial a = random_monomial(3, rng);
    const Monomial b = random_monomial(3, rng);
    CHECK(bidegree(a * b) == bidegree(a) + bidegree(b));
  }
}

TEST_CASE("text format round trips bit-exactly") {
  const int n = 6;
  const Monomial m = parse_monomial("z{2,4}^4*z{4}", n);
  CHECK(to_string(m) == "z{2,4}^4*z{4}");
  CHECK(parse_monomial(to_string(m), n) == m);

  CHECK(to_string(parse_polynomial("0", 2)) == "0");
  CHECK(to_string(parse_polynomial("3/2*z{} - z{1}", 2)) == "3/2*z{} - z{1}");
  CHECK(to_string(parse_monomial("z{}", 2)) == "z{}");
  CHECK_THROWS_AS(parse_polynomial("z{7}", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("z{1", 2), ParseError);
  CHECK_THROWS_AS(parse_monomial("2*z{1}", 2), ParseError);

  auto rng = cubealg_test::make_rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = random_polynomial(3, rng);
    CHECK(parse_polynomial(to_string(f), 3) == f);
    const std::string text = to_string(f);
    CHECK(to_string(parse_polynomial(text, 3)) == text);
  }
}

TEST_CASE("JSON format round trips bit-exactly") {
  auto rng = cubealg_test::make_rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_polynomial(3, rng);
    const nlohmann::json j = polynomial_to_json(f);
    CHECK(polynomial_from_json(j, 3) == f);
    CHECK(polynomial_to_json(polynomial_from_json(j, 3)) == j);
  }
  const Monomial m = parse_monomial("z{2,4}^4*z{4}", 6);
  CHECK(monomial_from_json(monomial_to_json(m), 6) == m);
}

TEST_CASE("ambient mismatches are rejected") {
  CHECK_THROWS_AS(parse_monomial("z{1}", 2) * parse_monomial("z{1}", 3), DimensionError);
  CHECK_THROWS_AS(parse_polynomial("z{1}", 2) + parse_polynomial("z{1}", 3), DimensionError);
  CHECK_THROWS_AS(mono_cmp(Monomial(2), Monomial(3)), DimensionError);
  CHECK_THROWS_AS(SubsetId(17, 0), std::invalid_argument);
  CHECK_THROWS_AS(SubsetId(2, 0b100), std::invalid_argument);
}
