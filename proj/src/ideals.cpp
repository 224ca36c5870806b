#include "cubealg/ideals.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace cubealg {

namespace {

bool is_prefix_or_empty(std::uint32_t mask) {
  // Contiguous low bits: [k] for some k >= 0.
  return (mask & (mask + 1)) == 0;
}

int max_element(std::uint32_t mask) { return 32 - std::countl_zero(mask); }
int min_element(std::uint32_t mask) { return std::countr_zero(mask) + 1; }

Monomial power(int n, std::uint32_t mask, int exp) {
  return Monomial::variable(SubsetId(n, mask), exp);
}

}  // namespace

std::string to_string(GeneratorLabel label) {
  switch (label) {
    case GeneratorLabel::toric: return "toric";
    case GeneratorLabel::invariant: return "invariant";
    case GeneratorLabel::combined: return "combined";
    case GeneratorLabel::predicted_lt: return "predicted-lt";
  }
  return "unknown";
}

GeneratorSet toric_generators(int n) {
  GeneratorSet out{n, 0, GeneratorLabel::toric, {}};
  const std::uint32_t count = 1u << n;
  for (std::uint32_t a = 1; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      const std::uint32_t meet = a & b;
      if (meet == a || meet == b) continue;  // comparable pair
      Polynomial gen = Polynomial::term(power(n, a, 1) * power(n, b, 1), Rational(1)) -
                       Polynomial::term(power(n, meet, 1) * power(n, a | b, 1), Rational(1));
      // |A|B| > max(|A|,|B|) forces the incomparable product in front.
      assert(gen.leading().mono == power(n, a, 1) * power(n, b, 1));
      out.gens.push_back(std::move(gen));
    }
  }
  return out;
}

GeneratorSet invariant_generators(int r, int n) {
  if (r < 1) throw std::invalid_argument("need r >= 1");
  GeneratorSet out{n, r, GeneratorLabel::invariant, {}};
  const int k_low = r == 1 ? 0 : 1;
  if (r >= 2) {
    out.gens.push_back(Polynomial::term(power(n, 0, 1), Rational(1)));
  }
  for (int k = k_low; k <= n; ++k) {
    std::vector<Term> terms;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) == k) terms.push_back({power(n, mask, r), Rational(1)});
    }
    out.gens.push_back(Polynomial::from_terms(n, std::move(terms)));
  }
  return out;
}

GeneratorSet combined_ideal(int r, int n) {
  GeneratorSet toric = toric_generators(n);
  GeneratorSet invariant = invariant_generators(r, n);
  GeneratorSet out{n, r, GeneratorLabel::combined, std::move(toric.gens)};
  for (Polynomial& g : invariant.gens) {
    if (std::find(out.gens.begin(), out.gens.end(), g) == out.gens.end()) {
      out.gens.push_back(std::move(g));
    }
  }
  return out;
}

MonomialIdeal make_monomial_ideal(int n, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), mono_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal ideal{n, {}};
  for (const Monomial& g : gens) {
    // A divisor never exceeds its multiple in a term order, so scanning in
    // ascending order sees divisors first.
    const bool redundant = std::any_of(ideal.min_gens.begin(), ideal.min_gens.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) ideal.min_gens.push_back(g);
  }
  return ideal;
}

bool monomial_ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.n == b.n && a.min_gens == b.min_gens;
}

std::vector<TaggedMonomial> predicted_lt_generators(int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("need r >= 1 and n >= 1");
  const std::uint32_t count = 1u << n;
  std::vector<TaggedMonomial> raw;

  raw.push_back({power(n, 0, 1), 1});
  for (int k = 1; k <= n; ++k) {
    raw.push_back({power(n, (1u << k) - 1, r), 2});
  }
  for (std::uint32_t a = 1; a < count; ++a) {
    if (!is_prefix_or_empty(a)) raw.push_back({power(n, a, r + 1), 3});
  }
  for (std::uint32_t a = 1; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      const std::uint32_t meet = a & b;
      if (meet != a && meet != b) raw.push_back({power(n, a, 1) * power(n, b, 1), 4});
    }
  }
  // Families 5-7 range over chains of nonempty subsets, strict containments.
  for (std::uint32_t a = 1; a < count; ++a) {
    if (is_prefix_or_empty(a)) continue;
    const std::uint32_t rest = (count - 1) & ~a;
    // Proper supersets b = a | extra, extra a nonempty subset of the complement.
    for (std::uint32_t extra = rest; extra != 0; extra = (extra - 1) & rest) {
      const std::uint32_t b = a | extra;
      if (min_element(extra) > max_element(a)) {
        raw.push_back({power(n, a, r) * power(n, b, 1), 5});
      }
    }
  }
  for (std::uint32_t b = 1; b < count; ++b) {
    if (is_prefix_or_empty(b)) continue;
    int lmax = 0;
    while (lmax < n && (b >> lmax) & 1u) ++lmax;  // largest l with [l] in b
    if (lmax == 0) continue;
    const std::uint32_t b_bits = b;
    for (std::uint32_t sub = (b - 1) & b; sub != 0; sub = (sub - 1) & b) {
      const std::uint32_t diff = b_bits & ~sub;
      bool witnessed = false;
      for (int l = 1; l <= lmax && !witnessed; ++l) {
        const std::uint32_t prefix = (1u << l) - 1;
        witnessed = (prefix & ~sub) != 0 && (diff & ~prefix) == 0;
      }
      if (witnessed) raw.push_back({power(n, sub, 1) * power(n, b, r), 6});
    }
  }
  for (std::uint32_t a2 = 1; a2 < count; ++a2) {
    if (is_prefix_or_empty(a2)) continue;
    for (std::uint32_t a1 = (a2 - 1) & a2; a1 != 0; a1 = (a1 - 1) & a2) {
      const int hi = max_element(a2 & ~a1);
      const std::uint32_t rest = (count - 1) & ~a2;
      for (std::uint32_t extra = rest; extra != 0; extra = (extra - 1) & rest) {
        if (hi < min_element(extra)) {
          raw.push_back({power(n, a1, 1) * power(n, a2, r) * power(n, a2 | extra, 1), 7});
        }
      }
    }
  }

  // Minimize while keeping the (smallest) family tag of each survivor.
  std::sort(raw.begin(), raw.end(), [](const TaggedMonomial& x, const TaggedMonomial& y) {
    const int c = mono_cmp(x.mono, y.mono);
    return c != 0 ? c < 0 : x.family < y.family;
  });
  std::vector<TaggedMonomial> minimal;
  for (const TaggedMonomial& cand : raw) {
    if (!minimal.empty() && minimal.back().mono == cand.mono) continue;
    const bool redundant =
        std::any_of(minimal.begin(), minimal.end(),
                    [&](const TaggedMonomial& kept) { return kept.mono.divides(cand.mono); });
    if (!redundant) minimal.push_back(cand);
  }
  return minimal;
}

MonomialIdeal predicted_lt_ideal(int r, int n) {
  std::vector<Monomial> gens;
  for (TaggedMonomial& t : predicted_lt_generators(r, n)) gens.push_back(std::move(t.mono));
  return make_monomial_ideal(n, std::move(gens));
}

}  // namespace cubealg
