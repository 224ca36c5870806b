#include "cubealg/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cubealg {

namespace {

// Division-time accumulator keeping terms in ascending order so that the
// leading term sits at the back.
struct WorkPoly {
  std::vector<Term> asc;

  static WorkPoly from(const Polynomial& f) {
    WorkPoly w;
    w.asc.assign(f.terms().rbegin(), f.terms().rend());
    return w;
  }
  bool zero() const { return asc.empty(); }
  const Term& leading() const { return asc.back(); }
  void drop_leading() { asc.pop_back(); }

  // *this -= c * m * g
  void sub_scaled(const Rational& c, const Monomial& m, const Polynomial& g) {
    std::vector<Term> shifted;
    shifted.reserve(g.term_count());
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
      shifted.push_back({it->mono * m, it->coeff * c});
    }
    std::vector<Term> merged;
    merged.reserve(asc.size() + shifted.size());
    auto i = asc.begin();
    auto j = shifted.begin();
    while (i != asc.end() && j != shifted.end()) {
      const int cv = mono_cmp(i->mono, j->mono);
      if (cv < 0) {
        merged.push_back(std::move(*i++));
      } else if (cv > 0) {
        merged.push_back({std::move(j->mono), -j->coeff});
        ++j;
      } else {
        Rational sum = i->coeff - j->coeff;
        if (sum != 0) merged.push_back({i->mono, std::move(sum)});
        ++i;
        ++j;
      }
    }
    for (; i != asc.end(); ++i) merged.push_back(std::move(*i));
    for (; j != shifted.end(); ++j) merged.push_back({std::move(j->mono), -j->coeff});
    asc = std::move(merged);
  }
};

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  const Rational& lc = f.leading().coeff;
  return lc == 1 ? f : f.scaled(Rational(1) / lc);
}

// Minimalize by leading monomial, then fully reduce each element modulo the
// others. Leading monomials are pairwise indivisible afterwards, so this
// yields the unique reduced basis.
std::vector<Polynomial> interreduce(std::vector<Polynomial> g) {
  for (Polynomial& f : g) f = monic(f);
  std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
    return mono_less(a.leading().mono, b.leading().mono);
  });
  std::vector<Polynomial> minimal;
  for (Polynomial& f : g) {
    const bool redundant =
        std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& kept) {
          return kept.leading().mono.divides(f.leading().mono);
        });
    if (!redundant) minimal.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = divide(minimal[i], others).remainder;
  }
  return minimal;
}

struct PairEntry {
  Monomial lcm_mono;
  std::uint64_t seq;
  std::uint32_t i;
  std::uint32_t j;
};

struct PairOrder {
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    const int c = mono_cmp(a.lcm_mono, b.lcm_mono);
    if (c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  const int n = f.n();
  for (const Polynomial& d : divisors) {
    if (d.is_zero()) throw ZeroPolynomialError("division by the zero polynomial");
    if (d.n() != n) throw DimensionError("divisor from a different ambient ring");
  }
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder;  // accumulated in descending order
  WorkPoly p = WorkPoly::from(f);
  while (!p.zero()) {
    const Term& lt = p.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& dlt = divisors[i].leading();
      if (dlt.mono.divides(lt.mono)) {
        Monomial q = lt.mono / dlt.mono;
        Rational c = lt.coeff / dlt.coeff;
        p.sub_scaled(c, q, divisors[i]);
        quotient_terms[i].push_back({std::move(q), std::move(c)});
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(p.leading());
      p.drop_leading();
    }
  }
  DivisionResult out{{}, Polynomial::from_sorted(n, std::move(remainder))};
  out.quotients.reserve(divisors.size());
  for (std::vector<Term>& q : quotient_terms) {
    out.quotients.push_back(Polynomial::from_sorted(n, std::move(q)));
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    throw ZeroPolynomialError("S-polynomial of the zero polynomial");
  }
  const auto [fm, fc] = leading_term(f);
  const auto [gm, gc] = leading_term(g);
  const Monomial l = lcm(fm, gm);
  WorkPoly acc;
  acc.sub_scaled(Rational(-1) / fc, l / fm, f);
  acc.sub_scaled(Rational(1) / gc, l / gm, g);
  std::vector<Term> desc(acc.asc.rbegin(), acc.asc.rend());
  return Polynomial::from_sorted(f.n(), std::move(desc));
}

GroebnerBasis buchberger(const GeneratorSet& gens, const BuchbergerOptions& options) {
  if (gens.gens.empty()) throw std::invalid_argument("empty generator set");
  std::vector<Polynomial> basis;
  basis.reserve(gens.gens.size());
  for (const Polynomial& g : gens.gens) {
    if (g.is_zero()) throw ZeroPolynomialError("zero generator");
    basis.push_back(g);
  }

  std::set<PairEntry, PairOrder> queue;
  std::unordered_set<std::uint64_t> pending;
  std::uint64_t seq = 0;
  const auto push_pair = [&](std::uint32_t i, std::uint32_t j) {
    queue.insert({lcm(basis[i].leading().mono, basis[j].leading().mono), seq++, i, j});
    pending.insert(pair_key(i, j));
  };
  for (std::uint32_t j = 1; j < basis.size(); ++j) {
    for (std::uint32_t i = 0; i < j; ++i) push_pair(i, j);
  }

  BuchbergerStats stats;
  while (!queue.empty()) {
    const PairEntry pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(pair_key(pair.i, pair.j));
    ++stats.pairs_considered;

    const Monomial& lm_i = basis[pair.i].leading().mono;
    const Monomial& lm_j = basis[pair.j].leading().mono;
    if (options.coprime_criterion && coprime(lm_i, lm_j)) {
      ++stats.criterion1_skips;
      continue;
    }
    if (options.chain_criterion) {
      bool skip = false;
      for (std::uint32_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == pair.i || k == pair.j) continue;
        if (!basis[k].leading().mono.divides(pair.lcm_mono)) continue;
        const auto handled = [&](std::uint32_t a, std::uint32_t b) {
          return !pending.contains(pair_key(std::min(a, b), std::max(a, b)));
        };
        skip = handled(pair.i, k) && handled(pair.j, k);
      }
      if (skip) {
        ++stats.criterion2_skips;
        continue;
      }
    }

    const Polynomial rem =
        divide(s_polynomial(basis[pair.i], basis[pair.j]), basis).remainder;
    if (rem.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    basis.push_back(monic(rem));
    const std::uint32_t t = static_cast<std::uint32_t>(basis.size()) - 1;
    for (std::uint32_t i = 0; i < t; ++i) push_pair(i, t);
  }

  return {gens.n, gens.r, interreduce(std::move(basis)), stats};
}

MonomialIdeal lt_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.basis.size());
  for (const Polynomial& g : gb.basis) lms.push_back(g.leading().mono);
  return make_monomial_ideal(gb.n, std::move(lms));
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal) {
  const int n = ideal.n;
  const std::uint32_t nvars = 1u << n;
  for (const Monomial& g : ideal.min_gens) {
    if (g.is_unit()) return {};  // the whole ring
  }
  // Exponent caps come from the pure-power generators.
  std::vector<int> cap(nvars, -1);
  std::vector<std::vector<const Monomial*>> by_max_rank(nvars);
  for (const Monomial& g : ideal.min_gens) {
    if (g.entries().size() == 1) {
      const auto& e = g.entries().front();
      cap[e.rank] = cap[e.rank] < 0 ? e.exp - 1 : std::min(cap[e.rank], e.exp - 1);
    } else {
      by_max_rank[g.entries().back().rank].push_back(&g);
    }
  }
  for (std::uint32_t v = 0; v < nvars; ++v) {
    if (cap[v] < 0) {
      throw InfiniteQuotientError("no pure power of every variable; quotient is infinite");
    }
  }

  const VarTable& table = var_table(n);
  std::vector<int> exps(nvars, 0);
  std::vector<Monomial> out;
  // Depth-first over variables in rank order; a branch dies as soon as some
  // generator divides the partial product, which keeps the walk close to the
  // chain supports that actually survive.
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    if (v == nvars) {
      Monomial m(n);
      for (std::uint32_t w = 0; w < nvars; ++w) {
        if (exps[w] > 0) m *= Monomial::variable(SubsetId(n, table.mask_of_rank[w]), exps[w]);
      }
      out.push_back(std::move(m));
      return;
    }
    for (int e = 0; e <= cap[v]; ++e) {
      exps[v] = e;
      bool divisible = false;
      for (const Monomial* g : by_max_rank[v]) {
        bool all = true;
        for (const auto& ge : g->entries()) {
          if (exps[ge.rank] < ge.exp) {
            all = false;
            break;
          }
        }
        if (all) {
          divisible = true;
          break;
        }
      }
      if (divisible) break;  // larger exponents stay divisible
      self(self, v + 1);
    }
    exps[v] = 0;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  return divide(f, gb.basis).remainder.is_zero();
}

}  // namespace cubealg
