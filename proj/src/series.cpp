#include "cubealg/series.hpp"

#include <algorithm>
#include <numeric>

namespace cubealg {

BiSeries::BiSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
}

Rational BiSeries::coeff(int t, int q) const {
  const auto it = coeffs_.find({t, q});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int BiSeries::max_tdeg() const {
  int best = 0;
  for (const auto& [key, value] : coeffs_) best = std::max(best, key.first);
  return best;
}

void BiSeries::add_term(int t, int q, const Rational& c) {
  if (t < 0 || q < 0) throw std::invalid_argument("negative degree");
  if (t > trunc_ || c == 0) return;
  const auto it = coeffs_.find({t, q});
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::make_pair(t, q), c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.trunc_, b.trunc_));
  for (const auto& [key, value] : a.coeffs_) out.add_term(key.first, key.second, value);
  for (const auto& [key, value] : b.coeffs_) out.add_term(key.first, key.second, value);
  return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.trunc_, b.trunc_));
  for (const auto& [key, value] : a.coeffs_) out.add_term(key.first, key.second, value);
  for (const auto& [key, value] : b.coeffs_) out.add_term(key.first, key.second, -value);
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.trunc_, b.trunc_));
  for (const auto& [ka, va] : a.coeffs_) {
    if (ka.first > out.trunc_) continue;
    for (const auto& [kb, vb] : b.coeffs_) {
      if (out.trunc_ != BiSeries::kExact && ka.first + kb.first > out.trunc_) continue;
      out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
  }
  return out;
}

BiSeries BiSeries::truncated(int k) const {
  BiSeries out(std::min(trunc_, k));
  for (const auto& [key, value] : coeffs_) out.add_term(key.first, key.second, value);
  return out;
}

std::map<int, Rational> BiSeries::at_q_one() const {
  std::map<int, Rational> out;
  for (const auto& [key, value] : coeffs_) out[key.first] += value;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BiSeries lhs_series(int n, int trunc) {
  if (n < 1 || trunc < 0) throw std::invalid_argument("need n >= 1 and trunc >= 0");
  BiSeries out(trunc);
  for (int k = 0; k <= trunc; ++k) {
    // [k+1]_q^n by repeated convolution.
    std::vector<Rational> pw{Rational(1)};
    const std::vector<Rational> qint(k + 1, Rational(1));
    for (int rep = 0; rep < n; ++rep) {
      std::vector<Rational> next(pw.size() + k, Rational(0));
      for (std::size_t i = 0; i < pw.size(); ++i) {
        if (pw[i] == 0) continue;
        for (std::size_t j = 0; j < qint.size(); ++j) next[i + j] += pw[i];
      }
      pw = std::move(next);
    }
    for (std::size_t qd = 0; qd < pw.size(); ++qd) {
      out.add_term(k, static_cast<int>(qd), pw[qd]);
    }
  }
  return out;
}

std::vector<std::uint64_t> eulerian_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > 10) throw SizeLimitError("Eulerian polynomial enumeration capped at n = 10");
  std::vector<std::uint64_t> coeffs(n, 0);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i) des += pi[i] > pi[i + 1];
    ++coeffs[des];
  } while (std::next_permutation(pi.begin(), pi.end()));
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

BiSeries numerator_negative(int r, int n, std::uint64_t limit) {
  BiSeries out(BiSeries::kExact);
  for_each_group_element(
      r, n, [&](const ColoredPermutation& g) { out.add_term(ndes(g), nmajor(g), Rational(1)); },
      limit);
  return out;
}

namespace {

// Denominators as (a, b) exponent pairs, one factor (1 - t^a q^b) each.
std::vector<std::pair<int, int>> denominator_exponents(IdentityKind kind, int r, int n) {
  std::vector<std::pair<int, int>> factors;
  if (kind == IdentityKind::carlitz) {
    for (int j = 0; j <= n; ++j) factors.emplace_back(1, j);
  } else {
    factors.emplace_back(1, 0);
    for (int j = 1; j <= n; ++j) factors.emplace_back(r, r * j);
  }
  return factors;
}

}  // namespace

BiSeries denominator_product(IdentityKind kind, int r, int n) {
  BiSeries out(BiSeries::kExact);
  out.add_term(0, 0, Rational(1));
  for (const auto& [a, b] : denominator_exponents(kind, r, n)) {
    BiSeries factor(BiSeries::kExact);
    factor.add_term(0, 0, Rational(1));
    factor.add_term(a, b, Rational(-1));
    out = out * factor;
  }
  return out;
}

BiSeries denominator_expansion(IdentityKind kind, int r, int n, int trunc) {
  if (trunc < 0) throw std::invalid_argument("need trunc >= 0");
  BiSeries out(trunc);
  out.add_term(0, 0, Rational(1));
  for (const auto& [a, b] : denominator_exponents(kind, r, n)) {
    BiSeries geometric(trunc);
    for (int m = 0; a * m <= trunc; ++m) geometric.add_term(a * m, b * m, Rational(1));
    out = out * geometric;
  }
  return out;
}

std::vector<Mismatch> series_mismatches(const BiSeries& lhs, const BiSeries& rhs, int trunc) {
  std::vector<Mismatch> out;
  auto record = [&](int t, int q) {
    if (t > trunc) return;
    const Rational a = lhs.coeff(t, q);
    const Rational b = rhs.coeff(t, q);
    if (a != b) out.push_back({t, q, a, b});
  };
  for (const auto& [key, value] : lhs.coeffs()) record(key.first, key.second);
  for (const auto& [key, value] : rhs.coeffs()) {
    if (lhs.coeff(key.first, key.second) == 0) record(key.first, key.second);
  }
  std::sort(out.begin(), out.end(), [](const Mismatch& x, const Mismatch& y) {
    return std::pair(x.t, x.q) < std::pair(y.t, y.q);
  });
  return out;
}

IdentityReport verify_identity(IdentityKind kind, int r, int n, int trunc,
                               std::uint64_t limit) {
  if (r < 1 || n < 1 || trunc < 0) throw std::invalid_argument("bad identity parameters");
  IdentityReport report{kind, r, n, trunc, false, {}};
  const int group_r = kind == IdentityKind::carlitz ? 1 : r;
  const BiSeries numerator = numerator_negative(group_r, n, limit);
  const BiSeries rhs = numerator * denominator_expansion(kind, r, n, trunc);
  report.mismatches = series_mismatches(lhs_series(n, trunc), rhs, trunc);
  report.holds = report.mismatches.empty();
  return report;
}

}  // namespace cubealg
