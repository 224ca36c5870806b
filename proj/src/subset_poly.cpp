#include "cubealg/subset_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cubealg {

namespace {

void check_ambient(int n) {
  if (n < 1 || n > kMaxAmbient) {
    throw std::invalid_argument("ambient size n must be in [1, 16]");
  }
}

void check_same_ambient(int a, int b) {
  if (a != b) throw DimensionError("operands live in different ambient rings");
}

}  // namespace

SubsetId::SubsetId(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  check_ambient(n);
  if (mask >> n) throw std::invalid_argument("subset mask has elements outside [1,n]");
}

SubsetId SubsetId::prefix(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("prefix length out of range");
  return SubsetId(n, (1u << k) - 1);
}

SubsetId SubsetId::of(int n, const std::vector<int>& elements) {
  std::uint32_t mask = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("subset element outside [1,n]");
    mask |= 1u << (e - 1);
  }
  return SubsetId(n, mask);
}

int SubsetId::size() const { return std::popcount(mask_); }

std::vector<int> SubsetId::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int var_cmp(const SubsetId& a, const SubsetId& b) {
  check_same_ambient(a.n(), b.n());
  const int ca = a.size();
  const int cb = b.size();
  if (ca != cb) return ca < cb ? 1 : -1;
  if (a.mask() == b.mask()) return 0;
  // Equal cardinality: the set owning the least element of the symmetric
  // difference comes lexicographically first, hence is the larger variable.
  const std::uint32_t low = (a.mask() ^ b.mask()) & ~((a.mask() ^ b.mask()) - 1);
  return (a.mask() & low) ? 1 : -1;
}

const VarTable& var_table(int n) {
  check_ambient(n);
  static std::array<std::once_flag, kMaxAmbient + 1> flags;
  static std::array<std::unique_ptr<VarTable>, kMaxAmbient + 1> tables;
  std::call_once(flags[n], [n] {
    auto t = std::make_unique<VarTable>();
    t->n = n;
    const std::uint32_t count = 1u << n;
    t->mask_of_rank.resize(count);
    std::iota(t->mask_of_rank.begin(), t->mask_of_rank.end(), 0u);
    std::sort(t->mask_of_rank.begin(), t->mask_of_rank.end(),
              [n](std::uint32_t a, std::uint32_t b) {
                return var_cmp(SubsetId(n, a), SubsetId(n, b)) > 0;
              });
    t->rank_of_mask.resize(count);
    t->card_of_rank.resize(count);
    for (std::uint32_t rank = 0; rank < count; ++rank) {
      t->rank_of_mask[t->mask_of_rank[rank]] = rank;
      t->card_of_rank[rank] = std::popcount(t->mask_of_rank[rank]);
    }
    tables[n] = std::move(t);
  });
  return *tables[n];
}

Monomial::Monomial(int n) : n_(n) { check_ambient(n); }

Monomial Monomial::variable(const SubsetId& v, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Monomial m(v.n());
  if (exp > 0) {
    m.entries_.push_back({var_table(v.n()).rank_of_mask[v.mask()], exp});
    m.degree_ = exp;
  }
  return m;
}

int Monomial::exponent(const SubsetId& v) const {
  check_same_ambient(n_, v.n());
  const std::uint32_t rank = var_table(n_).rank_of_mask[v.mask()];
  for (const VarExp& e : entries_) {
    if (e.rank == rank) return e.exp;
  }
  return 0;
}

std::vector<std::pair<SubsetId, int>> Monomial::factors() const {
  const VarTable& table = var_table(n_);
  std::vector<std::pair<SubsetId, int>> out;
  out.reserve(entries_.size());
  for (const VarExp& e : entries_) {
    out.emplace_back(SubsetId(n_, table.mask_of_rank[e.rank]), e.exp);
  }
  return out;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  check_same_ambient(n_, o.n_);
  std::vector<VarExp> merged;
  merged.reserve(entries_.size() + o.entries_.size());
  auto i = entries_.begin();
  auto j = o.entries_.begin();
  while (i != entries_.end() && j != o.entries_.end()) {
    if (i->rank < j->rank) {
      merged.push_back(*i++);
    } else if (j->rank < i->rank) {
      merged.push_back(*j++);
    } else {
      merged.push_back({i->rank, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  merged.insert(merged.end(), i, entries_.end());
  merged.insert(merged.end(), j, o.entries_.end());
  entries_ = std::move(merged);
  degree_ += o.degree_;
  return *this;
}

bool Monomial::divides(const Monomial& m) const {
  check_same_ambient(n_, m.n_);
  if (degree_ > m.degree_) return false;
  auto j = m.entries_.begin();
  for (const VarExp& e : entries_) {
    while (j != m.entries_.end() && j->rank < e.rank) ++j;
    if (j == m.entries_.end() || j->rank != e.rank || j->exp < e.exp) return false;
  }
  return true;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  check_same_ambient(a.n_, b.n_);
  Monomial out(a.n_);
  auto j = b.entries_.begin();
  for (const Monomial::VarExp& e : a.entries_) {
    int sub = 0;
    if (j != b.entries_.end() && j->rank == e.rank) {
      sub = j->exp;
      ++j;
    }
    if (sub > e.exp) throw std::invalid_argument("monomial division is not exact");
    if (e.exp > sub) out.entries_.push_back({e.rank, e.exp - sub});
  }
  if (j != b.entries_.end()) throw std::invalid_argument("monomial division is not exact");
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a.n_, b.n_);
  Monomial out(a.n_);
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->rank < j->rank) {
      out.entries_.push_back(*i++);
    } else if (j->rank < i->rank) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.push_back({i->rank, std::max(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  out.entries_.insert(out.entries_.end(), i, a.entries_.end());
  out.entries_.insert(out.entries_.end(), j, b.entries_.end());
  for (const Monomial::VarExp& e : out.entries_) out.degree_ += e.exp;
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  check_same_ambient(a.n_, b.n_);
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->rank == j->rank) return false;
    if (i->rank < j->rank) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
  check_same_ambient(a.n(), b.n());
  if (a.total_degree() != b.total_degree()) {
    return a.total_degree() > b.total_degree() ? 1 : -1;
  }
  // Walk from the largest rank (smallest variable) down; the first
  // coordinate where the exponents differ decides: a > b iff a's exponent
  // is the smaller one there.
  auto i = a.entries().rbegin();
  auto j = b.entries().rbegin();
  while (i != a.entries().rend() && j != b.entries().rend()) {
    if (i->rank != j->rank) return i->rank > j->rank ? -1 : 1;
    if (i->exp != j->exp) return i->exp > j->exp ? -1 : 1;
    ++i;
    ++j;
  }
  if (i != a.entries().rend()) return -1;
  if (j != b.entries().rend()) return 1;
  return 0;
}

BiDegree bidegree(const Monomial& m) {
  const VarTable& table = var_table(m.n());
  BiDegree d;
  for (const Monomial::VarExp& e : m.entries()) {
    d.tdeg += e.exp;
    d.qdeg += e.exp * table.card_of_rank[e.rank];
  }
  return d;
}

Polynomial::Polynomial(int n) : n_(n) { check_ambient(n); }

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial f(n);
  if (c != 0) f.terms_.push_back({Monomial(n), c});
  return f;
}

Polynomial Polynomial::term(Monomial m, Rational c) {
  Polynomial f(m.n());
  if (c != 0) f.terms_.push_back({std::move(m), std::move(c)});
  return f;
}

Polynomial Polynomial::from_terms(int n, std::vector<Term> terms) {
  std::map<Monomial, Rational, MonoGreater> acc;
  for (Term& t : terms) {
    check_same_ambient(n, t.mono.n());
    acc[std::move(t.mono)] += t.coeff;
  }
  Polynomial f(n);
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) f.terms_.push_back({mono, std::move(coeff)});
  }
  return f;
}

Polynomial Polynomial::from_sorted(int n, std::vector<Term> terms) {
  Polynomial f(n);
  f.terms_ = std::move(terms);
  return f;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw ZeroPolynomialError("zero polynomial has no leading term");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    const int c = mono_cmp(t.mono, m);
    if (c == 0) return t.coeff;
    if (c < 0) break;
  }
  return Rational(0);
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(n_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

namespace {

// Merge two descending term lists with the second scaled by `scale` and its
// monomials multiplied by `shift` (may both be trivial).
Polynomial merge_terms(const Polynomial& f, const Polynomial& g, const Rational& scale,
                       const Monomial* shift) {
  if (scale == 0) return f;
  std::vector<Term> merged;
  merged.reserve(f.term_count() + g.term_count());
  auto i = f.terms().begin();
  std::size_t jn = 0;
  std::vector<Term> gterms;
  gterms.reserve(g.term_count());
  for (const Term& t : g.terms()) {
    gterms.push_back({shift ? t.mono * *shift : t.mono, t.coeff * scale});
  }
  while (i != f.terms().end() && jn < gterms.size()) {
    const int c = mono_cmp(i->mono, gterms[jn].mono);
    if (c > 0) {
      merged.push_back(*i++);
    } else if (c < 0) {
      merged.push_back(std::move(gterms[jn++]));
    } else {
      Rational sum = i->coeff + gterms[jn].coeff;
      if (sum != 0) merged.push_back({i->mono, std::move(sum)});
      ++i;
      ++jn;
    }
  }
  merged.insert(merged.end(), i, f.terms().end());
  for (; jn < gterms.size(); ++jn) merged.push_back(std::move(gterms[jn]));
  return Polynomial::from_sorted(f.n(), std::move(merged));
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  check_same_ambient(f.n(), g.n());
  return merge_terms(f, g, Rational(1), nullptr);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  check_same_ambient(f.n(), g.n());
  return merge_terms(f, g, Rational(-1), nullptr);
}

Polynomial subtract_scaled(const Polynomial& p, const Rational& c, const Monomial& m,
                           const Polynomial& g) {
  check_same_ambient(p.n(), g.n());
  check_same_ambient(p.n(), m.n());
  return merge_terms(p, g, -c, &m);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  check_same_ambient(f.n(), g.n());
  std::map<Monomial, Rational, MonoGreater> acc;
  for (const Term& a : f.terms()) {
    for (const Term& b : g.terms()) {
      acc[a.mono * b.mono] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) terms.push_back({mono, std::move(coeff)});
  }
  return Polynomial::from_sorted(f.n(), std::move(terms));
}

std::pair<Monomial, Rational> leading_term(const Polynomial& f) {
  const Term& t = f.leading();
  return {t.mono, t.coeff};
}

std::string to_string(const SubsetId& v) {
  std::ostringstream os;
  os << "z{";
  bool first = true;
  for (int e : v.elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  const auto factors = m.factors();
  // Ascending variable order: z{} (the largest variable) prints last.
  bool first = true;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!first) os << '*';
    os << to_string(it->first);
    if (it->second != 1) os << '^' << it->second;
    first = false;
  }
  return os.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (t.mono.is_unit()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << to_string(t.mono);
    } else {
      os << to_string(mag) << '*' << to_string(t.mono);
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const BiDegree& d) {
  return "(" + std::to_string(d.tdeg) + ", " + std::to_string(d.qdeg) + ")";
}

namespace {

// Minimal scanner shared by the monomial and polynomial parsers.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer near position " +
                                       std::to_string(start));
    return std::stoll(std::string(text.substr(start, pos - start)));
  }
};

// factor := 'z' '{' [int {',' int}] '}' ['^' int]  |  int ['/' int]
// term   := factor {'*' factor}
void parse_term(Cursor& cur, int n, Rational& coeff, Monomial& mono) {
  coeff = 1;
  mono = Monomial(n);
  while (true) {
    if (cur.peek() == 'z') {
      cur.consume('z');
      if (!cur.consume('{')) throw ParseError("expected '{' after z");
      std::vector<int> elements;
      if (!cur.consume('}')) {
        do {
          elements.push_back(static_cast<int>(cur.integer()));
        } while (cur.consume(','));
        if (!cur.consume('}')) throw ParseError("expected '}' in subset");
      }
      int exp = 1;
      if (cur.consume('^')) exp = static_cast<int>(cur.integer());
      mono *= Monomial::variable(SubsetId::of(n, elements), exp);
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      Rational value(cur.integer());
      if (cur.consume('/')) {
        const long long den = cur.integer();
        if (den == 0) throw ParseError("zero denominator");
        value /= den;
      }
      coeff *= value;
    } else {
      throw ParseError("expected a factor near position " + std::to_string(cur.pos));
    }
    if (!cur.consume('*')) break;
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
  check_ambient(n);
  Cursor cur{text};
  std::vector<Term> terms;
  if (cur.done()) throw ParseError("empty polynomial text");
  if (cur.peek() == '0') {
    Cursor probe = cur;
    probe.consume('0');
    if (probe.done()) return Polynomial(n);
  }
  bool negative = cur.consume('-');
  while (true) {
    Rational coeff;
    Monomial mono(n);
    parse_term(cur, n, coeff, mono);
    if (negative) coeff = -coeff;
    terms.push_back({std::move(mono), std::move(coeff)});
    if (cur.done()) break;
    if (cur.consume('+')) {
      negative = false;
    } else if (cur.consume('-')) {
      negative = true;
    } else {
      throw ParseError("unexpected character near position " + std::to_string(cur.pos));
    }
  }
  return Polynomial::from_terms(n, std::move(terms));
}

Monomial parse_monomial(std::string_view text, int n) {
  const Polynomial f = parse_polynomial(text, n);
  if (f.term_count() != 1 || f.leading().coeff != 1) {
    throw ParseError("text does not denote a single monic monomial");
  }
  return f.leading().mono;
}

}  // namespace cubealg
