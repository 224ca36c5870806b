#include "cubealg/colored_perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cubealg {

namespace {

void check_same_group(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (a.n() != b.n() || a.r() != b.r()) {
    throw DimensionError("colored permutations from different groups (n or r mismatch)");
  }
}

}  // namespace

int letter_cmp(const ColoredLetter& a, const ColoredLetter& b) {
  if (a.color != b.color) return a.color > b.color ? -1 : 1;
  if (a.value != b.value) return a.value < b.value ? -1 : 1;
  return 0;
}

ColoredPermutation::ColoredPermutation(int r, std::vector<ColoredLetter> window)
    : r_(r), window_(std::move(window)) {
  if (r_ < 1) throw std::invalid_argument("color modulus r must be >= 1");
  const int size = static_cast<int>(window_.size());
  if (size < 1) throw std::invalid_argument("window must have length >= 1");
  std::vector<bool> seen(size, false);
  for (const ColoredLetter& l : window_) {
    if (l.value < 1 || l.value > size || seen[l.value - 1]) {
      throw std::invalid_argument("window values must form a permutation of [1,n]");
    }
    seen[l.value - 1] = true;
    if (l.color < 0 || l.color >= r_) {
      throw std::invalid_argument("letter color out of range [0, r-1]");
    }
  }
}

ColoredPermutation ColoredPermutation::identity(int r, int n) {
  std::vector<ColoredLetter> window(n);
  for (int i = 0; i < n; ++i) window[i] = {i + 1, 0};
  return ColoredPermutation(r, std::move(window));
}

ColoredPermutation ColoredPermutation::from_values(int r,
                                                   const std::vector<int>& values,
                                                   const std::vector<int>& colors) {
  if (values.size() != colors.size()) {
    throw DimensionError("value and color sequences differ in length");
  }
  std::vector<ColoredLetter> window(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) window[i] = {values[i], colors[i]};
  return ColoredPermutation(r, std::move(window));
}

int ColoredPermutation::position_of(int value) const {
  for (int i = 0; i < n(); ++i) {
    if (window_[i].value == value) return i;
  }
  throw std::invalid_argument("value not in [1,n]");
}

bool ColoredPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    if (window_[i].value != i + 1 || window_[i].color != 0) return false;
  }
  return true;
}

ColoredPermutation compose(const ColoredPermutation& outer,
                           const ColoredPermutation& inner) {
  check_same_group(outer, inner);
  const int n = outer.n();
  const int r = outer.r();
  std::vector<ColoredLetter> window(n);
  for (int i = 0; i < n; ++i) {
    const ColoredLetter& in = inner.letter(i);
    const ColoredLetter& out = outer.letter(in.value - 1);
    window[i] = {out.value, (in.color + out.color) % r};
  }
  return ColoredPermutation(r, std::move(window));
}

ColoredPermutation inverse(const ColoredPermutation& g) {
  const int n = g.n();
  const int r = g.r();
  std::vector<ColoredLetter> window(n);
  for (int i = 0; i < n; ++i) {
    const ColoredLetter& l = g.letter(i);
    window[l.value - 1] = {i + 1, (r - l.color % r) % r};
  }
  return ColoredPermutation(r, std::move(window));
}

std::vector<int> descent_set_a(const ColoredPermutation& g) {
  std::vector<int> out;
  for (int i = 0; i + 1 < g.n(); ++i) {
    if (letter_cmp(g.letter(i), g.letter(i + 1)) > 0) out.push_back(i + 1);
  }
  return out;
}

int des_a(const ColoredPermutation& g) {
  return static_cast<int>(descent_set_a(g).size());
}

int major_a(const ColoredPermutation& g) {
  const std::vector<int> des = descent_set_a(g);
  return std::accumulate(des.begin(), des.end(), 0);
}

std::vector<int> nneg(const ColoredPermutation& g) {
  std::vector<int> out;
  for (int i = 0; i < g.n(); ++i) {
    out.insert(out.end(), g.letter(i).color, i + 1);
  }
  return out;
}

std::vector<int> ndes_multiset(const ColoredPermutation& g) {
  std::vector<int> a = descent_set_a(g);
  std::vector<int> b = nneg(inverse(g));
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int ndes(const ColoredPermutation& g) {
  return static_cast<int>(ndes_multiset(g).size());
}

int nmajor(const ColoredPermutation& g) {
  const std::vector<int> nd = ndes_multiset(g);
  return std::accumulate(nd.begin(), nd.end(), 0);
}

SigmaXPair decompose(const ColoredPermutation& g) {
  const int n = g.n();
  // The increasing factor is the letter-sorted window; sigma(i) is the
  // position of g's i-th letter inside it.
  std::vector<ColoredLetter> sorted = g.window();
  std::sort(sorted.begin(), sorted.end(), letter_less);
  std::vector<int> pos_in_sorted(n + 1, 0);
  for (int j = 0; j < n; ++j) pos_in_sorted[sorted[j].value] = j + 1;
  SigmaXPair p;
  p.sigma.resize(n);
  for (int i = 0; i < n; ++i) p.sigma[i] = pos_in_sorted[g.letter(i).value];
  p.x = nneg(inverse(g));
  return p;
}

namespace {

// Multiplicity table of X; validates bounds and sortedness of the multiset.
std::vector<int> x_multiplicities(const SigmaXPair& p, int r, int n) {
  std::vector<int> mult(n + 1, 0);
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    const int j = p.x[i];
    if (j < 1 || j > n) throw InvalidMultisetError("multiset element outside [1,n]");
    if (i > 0 && p.x[i - 1] > j) {
      throw InvalidMultisetError("multiset must be stored nondecreasing");
    }
    if (++mult[j] >= r) {
      throw InvalidMultisetError("multiset multiplicity must be < r");
    }
  }
  return mult;
}

}  // namespace

ColoredPermutation increasing_part(const SigmaXPair& p, int r) {
  const int n = static_cast<int>(p.sigma.size());
  if (!is_permutation(p.sigma)) throw std::invalid_argument("sigma is not a permutation");
  const std::vector<int> mult = x_multiplicities(p, r, n);
  // Value j carries color (-mult_j) mod r; sorting the letters increasingly
  // yields the unique increasing element with NNeg of its inverse equal to X.
  std::vector<ColoredLetter> letters(n);
  for (int j = 1; j <= n; ++j) letters[j - 1] = {j, (r - mult[j] % r) % r};
  std::sort(letters.begin(), letters.end(), letter_less);
  return ColoredPermutation(r, std::move(letters));
}

ColoredPermutation recompose(const SigmaXPair& p, int r) {
  const ColoredPermutation rho = increasing_part(p, r);
  std::vector<int> zero_colors(p.sigma.size(), 0);
  return compose(rho, ColoredPermutation::from_values(r, p.sigma, zero_colors));
}

std::uint64_t group_order(int r, int n) {
  unsigned __int128 total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<unsigned>(r);
  for (int i = 2; i <= n; ++i) total *= static_cast<unsigned>(i);
  if (total > UINT64_MAX) throw SizeLimitError("group order overflows 64 bits");
  return static_cast<std::uint64_t>(total);
}

void for_each_group_element(int r, int n,
                            const std::function<void(const ColoredPermutation&)>& fn,
                            std::uint64_t limit) {
  if (r < 1 || n < 1) throw std::invalid_argument("need r >= 1 and n >= 1");
  if (group_order(r, n) > limit) {
    throw SizeLimitError("group enumeration exceeds configured limit");
  }
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::vector<int> colors(n, 0);
  do {
    std::fill(colors.begin(), colors.end(), 0);
    while (true) {
      fn(ColoredPermutation::from_values(r, values, colors));
      // Odometer over colors, last position fastest.
      int pos = n - 1;
      while (pos >= 0 && colors[pos] == r - 1) colors[pos--] = 0;
      if (pos < 0) break;
      ++colors[pos];
    }
  } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<ColoredPermutation> enumerate_group(int r, int n, std::uint64_t limit) {
  std::vector<ColoredPermutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(group_order(r, n), limit)));
  for_each_group_element(r, n, [&](const ColoredPermutation& g) { out.push_back(g); },
                         limit);
  return out;
}

std::string to_window_string(const ColoredPermutation& g) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < g.n(); ++i) {
    if (i > 0) os << ' ';
    os << g.letter(i).value << '^' << g.letter(i).color;
  }
  os << ']';
  return os.str();
}

ColoredPermutation parse_window(std::string_view text, int r) {
  std::size_t begin = text.find('[');
  std::size_t end = text.rfind(']');
  if (begin == std::string_view::npos || end == std::string_view::npos || begin >= end) {
    throw ParseError("window notation must be bracketed: [v^c v^c ...]");
  }
  std::istringstream is(std::string(text.substr(begin + 1, end - begin - 1)));
  std::vector<ColoredLetter> window;
  std::string token;
  while (is >> token) {
    const std::size_t caret = token.find('^');
    if (caret == std::string::npos) throw ParseError("letter missing '^color': " + token);
    int value = 0;
    int color = 0;
    auto [p1, e1] = std::from_chars(token.data(), token.data() + caret, value);
    auto [p2, e2] = std::from_chars(token.data() + caret + 1, token.data() + token.size(), color);
    if (e1 != std::errc{} || e2 != std::errc{} || p1 != token.data() + caret ||
        p2 != token.data() + token.size()) {
      throw ParseError("malformed letter: " + token);
    }
    window.push_back({value, color});
  }
  if (window.empty()) throw ParseError("empty window");
  try {
    return ColoredPermutation(r, std::move(window));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("invalid window: ") + ex.what());
  }
}

bool is_permutation(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

}  // namespace cubealg
