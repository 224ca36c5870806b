#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cubealg/errors.hpp"

namespace cubealg {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

// One letter of the colored alphabet {w^0,...,w^{r-1}} x [n], written j^c.
struct ColoredLetter {
  int value = 1;  // element of [1, n]
  int color = 0;  // exponent of the root of unity, in [0, r-1]

  friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

// Total order on colored letters: j^b < k^c iff b > c, or b == c and j < k.
// Higher color means smaller letter.
int letter_cmp(const ColoredLetter& a, const ColoredLetter& b);

inline bool letter_less(const ColoredLetter& a, const ColoredLetter& b) {
  return letter_cmp(a, b) < 0;
}

// An element of the wreath product Z_r wr S_n in window notation
// [pi(1)^{c_1} ... pi(n)^{c_n}]. Immutable after construction.
class ColoredPermutation {
 public:
  // Validates that the values form a permutation of [1, n] and every color
  // lies in [0, r-1].
  ColoredPermutation(int r, std::vector<ColoredLetter> window);

  static ColoredPermutation identity(int r, int n);
  static ColoredPermutation from_values(int r, const std::vector<int>& values,
                                        const std::vector<int>& colors);

  int n() const { return static_cast<int>(window_.size()); }
  int r() const { return r_; }

  // 0-based position; letter(i) = pi(i+1)^{c_{i+1}}.
  const ColoredLetter& letter(int pos) const { return window_[pos]; }
  const std::vector<ColoredLetter>& window() const { return window_; }
  // 0-based position at which `value` sits.
  int position_of(int value) const;
  bool is_identity() const;

  friend bool operator==(const ColoredPermutation&,
                         const ColoredPermutation&) = default;

 private:
  int r_;
  std::vector<ColoredLetter> window_;
};

// Group law: result(i) = (outer.pi(inner.pi(i)), inner.c_i + outer.c_{inner.pi(i)} mod r).
// Throws DimensionError when n or r differ.
ColoredPermutation compose(const ColoredPermutation& outer,
                           const ColoredPermutation& inner);

// Position pi(i) of the inverse holds value i with color (-c_i) mod r.
ColoredPermutation inverse(const ColoredPermutation& g);

// Type-A descent set: positions i in [n-1] (1-based) with a strict descent
// under letter_cmp.
std::vector<int> descent_set_a(const ColoredPermutation& g);
int des_a(const ColoredPermutation& g);
int major_a(const ColoredPermutation& g);

// Negative inverse multiset of g itself: i repeated c_i times, i = position.
std::vector<int> nneg(const ColoredPermutation& g);

// NDes(g) = Des_A(g) disjoint-union NNeg(g^{-1}), as a sorted multiset.
std::vector<int> ndes_multiset(const ColoredPermutation& g);
int ndes(const ColoredPermutation& g);
int nmajor(const ColoredPermutation& g);

// A plain permutation sigma together with a bounded multiset X over [n];
// the coordinates of g under the decomposition g = (rho,delta) o sigma with
// (rho,delta) increasing and X = NNeg(g^{-1}).
struct SigmaXPair {
  std::vector<int> sigma;  // one-line notation, values in [1, n]
  std::vector<int> x;      // nondecreasing multiset over [1, n]

  friend bool operator==(const SigmaXPair&, const SigmaXPair&) = default;
};

SigmaXPair decompose(const ColoredPermutation& g);

// The increasing factor (rho,delta) determined by X alone: value j carries
// color (-mult_X(j)) mod r and the letters are sorted increasingly.
ColoredPermutation increasing_part(const SigmaXPair& p, int r);

// Inverse of decompose. Throws InvalidMultisetError when some multiplicity
// in X reaches r.
ColoredPermutation recompose(const SigmaXPair& p, int r);

// r^n * n!; throws SizeLimitError on 64-bit overflow.
std::uint64_t group_order(int r, int n);

// Deterministic enumeration of the full group; each element exactly once.
// Throws SizeLimitError when r^n * n! exceeds `limit`.
void for_each_group_element(int r, int n,
                            const std::function<void(const ColoredPermutation&)>& fn,
                            std::uint64_t limit = kDefaultEnumerationLimit);
std::vector<ColoredPermutation> enumerate_group(
    int r, int n, std::uint64_t limit = kDefaultEnumerationLimit);

// Window-notation text format, e.g. "[2^1 6^3 4^3 1^0 5^2 3^0]".
// Colors are always printed.
std::string to_window_string(const ColoredPermutation& g);
ColoredPermutation parse_window(std::string_view text, int r);

bool is_permutation(const std::vector<int>& values);

}  // namespace cubealg
