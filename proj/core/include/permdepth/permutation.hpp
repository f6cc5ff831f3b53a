#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permdepth {

// Enumerating S_n past this point is refused unless the caller forces it;
// 12! is about half a billion permutations.
inline constexpr int kSnEnumerationCeiling = 12;

/// A permutation of {1, ..., n} in one-line notation.
///
/// image()[i] holds w(i+1); all stored values are 1-based, matching the
/// usual mathematical convention. n = 0 is the (unique) empty permutation.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `image` is a bijection on {1, ..., n}; throws
  /// std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> image);

  /// Wraps `image` without validation. The caller guarantees bijectivity.
  static Permutation unchecked(std::vector<int> image) {
    Permutation w;
    w.image_ = std::move(image);
    return w;
  }

  int size() const { return static_cast<int>(image_.size()); }

  /// w(i), 1-based.
  int operator()(int i) const { return image_[i - 1]; }

  const std::vector<int>& image() const { return image_; }

  /// Digit string for n <= 9 ("3715246"), comma-separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.image_ <=> b.image_;
  }

  /// Calls fn(const Permutation&) for each of the n! permutations, in
  /// lexicographic order on the one-line notation. The reference passed to
  /// fn is only valid during the call.
  template <typename F>
  static void enumerate(int n, F&& fn, bool force = false) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    if (n > kSnEnumerationCeiling && !force)
      throw std::invalid_argument(
          "enumerate: n = " + std::to_string(n) + " exceeds the ceiling of " +
          std::to_string(kSnEnumerationCeiling) + " (use force to override)");
    Permutation w;
    w.image_.resize(n);
    std::iota(w.image_.begin(), w.image_.end(), 1);
    const Permutation& view = w;
    do {
      fn(view);
    } while (std::next_permutation(w.image_.begin(), w.image_.end()));
  }

  /// The contiguous block of the lexicographic stream with w(1) = first.
  /// Concatenating the blocks for first = 1..n reproduces enumerate(n, ...).
  /// No ceiling check: this is the partitioning hook for parallel scans.
  template <typename F>
  static void enumerate_with_first(int n, int first, F&& fn) {
    if (n < 1 || first < 1 || first > n)
      throw std::invalid_argument("enumerate_with_first: bad arguments");
    Permutation w;
    w.image_.resize(n);
    w.image_[0] = first;
    int v = 1;
    for (int i = 1; i < n; ++i) {
      if (v == first) ++v;
      w.image_[i] = v++;
    }
    const Permutation& view = w;
    do {
      fn(view);
    } while (std::next_permutation(w.image_.begin() + 1, w.image_.end()));
  }

 private:
  std::vector<int> image_;
};

/// Parses whitespace- or comma-separated values, or (for n <= 9) a
/// contiguous digit string. Throws std::invalid_argument on non-integer
/// tokens, repeated or out-of-range values, and on digit strings longer
/// than 9 (ambiguous).
Permutation parse_permutation(const std::string& text);

Permutation inverse(const Permutation& w);

/// Sum of w(i) - i over the excedances of w (positions with w(i) > i).
long long depth(const Permutation& w);

/// Sum of |w(i) - i|; always twice the depth.
long long total_displacement(const Permutation& w);

template <typename F>
void enumerate_sn(int n, F&& fn, bool force = false) {
  Permutation::enumerate(n, std::forward<F>(fn), force);
}

template <typename F>
void enumerate_sn_with_first(int n, int first, F&& fn) {
  Permutation::enumerate_with_first(n, first, std::forward<F>(fn));
}

/// Convenience for small n.
std::vector<Permutation> all_permutations(int n, bool force = false);

}  // namespace permdepth
