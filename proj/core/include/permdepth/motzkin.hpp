#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permdepth/bigint.hpp"

namespace permdepth {

// Motzkin numbers grow like 3^n; enumeration past this length is refused
// unless forced.
inline constexpr int kPathEnumerationCeiling = 20;

enum class Step : std::uint8_t { U, D, H };

inline char step_char(Step s) {
  switch (s) {
    case Step::U: return 'U';
    case Step::D: return 'D';
    default: return 'H';
  }
}

/// A Motzkin path: a word over {U, D, H} whose U/D subword is a balanced
/// parenthesization, i.e. every prefix has #U >= #D and the totals agree.
class MotzkinPath {
 public:
  MotzkinPath() = default;

  /// Validates the balance invariants; throws std::invalid_argument with
  /// the offending 1-based position otherwise.
  explicit MotzkinPath(std::vector<Step> steps);

  /// Wraps `steps` without validation.
  static MotzkinPath unchecked(std::vector<Step> steps) {
    MotzkinPath p;
    p.steps_ = std::move(steps);
    return p;
  }

  int size() const { return static_cast<int>(steps_.size()); }
  const std::vector<Step>& steps() const { return steps_; }

  /// Step at 1-based position i.
  Step step(int i) const { return steps_[i - 1]; }

  std::string str() const;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend std::strong_ordering operator<=>(const MotzkinPath& a,
                                          const MotzkinPath& b) {
    return a.steps_ <=> b.steps_;
  }

  /// Calls fn(const MotzkinPath&) for every Motzkin path of length n,
  /// in lexicographic order with U < H < D. The reference is only valid
  /// during the call.
  template <typename F>
  static void enumerate(int n, F&& fn, bool force = false) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    if (n > kPathEnumerationCeiling && !force)
      throw std::invalid_argument(
          "enumerate: n = " + std::to_string(n) + " exceeds the ceiling of " +
          std::to_string(kPathEnumerationCeiling) + " (use force to override)");
    MotzkinPath p;
    p.steps_.resize(n);
    enumerate_from(p, 0, 0, fn);
  }

  /// The block of the lexicographic stream beginning with step `first`.
  /// The D block is always empty (a leading D violates prefix balance).
  template <typename F>
  static void enumerate_with_first(int n, Step first, F&& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_with_first: n < 1");
    MotzkinPath p;
    p.steps_.resize(n);
    p.steps_[0] = first;
    if (first == Step::U && n >= 2) enumerate_from(p, 1, 1, fn);
    if (first == Step::H) enumerate_from(p, 1, 0, fn);
  }

 private:
  template <typename F>
  static void enumerate_from(MotzkinPath& p, int i, int height, F&& fn) {
    const int n = p.size();
    if (i == n) {
      const MotzkinPath& view = p;
      fn(view);
      return;
    }
    const int remaining = n - i;
    if (height + 1 <= remaining - 1) {
      p.steps_[i] = Step::U;
      enumerate_from(p, i + 1, height + 1, fn);
    }
    if (height <= remaining - 1) {
      p.steps_[i] = Step::H;
      enumerate_from(p, i + 1, height, fn);
    }
    if (height >= 1) {
      p.steps_[i] = Step::D;
      enumerate_from(p, i + 1, height - 1, fn);
    }
  }

  std::vector<Step> steps_;
};

/// Parses a string over {U, D, H} (case-insensitive). Throws
/// std::invalid_argument naming the offending position for illegal
/// characters and balance violations.
MotzkinPath parse_path(const std::string& text);

/// Area between the path and the base line: the sum of the D-step
/// positions minus the sum of the U-step positions, 1-based.
long long area(const MotzkinPath& p);

/// The same area computed from vertical strips (doubled to stay in
/// integers, then halved). Independent cross-check of area().
long long geometric_area(const MotzkinPath& p);

/// h_i per step: a U step ending at level j, an H step at level j, and a
/// D step starting at level j all have height j.
using HeightProfile = std::vector<int>;
HeightProfile heights(const MotzkinPath& p);

/// wt_i = h_i for U and D steps, 2*h_i + 1 for H steps.
std::vector<long long> step_weights(const MotzkinPath& p);

/// Product of the step weights; 1 for the empty path. Equals the number
/// of permutations mapping to p under phi.
BigInt weight(const MotzkinPath& p);

template <typename F>
void enumerate_paths(int n, F&& fn, bool force = false) {
  MotzkinPath::enumerate(n, std::forward<F>(fn), force);
}

std::vector<MotzkinPath> all_paths(int n, bool force = false);

}  // namespace permdepth
