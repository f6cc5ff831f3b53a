#pragma once

#include <functional>
#include <vector>

#include "permdepth/bigint.hpp"
#include "permdepth/motzkin.hpp"
#include "permdepth/permutation.hpp"

namespace permdepth {

// Preimage fibers are refused above this many members unless forced.
inline constexpr long long kPreimageCeiling = 1'000'000;

/// The arrow diagram of a permutation: write 1..n on a line, draw i -> w(i)
/// above the line when i < w(i) and below when i > w(i), and group the
/// arrows into maximal chains.
///
/// Above-strings are strictly increasing chains (each of length >= 2);
/// below-strings strictly decreasing. A position is the start of an
/// above-string and the end of a below-string exactly when its path letter
/// is U, the end of an above-string and the start of a below-string exactly
/// when it is D.
struct ArrowDiagram {
  std::vector<std::vector<int>> above;  // ordered by start position
  std::vector<std::vector<int>> below;  // ordered by start position
  std::vector<int> fixed_points;        // ascending
};

/// phi(w): classify each position i as U when w^-1(i) > i < w(i), D when
/// w^-1(i) < i > w(i), and H otherwise. The result is always a valid
/// Motzkin path of length n.
MotzkinPath phi(const Permutation& w);

/// Decomposes w into its arrow diagram.
ArrowDiagram diagram(const Permutation& w);

/// Reassembles the permutation a diagram describes, validating that the
/// chains cover every position consistently. Throws std::invalid_argument
/// on an inconsistent diagram.
Permutation permutation_from_diagram(const ArrowDiagram& d, int n);

/// area(phi(w)); agrees with depth(w) for every permutation.
long long depth_via_path(const Permutation& w);

/// Number of permutations w with phi(w) = p. Computed as weight(p).
BigInt preimage_count(const MotzkinPath& p);

/// Streams the weight(p) distinct permutations w with phi(w) = p.
///
/// Construction: a left-to-right scan builds the above-strings (a U opens a
/// string, a D closes one of the currently open ones), a right-to-left scan
/// builds the below-strings symmetrically, and each H position either stays
/// fixed or joins one of the open strings passing over it. Choices are
/// ranged over in a fixed canonical order: one mixed-radix digit per
/// position (leftmost position most significant); string terminations pick
/// oldest-first, and H digits mean fixed point, then above-strings
/// oldest-first, then below-strings oldest-first.
void enumerate_preimage(const MotzkinPath& p,
                        const std::function<void(const Permutation&)>& fn,
                        bool force = false);

std::vector<Permutation> preimage(const MotzkinPath& p, bool force = false);

}  // namespace permdepth
