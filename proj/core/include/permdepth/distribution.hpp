#pragma once

#include <string>
#include <vector>

#include "permdepth/bigint.hpp"
#include "permdepth/series.hpp"

namespace permdepth {

// Default table ceilings. Brute force walks n! permutations per row and
// the Motzkin method ~3^n paths; both are refused past these sizes unless
// forced. The continued-fraction methods have no ceiling.
inline constexpr int kBruteTableCeiling = 9;
inline constexpr int kMotzkinTableCeiling = 16;

enum class Method { brute, motzkin, jfrac, sfrac };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

/// The triangle H(n, k) = number of permutations in S_n with depth k,
/// for n = 0..max_n() and 0 <= k <= floor(n^2/4).
struct DepthTable {
  Method method;
  std::vector<std::vector<BigInt>> rows;  // rows[n][k]

  int max_n() const { return static_cast<int>(rows.size()) - 1; }
  const BigInt& at(int n, int k) const { return rows[n][k]; }
};

struct TableOptions {
  bool force = false;  // override the per-method ceiling
  int jobs = 1;        // parallel partitions for brute and motzkin
};

/// Tallies depth over an exhaustive scan of S_n for every n <= n_max.
DepthTable table_brute(int n_max, const TableOptions& opts = {});

/// Sums weight(p) over Motzkin paths of each length, bucketed by area.
DepthTable table_motzkin(int n_max, const TableOptions& opts = {});

/// Evaluates the continued fraction with linear-plus-quadratic levels:
/// level m has diagonal term (2m+1) t^m z and feeds the next level through
/// m^2 t^(2m-1) z^2. Truncated at floor(n_max/2) levels, which a z-degree
/// argument shows is exact for coefficients of z^n, n <= n_max.
DepthTable table_jfrac(int n_max);

/// Evaluates the continued fraction with one linear term per level:
/// term 2k is (k+1) t^k z and term 2k+1 is (k+1) t^(k+1) z, truncated at
/// n_max + 1 levels (one z per level).
DepthTable table_sfrac(int n_max);

/// The largest possible depth over S_n: floor(n^2/4).
long long max_depth(long long n);

/// Number of permutations attaining max_depth(n): (k!)^2 for n = 2k and
/// n*(k!)^2 for n = 2k+1. Requires n >= 1.
BigInt max_depth_count(long long n);

/// H(n, k) for fixed k as a polynomial in n, expressed in the basis
/// C(n-k, j): coefficients()[j] multiplies C(n-k, j). Valid for n >= k.
struct BinomialPolynomial {
  int k;
  std::vector<BigInt> coefficients;  // a_0 .. a_k, a_k = 1
  int verified_n_max;                // representation checked for k..this
};

/// Fits the degree-k polynomial by forward differences of H(k, k),
/// H(k+1, k), ... and verifies it reproduces H(n, k) exactly for every
/// k <= n <= n_max. Requires n_max >= 2k + 3; throws on verification
/// mismatch.
BinomialPolynomial fixed_depth_polynomial(int k, int n_max);

/// Same, reusing an already computed table with max_n() >= 2k + 3.
BinomialPolynomial fixed_depth_polynomial(const DepthTable& table, int k);

}  // namespace permdepth
