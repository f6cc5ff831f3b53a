#include "permdepth/distribution.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "permdepth/motzkin.hpp"
#include "permdepth/permutation.hpp"

namespace permdepth {

const char* method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::motzkin: return "motzkin";
    case Method::jfrac: return "jfrac";
    default: return "sfrac";
  }
}

Method method_from_name(const std::string& name) {
  if (name == "brute") return Method::brute;
  if (name == "motzkin") return Method::motzkin;
  if (name == "jfrac") return Method::jfrac;
  if (name == "sfrac") return Method::sfrac;
  throw std::invalid_argument("unknown method '" + name + "'");
}

long long max_depth(long long n) {
  if (n < 0) throw std::invalid_argument("max_depth: n must be >= 0");
  return n * n / 4;
}

BigInt max_depth_count(long long n) {
  if (n < 1) throw std::invalid_argument("max_depth_count: n must be >= 1");
  const BigInt kf = factorial(static_cast<unsigned long>(n / 2));
  return n % 2 == 0 ? BigInt(kf * kf) : BigInt(kf * kf * static_cast<long>(n));
}

namespace {

std::vector<std::vector<BigInt>> empty_rows(int n_max) {
  std::vector<std::vector<BigInt>> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    rows[n].assign(static_cast<size_t>(max_depth(n)) + 1, BigInt(0));
  return rows;
}

void check_row_shape(const DepthTable& t) {
  for (int n = 1; n <= t.max_n(); ++n)
    if (t.rows[n].back() == 0)
      throw std::logic_error(
          "depth table: zero count at the maximal depth of row " +
          std::to_string(n));
}

}  // namespace

DepthTable table_brute(int n_max, const TableOptions& opts) {
  if (n_max < 0) throw std::invalid_argument("table: n_max must be >= 0");
  if (n_max > kBruteTableCeiling && !opts.force)
    throw std::invalid_argument(
        "table: brute-force n_max = " + std::to_string(n_max) +
        " exceeds the ceiling of " + std::to_string(kBruteTableCeiling) +
        " (use force to override)");
  // A uint64 per-partition tally cannot overflow below n = 21, and no
  // exhaustive scan past n = 20 can finish anyway.
  if (n_max > 20)
    throw std::invalid_argument("table: brute force is infeasible past n = 20");

  DepthTable t{Method::brute, empty_rows(n_max)};
  t.rows[0][0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    const int jobs = std::max(1, std::min(opts.jobs, n));
    std::vector<std::vector<unsigned long long>> part(
        jobs, std::vector<unsigned long long>(max_depth(n) + 1, 0));
    auto scan = [&](int job) {
      auto& tally = part[job];
      for (int first = job + 1; first <= n; first += jobs)
        enumerate_sn_with_first(
            n, first, [&](const Permutation& w) { ++tally[depth(w)]; });
    };
    if (jobs == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(scan, j);
      for (auto& th : pool) th.join();
    }
    for (const auto& tally : part)
      for (size_t k = 0; k < tally.size(); ++k)
        t.rows[n][k] += static_cast<unsigned long>(tally[k]);
  }
  check_row_shape(t);
  return t;
}

DepthTable table_motzkin(int n_max, const TableOptions& opts) {
  if (n_max < 0) throw std::invalid_argument("table: n_max must be >= 0");
  if (n_max > kMotzkinTableCeiling && !opts.force)
    throw std::invalid_argument(
        "table: motzkin n_max = " + std::to_string(n_max) +
        " exceeds the ceiling of " + std::to_string(kMotzkinTableCeiling) +
        " (use force to override)");

  DepthTable t{Method::motzkin, empty_rows(n_max)};
  t.rows[0][0] = 1;  // the empty path
  for (int n = 1; n <= n_max; ++n) {
    auto tally = [](std::vector<BigInt>& row, const MotzkinPath& p) {
      row[area(p)] += weight(p);
    };
    if (opts.jobs <= 1 || n < 2) {
      auto& row = t.rows[n];
      enumerate_paths(
          n, [&](const MotzkinPath& p) { tally(row, p); }, /*force=*/true);
    } else {
      // The stream partitions by first step; the D block is empty.
      std::vector<std::vector<BigInt>> part(
          2, std::vector<BigInt>(max_depth(n) + 1, BigInt(0)));
      std::vector<std::thread> pool;
      const Step firsts[2] = {Step::U, Step::H};
      for (int j = 0; j < 2; ++j)
        pool.emplace_back([&, j] {
          MotzkinPath::enumerate_with_first(
              n, firsts[j], [&](const MotzkinPath& p) { tally(part[j], p); });
        });
      for (auto& th : pool) th.join();
      for (const auto& row : part)
        for (size_t k = 0; k < row.size(); ++k) t.rows[n][k] += row[k];
    }
  }
  check_row_shape(t);
  return t;
}

namespace {

DepthTable table_from_series(const TruncatedSeries& f, int n_max, Method m) {
  DepthTable t{m, empty_rows(n_max)};
  for (int n = 0; n <= n_max; ++n) {
    if (f.max_t_degree(n) > max_depth(n))
      throw std::logic_error("depth table: coefficient beyond the depth bound");
    for (int k = 0; k <= max_depth(n); ++k) t.rows[n][k] = f.coeff(n, k);
  }
  check_row_shape(t);
  return t;
}

}  // namespace

DepthTable table_jfrac(int n_max) {
  if (n_max < 0) throw std::invalid_argument("table: n_max must be >= 0");
  const int cap = static_cast<int>(max_depth(n_max));
  const TruncatedSeries unit = TruncatedSeries::one(n_max, cap);

  // Level m contributes z^2 per descent, so coefficients of z^n with
  // n <= n_max only see levels m <= n_max/2, and level m itself only
  // needs rows up to n_max - 2m.
  const int levels = n_max / 2;
  TruncatedSeries f = unit;  // tail value
  for (int m = levels; m >= 0; --m) {
    const BigInt sq = BigInt(m + 1) * (m + 1);
    TruncatedSeries den = sub(
        sub(unit, TruncatedSeries::monomial(2 * m + 1, m, 1, n_max, cap)),
        mul(TruncatedSeries::monomial(sq, 2 * m + 1, 2, n_max, cap), f));
    f = reciprocal(den, n_max - 2 * m);
  }
  return table_from_series(f, n_max, Method::jfrac);
}

DepthTable table_sfrac(int n_max) {
  if (n_max < 0) throw std::invalid_argument("table: n_max must be >= 0");
  const int cap = static_cast<int>(max_depth(n_max));
  const TruncatedSeries unit = TruncatedSeries::one(n_max, cap);

  // One z per level: term 2k is (k+1) t^k z, term 2k+1 is (k+1) t^(k+1) z.
  TruncatedSeries g = unit;
  for (int j = n_max; j >= 0; --j) {
    TruncatedSeries term =
        TruncatedSeries::monomial(j / 2 + 1, (j + 1) / 2, 1, n_max, cap);
    g = reciprocal(sub(unit, mul(term, g)), n_max - j);
  }
  return table_from_series(g, n_max, Method::sfrac);
}

BinomialPolynomial fixed_depth_polynomial(const DepthTable& table, int k) {
  if (k < 0) throw std::invalid_argument("poly: k must be >= 0");
  const int n_max = table.max_n();
  if (n_max < 2 * k + 3)
    throw std::invalid_argument(
        "poly: need a table up to n_max >= 2k + 3 = " +
        std::to_string(2 * k + 3) + ", got " + std::to_string(n_max));

  auto h = [&](int n) -> BigInt {
    return k <= max_depth(n) ? table.at(n, k) : BigInt(0);
  };

  // In the basis C(n-k, j) the coefficients are the forward differences
  // of H(k, k), H(k+1, k), ... at the start of the sequence.
  std::vector<BigInt> diff;
  for (int n = k; n <= n_max; ++n) diff.push_back(h(n));
  std::vector<BigInt> coeffs;
  for (int j = 0; j <= k; ++j) {
    coeffs.push_back(diff.front());
    for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }

  if (coeffs.back() != 1)
    throw std::runtime_error("poly: leading coefficient is not 1 at k = " +
                             std::to_string(k));
  for (int n = k; n <= n_max; ++n) {
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j)
      sum += coeffs[j] * binomial(static_cast<unsigned long>(n - k),
                                  static_cast<unsigned long>(j));
    if (sum != h(n))
      throw std::runtime_error(
          "poly: representation fails to reproduce the count at n = " +
          std::to_string(n) + ", k = " + std::to_string(k));
  }
  return BinomialPolynomial{k, std::move(coeffs), n_max};
}

BinomialPolynomial fixed_depth_polynomial(int k, int n_max) {
  if (k < 0) throw std::invalid_argument("poly: k must be >= 0");
  if (n_max < 2 * k + 3)
    throw std::invalid_argument("poly: n_max must be >= 2k + 3 = " +
                                std::to_string(2 * k + 3));
  return fixed_depth_polynomial(table_jfrac(n_max), k);
}

}  // namespace permdepth
