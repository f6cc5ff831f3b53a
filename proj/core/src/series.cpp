#include "permdepth/series.hpp"

#include <algorithm>

namespace permdepth {

namespace detail {

void TPoly::normalize() {
  size_t last = c.size();
  while (last > 0 && c[last - 1] == 0) --last;
  c.resize(last);
  size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  if (first > 0) {
    c.erase(c.begin(), c.begin() + static_cast<long>(first));
    lo += static_cast<int>(first);
  }
  if (c.empty()) lo = 0;
}

namespace {

// acc += a * b, discarding t-degrees above cap. The accumulator window
// must already cover the clipped product window.
void add_product(TPoly& acc, const TPoly& a, const TPoly& b, int cap) {
  for (size_t i = 0; i < a.c.size(); ++i) {
    const int deg_a = a.lo + static_cast<int>(i);
    if (deg_a + b.lo > cap) break;
    const size_t jmax = std::min(b.c.size(), size_t(cap - deg_a - b.lo) + 1);
    BigInt* out = acc.c.data() + (deg_a + b.lo - acc.lo);
    const BigInt& x = a.c[i];
    for (size_t j = 0; j < jmax; ++j) out[j] += x * b.c[j];
  }
}

// Sum of clipped products of (a, b) pairs, window-allocated up front.
template <typename Pairs>
TPoly convolve_sum(const Pairs& pairs, int cap) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& [a, b] : pairs) {
    if (a->zero() || b->zero()) continue;
    if (a->lo + b->lo > cap) continue;
    const int plo = a->lo + b->lo;
    const int phi = std::min(a->hi() + b->hi(), cap);
    if (!any) {
      lo = plo;
      hi = phi;
      any = true;
    } else {
      lo = std::min(lo, plo);
      hi = std::max(hi, phi);
    }
  }
  TPoly acc;
  if (!any) return acc;
  acc.lo = lo;
  acc.c.assign(static_cast<size_t>(hi - lo + 1), BigInt(0));
  for (const auto& [a, b] : pairs)
    if (!a->zero() && !b->zero() && a->lo + b->lo <= cap)
      add_product(acc, *a, *b, cap);
  acc.normalize();
  return acc;
}

TPoly poly_add(const TPoly& a, const TPoly& b, int sign_b) {
  if (a.zero() && b.zero()) return {};
  int lo, hi;
  if (a.zero()) {
    lo = b.lo;
    hi = b.hi();
  } else if (b.zero()) {
    lo = a.lo;
    hi = a.hi();
  } else {
    lo = std::min(a.lo, b.lo);
    hi = std::max(a.hi(), b.hi());
  }
  TPoly r;
  r.lo = lo;
  r.c.assign(static_cast<size_t>(hi - lo + 1), BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[a.lo - lo + i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) {
    if (sign_b > 0)
      r.c[b.lo - lo + i] += b.c[i];
    else
      r.c[b.lo - lo + i] -= b.c[i];
  }
  r.normalize();
  return r;
}

}  // namespace
}  // namespace detail

using detail::TPoly;

TruncatedSeries::TruncatedSeries(int z_order, int t_cap)
    : z_order_(z_order), t_cap_(t_cap) {
  if (z_order < 0 || t_cap < 0)
    throw std::invalid_argument("series: box dimensions must be >= 0");
  rows_.resize(z_order + 1);
}

TruncatedSeries TruncatedSeries::monomial(BigInt c, int t_deg, int z_deg,
                                          int z_order, int t_cap) {
  if (t_deg < 0 || z_deg < 0)
    throw std::invalid_argument("series: monomial degrees must be >= 0");
  TruncatedSeries s(z_order, t_cap);
  if (c != 0 && z_deg <= z_order && t_deg <= t_cap) {
    s.rows_[z_deg].lo = t_deg;
    s.rows_[z_deg].c.push_back(std::move(c));
  }
  return s;
}

const BigInt& TruncatedSeries::coeff(int z_deg, int t_deg) const {
  static const BigInt kZero = 0;
  if (z_deg < 0 || z_deg > z_order_ || t_deg < 0 || t_deg > t_cap_)
    throw std::invalid_argument("series: coefficient outside the box");
  const TPoly& row = rows_[z_deg];
  if (row.zero() || t_deg < row.lo || t_deg > row.hi()) return kZero;
  return row.c[t_deg - row.lo];
}

int TruncatedSeries::max_t_degree(int z_deg) const {
  if (z_deg < 0 || z_deg > z_order_)
    throw std::invalid_argument("series: row outside the box");
  return rows_[z_deg].zero() ? -1 : rows_[z_deg].hi();
}

bool TruncatedSeries::is_zero() const {
  for (const TPoly& row : rows_)
    if (!row.zero()) return false;
  return true;
}

TruncatedSeries TruncatedSeries::truncated_z(int z_max) const {
  TruncatedSeries s(z_order_, t_cap_);
  for (int n = 0; n <= std::min(z_max, z_order_); ++n) s.rows_[n] = rows_[n];
  return s;
}

TruncatedSeries TruncatedSeries::projected(int z_order, int t_cap) const {
  if (z_order > z_order_ || t_cap > t_cap_)
    throw std::invalid_argument("series: projection box must be smaller");
  TruncatedSeries s(z_order, t_cap);
  for (int n = 0; n <= z_order; ++n) {
    TPoly row = rows_[n];
    if (!row.zero() && row.hi() > t_cap) {
      row.c.resize(std::max(0, t_cap - row.lo + 1));
      row.normalize();
    }
    s.rows_[n] = std::move(row);
  }
  return s;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (int n = 0; n <= z_order_; ++n) {
    const TPoly& row = rows_[n];
    for (size_t i = 0; i < row.c.size(); ++i) {
      if (row.c[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += row.c[i].get_str();
      const int k = row.lo + static_cast<int>(i);
      if (k > 0) out += "*t^" + std::to_string(k);
      if (n > 0) out += "*z^" + std::to_string(n);
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.z_order_ == b.z_order_ && a.t_cap_ == b.t_cap_ && a.rows_ == b.rows_;
}

namespace {

void require_same_box(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.z_order() != b.z_order() || a.t_cap() != b.t_cap())
    throw std::invalid_argument("series: truncation boxes differ");
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_box(a, b);
  TruncatedSeries r(a.z_order_, a.t_cap_);
  for (int n = 0; n <= a.z_order_; ++n)
    r.rows_[n] = detail::poly_add(a.rows_[n], b.rows_[n], +1);
  return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_box(a, b);
  TruncatedSeries r(a.z_order_, a.t_cap_);
  for (int n = 0; n <= a.z_order_; ++n)
    r.rows_[n] = detail::poly_add(a.rows_[n], b.rows_[n], -1);
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_box(a, b);
  TruncatedSeries r(a.z_order_, a.t_cap_);
  std::vector<std::pair<const TPoly*, const TPoly*>> pairs;
  for (int n = 0; n <= a.z_order_; ++n) {
    pairs.clear();
    for (int i = 0; i <= n; ++i) pairs.push_back({&a.rows_[i], &b.rows_[n - i]});
    r.rows_[n] = detail::convolve_sum(pairs, a.t_cap_);
  }
  return r;
}

TruncatedSeries reciprocal(const TruncatedSeries& a, int z_rows) {
  const TPoly& head = a.rows_[0];
  if (head.c.size() != 1 || head.lo != 0 || head.c[0] != 1)
    throw std::invalid_argument("series: reciprocal requires constant term 1");

  const int n_max =
      z_rows < 0 ? a.z_order_ : std::min(z_rows, a.z_order_);

  // With a = 1 + A (A having no z^0 part), the inverse r satisfies
  // r = 1 - A*r, so each row follows from strictly lower rows.
  std::vector<TPoly> neg_tail(a.z_order_ + 1);
  for (int n = 1; n <= a.z_order_; ++n) {
    neg_tail[n] = a.rows_[n];
    for (BigInt& v : neg_tail[n].c) v = -v;
  }

  TruncatedSeries r(a.z_order_, a.t_cap_);
  r.rows_[0].lo = 0;
  r.rows_[0].c.push_back(1);
  std::vector<std::pair<const TPoly*, const TPoly*>> pairs;
  for (int n = 1; n <= n_max; ++n) {
    pairs.clear();
    for (int j = 1; j <= n; ++j)
      pairs.push_back({&neg_tail[j], &r.rows_[n - j]});
    r.rows_[n] = detail::convolve_sum(pairs, a.t_cap_);
  }
  return r;
}

}  // namespace permdepth
