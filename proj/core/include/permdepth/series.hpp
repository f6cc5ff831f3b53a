#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "permdepth/bigint.hpp"

namespace permdepth {

namespace detail {

/// Dense window of coefficients in one variable: c[i] is the coefficient
/// of t^(lo + i). Normal form: empty (the zero polynomial) or nonzero at
/// both ends of the window.
struct TPoly {
  int lo = 0;
  std::vector<BigInt> c;

  bool zero() const { return c.empty(); }
  int hi() const { return lo + static_cast<int>(c.size()) - 1; }
  void normalize();

  bool operator==(const TPoly& o) const { return lo == o.lo && c == o.c; }
};

}  // namespace detail

/// A bivariate polynomial in t and z with exact integer coefficients,
/// truncated to the box 0 <= z-degree <= z_order, 0 <= t-degree <= t_cap.
/// All arithmetic discards monomials that leave the box. Absent
/// coefficients are zero; stored rows are kept in normal form.
class TruncatedSeries {
 public:
  /// The zero series on the given box.
  TruncatedSeries(int z_order, int t_cap);

  /// The zero series with the default cap t_cap = floor(z_order^2 / 4),
  /// the largest t-degree any length-z_order object in this library can
  /// carry.
  explicit TruncatedSeries(int z_order)
      : TruncatedSeries(z_order, z_order * z_order / 4) {}

  /// The single-term series c * t^t_deg * z^z_deg, or the zero series if
  /// the monomial falls outside the box.
  static TruncatedSeries monomial(BigInt c, int t_deg, int z_deg, int z_order,
                                  int t_cap);

  static TruncatedSeries one(int z_order, int t_cap) {
    return monomial(1, 0, 0, z_order, t_cap);
  }

  int z_order() const { return z_order_; }
  int t_cap() const { return t_cap_; }

  /// Coefficient of t^t_deg z^z_deg; throws outside the box.
  const BigInt& coeff(int z_deg, int t_deg) const;

  /// Largest t-degree with a nonzero coefficient in the z^z_deg row,
  /// or -1 for a zero row.
  int max_t_degree(int z_deg) const;

  bool is_zero() const;

  /// Same box, rows above z_max dropped. Only sound when the caller knows
  /// the dropped rows cannot influence what it computes next.
  TruncatedSeries truncated_z(int z_max) const;

  /// Projection onto a smaller box.
  TruncatedSeries projected(int z_order, int t_cap) const;

  std::string str() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Coefficientwise sum/difference; the boxes must match.
  friend TruncatedSeries add(const TruncatedSeries& a,
                             const TruncatedSeries& b);
  friend TruncatedSeries sub(const TruncatedSeries& a,
                             const TruncatedSeries& b);

  /// Exact convolution truncated to the box; the boxes must match.
  friend TruncatedSeries mul(const TruncatedSeries& a,
                             const TruncatedSeries& b);

  /// Multiplicative inverse within the box. Requires the z^0 coefficient
  /// of a to be exactly 1 (as a polynomial in t). When z_rows >= 0, only
  /// rows 0..z_rows of the result are computed; the rest are left zero.
  friend TruncatedSeries reciprocal(const TruncatedSeries& a, int z_rows);

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    return add(a, b);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    return sub(a, b);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    return mul(a, b);
  }

 private:
  int z_order_;
  int t_cap_;
  std::vector<detail::TPoly> rows_;  // rows_[n] multiplies z^n
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries reciprocal(const TruncatedSeries& a, int z_rows = -1);

}  // namespace permdepth
