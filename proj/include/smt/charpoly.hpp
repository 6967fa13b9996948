// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Exact eigenvalue location for integer symmetric matrices.
///
/// For an integer symmetric M and rational x = p/q (q > 0), the eigenvalues of
/// qM - pI are q(lambda - x). Its characteristic polynomial has integer
/// coefficients (computed division-free with Berkowitz's algorithm) and only
/// real roots, so Descartes' rule of signs counts the positive roots exactly;
/// the multiplicity of the root 0 is the number of trailing zero coefficients.

#pragma once

#include <smt/error.hpp>
#include <smt/rational.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace smt {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of det(tI - A), highest degree first (leading coefficient 1).
inline std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return {BigInt(1)};
  std::vector<BigInt> poly{BigInt(1), BigInt(-a[0][0])};
  for (std::size_t r = 1; r < n; ++r) {
    // Leading r x r block A_r, column c = A[0..r-1][r], row R = A[r][0..r-1].
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -a[r][r];
    std::vector<BigInt> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * col[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<BigInt> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          BigInt s = 0;
          for (std::size_t j = 0; j < r; ++j) s += a[i][j] * col[j];
          next[i] = std::move(s);
        }
        col = std::move(next);
      }
    }
    std::vector<BigInt> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) s += toeplitz[i - j] * poly[j];
      next[i] = std::move(s);
    }
    poly = std::move(next);
  }
  return poly;
}

/// How many eigenvalues (with multiplicity) lie above, at, and below x.
struct EigenCount {
  std::size_t above = 0;
  std::size_t equal = 0;
  std::size_t below = 0;
};

inline constexpr std::size_t exact_count_max_order = 64;

/// `entries` is the row-major integer matrix of order n (must be symmetric).
inline EigenCount exact_eigen_count(const std::vector<std::int64_t>& entries, std::size_t n, const Rational& x) {
  if (n > exact_count_max_order) throw ResourceError("exact eigenvalue count limited to order 64");
  std::vector<std::vector<BigInt>> shifted(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = BigInt(entries[i * n + j]) * x.den();
      if (i == j) v -= x.num();
      shifted[i][j] = std::move(v);
    }
  const auto poly = characteristic_polynomial(shifted);

  EigenCount out;
  std::size_t last_nonzero = poly.size();
  while (last_nonzero > 0 && poly[last_nonzero - 1] == 0) --last_nonzero;
  out.equal = poly.size() - last_nonzero;
  int previous = 0;
  for (std::size_t i = 0; i < last_nonzero; ++i) {
    const int s = poly[i].sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++out.above;
    previous = s;
  }
  out.below = n - out.above - out.equal;
  return out;
}

} // namespace smt
