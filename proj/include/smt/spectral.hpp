// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Graph matrices A, L = D - A and Q = D + A, eigenvalue enclosures, and
/// quotient matrices of vertex partitions.
///
/// Eigenvalues are located by Householder reduction to tridiagonal form
/// followed by Sturm-count bisection. The returned interval is widened by a
/// backward-error pad of (4n + 8) eps ||M||_F so that it holds the eigenvalue
/// of M itself, not only that of the computed tridiagonal matrix.

#pragma once

#include <smt/charpoly.hpp>
#include <smt/error.hpp>
#include <smt/graph.hpp>
#include <smt/rational.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace smt {

inline constexpr double default_tolerance = 1e-9;

class SymmetricMatrix {
public:
  explicit SymmetricMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {
    if (order == 0) throw DomainError("matrix order must be at least 1");
  }

  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows) : SymmetricMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != order_) throw ParameterError("matrix rows must all have the matrix order");
      std::size_t j = 0;
      for (double v : row) entries_[i * order_ + j++] = v;
      ++i;
    }
    for (std::size_t r = 0; r < order_; ++r)
      for (std::size_t c = 0; c < r; ++c)
        if ((*this)(r, c) != (*this)(c, r)) throw ParameterError("matrix is not symmetric");
  }

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  /// Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double v) {
    entries_[i * order_ + j] = v;
    entries_[j * order_ + i] = v;
  }

  bool is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double v) { return std::floor(v) == v && std::fabs(v) < 9.0e15; });
  }

  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v >= 0.0; });
  }

  /// Row-major integer copy; throws unless the matrix is integral.
  std::vector<std::int64_t> integer_entries() const {
    if (!is_integral()) throw DomainError("matrix has non-integer entries");
    std::vector<std::int64_t> out(entries_.size());
    std::transform(entries_.begin(), entries_.end(), out.begin(), [](double v) { return static_cast<std::int64_t>(v); });
    return out;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return std::sqrt(s);
  }

  double max_row_sum() const {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < order_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < order_; ++j) s += (*this)(i, j);
      best = std::max(best, s);
    }
    return best;
  }

  friend std::ostream& operator<<(std::ostream& os, const SymmetricMatrix& m) {
    for (std::size_t i = 0; i < m.order_; ++i) {
      for (std::size_t j = 0; j < m.order_; ++j) os << (j ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
  std::size_t order_;
  std::vector<double> entries_;
};

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

inline SymmetricMatrix build_matrix(const Graph& g, MatrixKind kind) {
  if (g.order() == 0) throw DomainError("matrix of the empty graph");
  SymmetricMatrix m(g.order());
  const double off = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
  for (auto [u, v] : g.edges()) m.set(u, v, off);
  if (kind != MatrixKind::Adjacency)
    for (Vertex u = 0; u < g.order(); ++u) m.set(u, u, static_cast<double>(g.degree(u)));
  return m;
}

/// Interval [lo, hi] holding the `index`-th largest eigenvalue (1-based,
/// counting multiplicity).
struct EigenEnclosure {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t index = 1;

  double mid() const noexcept { return lo + (hi - lo) / 2; }
  double radius() const noexcept { return (hi - lo) / 2; }
  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Rational& x) const noexcept { return contains(x.to_double()); }
};

namespace detail {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off; // off[i] couples i and i+1
};

/// Householder reduction of a symmetric matrix (dense, in place on a copy).
inline Tridiagonal tridiagonalize(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  Tridiagonal t;
  t.diag.resize(n);
  t.off.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> v(n), p(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += at(i, k) * at(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (at(k + 1, k) > 0) alpha = -alpha;
    // v = x - alpha e1 over rows k+1..n-1
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = at(i, k) - (i == k + 1 ? alpha : 0.0);
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // A <- H A H with H = I - beta v v^T, restricted to the trailing block.
    for (std::size_t i = k; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      p[i] = beta * s;
    }
    double vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vp += v[i] * p[i];
    const double kfac = beta * vp / 2.0;
    for (std::size_t i = k + 1; i < n; ++i) w[i] = p[i] - kfac * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= v[i] * w[j] + w[i] * v[j];
    at(k + 1, k) = alpha;
    at(k, k + 1) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) {
      at(i, k) = 0.0;
      at(k, i) = 0.0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = at(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) t.off[i] = at(i + 1, i);
  return t;
}

/// Number of eigenvalues of t strictly below x (Sturm sequence via LDL^T pivots).
inline std::size_t count_below(const Tridiagonal& t, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::fabs(x) + 1.0) * 1e-3;
    if (q < 0.0) ++count;
  }
  return count;
}

} // namespace detail

/// Enclosure of the `index`-th largest eigenvalue with width at most
/// tol * max(1, |value|). Throws InconclusiveError if the backward-error pad
/// alone already exceeds that width.
inline EigenEnclosure eigenvalue(const SymmetricMatrix& m, std::size_t index, double tol = default_tolerance) {
  const std::size_t n = m.order();
  if (index < 1 || index > n) throw ParameterError("eigenvalue index " + std::to_string(index) + " out of range 1.." + std::to_string(n));
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");

  const auto t = detail::tridiagonalize(m);
  double radius = 0.0; // Gershgorin
  double centre_lo = std::numeric_limits<double>::infinity();
  double centre_hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::fabs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::fabs(t.off[i]) : 0.0);
    centre_lo = std::min(centre_lo, t.diag[i] - r);
    centre_hi = std::max(centre_hi, t.diag[i] + r);
    radius = std::max(radius, r);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double pad = (4.0 * static_cast<double>(n) + 8.0) * eps * std::max(m.frobenius_norm(), 1e-300);
  double lo = centre_lo - 2 * pad - 1e-300;
  double hi = centre_hi + 2 * pad + 1e-300;

  // Invariant: count_below(lo) <= n - index < count_below(hi).
  const std::size_t rank = n - index;
  for (int iter = 0; iter < 400; ++iter) {
    const double scale = std::max(1.0, std::min(std::fabs(lo - pad), std::fabs(hi + pad)));
    if ((hi - lo) + 2 * pad <= tol * scale) {
      return EigenEnclosure{lo - pad, hi + pad, index};
    }
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (detail::count_below(t, mid) <= rank) lo = mid;
    else hi = mid;
  }
  throw InconclusiveError("eigenvalue " + std::to_string(index) + " could not be enclosed to tolerance " + std::to_string(tol));
}

inline EigenEnclosure q1(const Graph& g, double tol = default_tolerance) {
  return eigenvalue(build_matrix(g, MatrixKind::SignlessLaplacian), 1, tol);
}

/// Second smallest Laplacian eigenvalue.
inline EigenEnclosure algebraic_connectivity(const Graph& g, double tol = default_tolerance) {
  if (g.order() < 2) throw DomainError("algebraic connectivity needs at least two vertices");
  return eigenvalue(build_matrix(g, MatrixKind::Laplacian), g.order() - 1, tol);
}

/// Exact comparison of the `index`-th largest eigenvalue of an integer matrix
/// against a rational.
inline std::strong_ordering compare_eigenvalue_exact(const SymmetricMatrix& m, std::size_t index, const Rational& x) {
  if (index < 1 || index > m.order()) throw ParameterError("eigenvalue index out of range");
  const auto c = exact_eigen_count(m.integer_entries(), m.order(), x);
  if (c.above >= index) return std::strong_ordering::greater;
  if (c.above + c.equal >= index) return std::strong_ordering::equal;
  return std::strong_ordering::less;
}

// Partitions and quotient matrices.

class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<std::vector<std::size_t>> blocks) : blocks_(blocks) {}
  explicit Partition(std::vector<std::vector<std::size_t>> blocks) : blocks_(std::move(blocks)) {}

  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  /// Throws unless the blocks are nonempty, disjoint and cover 0..order-1.
  void validate(std::size_t order) const {
    std::vector<bool> seen(order, false);
    std::size_t total = 0;
    for (const auto& block : blocks_) {
      if (block.empty()) throw ParameterError("partition has an empty block");
      for (std::size_t v : block) {
        if (v >= order) throw ParameterError("partition index " + std::to_string(v) + " out of range");
        if (seen[v]) throw ParameterError("partition blocks overlap at " + std::to_string(v));
        seen[v] = true;
        ++total;
      }
    }
    if (total != order) throw ParameterError("partition does not cover all indices");
  }

private:
  std::vector<std::vector<std::size_t>> blocks_;
};

/// b_ij = (sum of block M_ij) / n_i, kept exact.
class QuotientMatrix {
public:
  QuotientMatrix(std::vector<Rational> entries, std::vector<std::size_t> block_sizes)
      : t_(block_sizes.size()), entries_(std::move(entries)), block_sizes_(std::move(block_sizes)) {
    if (entries_.size() != t_ * t_) throw ParameterError("quotient matrix entry count mismatch");
  }

  /// Plain t x t matrix without block sizes (each block treated as size 1).
  QuotientMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : t_(rows.size()) {
    for (const auto& row : rows) {
      if (row.size() != t_) throw ParameterError("quotient matrix must be square");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
    block_sizes_.assign(t_, 1);
  }

  std::size_t order() const noexcept { return t_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * t_ + j]; }
  const std::vector<std::size_t>& block_sizes() const noexcept { return block_sizes_; }

  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r >= Rational(0); });
  }

  friend bool operator==(const QuotientMatrix& a, const QuotientMatrix& b) {
    return a.t_ == b.t_ && a.entries_ == b.entries_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuotientMatrix& q) {
    for (std::size_t i = 0; i < q.t_; ++i) {
      for (std::size_t j = 0; j < q.t_; ++j) os << (j ? " " : "") << q(i, j);
      os << '\n';
    }
    return os;
  }

private:
  std::size_t t_ = 0;
  std::vector<Rational> entries_;
  std::vector<std::size_t> block_sizes_;
};

inline QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const Partition& p) {
  p.validate(m.order());
  const auto ints = m.integer_entries();
  const std::size_t t = p.size();
  std::vector<Rational> entries;
  entries.reserve(t * t);
  std::vector<std::size_t> sizes;
  for (const auto& bi : p.blocks()) {
    sizes.push_back(bi.size());
    for (const auto& bj : p.blocks()) {
      std::int64_t sum = 0;
      for (std::size_t r : bi)
        for (std::size_t c : bj) sum += ints[r * m.order() + c];
      entries.emplace_back(sum, static_cast<std::int64_t>(bi.size()));
    }
  }
  return QuotientMatrix(std::move(entries), std::move(sizes));
}

/// Every block M_ij has constant row sums. Exact for integer matrices.
inline bool is_equitable(const SymmetricMatrix& m, const Partition& p) {
  p.validate(m.order());
  for (const auto& bi : p.blocks())
    for (const auto& bj : p.blocks()) {
      std::optional<double> first;
      for (std::size_t r : bi) {
        double s = 0.0;
        for (std::size_t c : bj) s += m(r, c);
        if (!first) first = s;
        else if (*first != s) return false;
      }
    }
  return true;
}

namespace detail {

inline std::optional<Rational> exact_rational_sqrt(const Rational& r) {
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    if (v < 0) return std::nullopt;
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::int64_t c = std::max<std::int64_t>(0, s - 2); c <= s + 2; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  auto num = isqrt(r.num());
  auto den = isqrt(r.den());
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

} // namespace detail

/// Largest eigenvalue of a nonnegative quotient matrix. Closed form for t <= 2;
/// for larger t the matrix is symmetrized through its block sizes
/// (n_i b_ij = n_j b_ji holds for every quotient of a symmetric matrix).
inline EigenEnclosure quotient_spectral_radius(const QuotientMatrix& b, double tol = default_tolerance) {
  if (!b.is_nonnegative()) throw DomainError("quotient spectral radius requires a nonnegative matrix");
  const std::size_t t = b.order();
  if (t == 0) throw DomainError("empty quotient matrix");
  const double eps = std::numeric_limits<double>::epsilon();
  auto exact = [](const Rational& r) {
    const double v = r.to_double();
    const double pad = std::fabs(v) * std::numeric_limits<double>::epsilon();
    return EigenEnclosure{v - pad, v + pad, 1};
  };
  if (t == 1) return exact(b(0, 0));
  if (t == 2) {
    const Rational trace = b(0, 0) + b(1, 1);
    const Rational det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    const Rational disc = trace * trace - Rational(4) * det;
    if (auto root = detail::exact_rational_sqrt(disc)) return exact((trace + *root) / Rational(2));
    const double v = (trace.to_double() + std::sqrt(disc.to_double())) / 2.0;
    const double pad = 8.0 * eps * std::max(1.0, std::fabs(v));
    return EigenEnclosure{v - pad, v + pad, 1};
  }
  const auto& sizes = b.block_sizes();
  SymmetricMatrix s(t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i; j < t; ++j) {
      if (Rational(static_cast<std::int64_t>(sizes[i])) * b(i, j) != Rational(static_cast<std::int64_t>(sizes[j])) * b(j, i))
        throw DomainError("quotient matrix is not symmetrizable by its block sizes");
      s.set(i, j, std::sqrt(b(i, j).to_double() * b(j, i).to_double()));
    }
  return eigenvalue(s, 1, tol);
}

} // namespace smt
