// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace qes {

/// Minimal dense row-major matrix. Small sizes only (N is at most ~100).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols) {}

  T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
    std::vector<T> y(rows_, T(0));
    for (int i = 0; i < rows_; ++i) {
      T acc(0);
      for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> d_;
};

namespace detail {
// abs() on expression-template scalars (boost cpp_rational) yields an
// expression object whose result_type names the actual number type.
template <class T, class = void>
struct AbsResult {
  using type = std::decay_t<decltype(abs(std::declval<const T&>()))>;
};
template <class T>
struct AbsResult<T, std::void_t<typename std::decay_t<decltype(abs(std::declval<const T&>()))>::result_type>> {
  using type = typename std::decay_t<decltype(abs(std::declval<const T&>()))>::result_type;
};
}  // namespace detail

template <class T>
using AbsType = typename detail::AbsResult<T>::type;

template <class T>
struct KernelResult {
  int rank = 0;
  int kernel_dim = 0;
  std::vector<T> vector;  // one kernel vector, empty when kernel_dim == 0
};

/// Rank-revealing elimination with full pivoting, returning the numerical
/// kernel dimension and one kernel vector. A pivot counts as zero when its
/// magnitude drops below tol_rel times the largest pivot (0 = exact mode,
/// usable with rational scalars). max_rank, when nonnegative, caps the rank
/// so that an approximate null vector exists even for full-rank input.
/// anchor is an absolute floor for the reference pivot: a matrix whose
/// entries are all roundoff of a cancelled quantity would otherwise promote
/// its own noise to a "largest pivot" and report full rank.
template <class T>
KernelResult<T> pivoted_kernel_solve(Mat<T> m, const AbsType<T>& tol_rel, int max_rank = -1,
                                     const AbsType<T>& anchor = AbsType<T>(0)) {
  using std::abs;
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> colperm(cols);
  for (int j = 0; j < cols; ++j) colperm[j] = j;

  AbsType<T> first_pivot(0);
  int rank = 0;
  const int steps = (max_rank >= 0) ? std::min(max_rank, std::min(rows, cols))
                                    : std::min(rows, cols);
  for (int step = 0; step < steps; ++step) {
    int pi = step, pj = step;
    AbsType<T> best(0);
    for (int i = step; i < rows; ++i)
      for (int j = step; j < cols; ++j)
        if (abs(m(i, j)) > best) { best = abs(m(i, j)); pi = i; pj = j; }
    if (step == 0) first_pivot = std::max(best, anchor);
    const bool zero = (tol_rel == AbsType<T>(0)) ? (best == AbsType<T>(0))
                                                 : (best <= tol_rel * first_pivot);
    if (zero) break;
    if (pi != step)
      for (int j = 0; j < cols; ++j) std::swap(m(step, j), m(pi, j));
    if (pj != step) {
      for (int i = 0; i < rows; ++i) std::swap(m(i, step), m(i, pj));
      std::swap(colperm[step], colperm[pj]);
    }
    for (int i = step + 1; i < rows; ++i) {
      T f = m(i, step) / m(step, step);
      m(i, step) = T(0);
      for (int j = step + 1; j < cols; ++j) m(i, j) -= f * m(step, j);
    }
    ++rank;
  }

  KernelResult<T> out;
  out.rank = rank;
  out.kernel_dim = cols - rank;
  if (out.kernel_dim == 0) return out;

  // Back-substitute with the first free column set to 1, the rest to 0.
  std::vector<T> x(cols, T(0));
  x[rank] = T(1);
  for (int i = rank - 1; i >= 0; --i) {
    T acc = -m(i, rank);
    for (int j = i + 1; j < rank; ++j) acc -= m(i, j) * x[j];
    x[i] = acc / m(i, i);
  }
  out.vector.assign(cols, T(0));
  for (int j = 0; j < cols; ++j) out.vector[colperm[j]] = x[j];
  return out;
}

/// Dense linear solve with partial pivoting. Returns false on a zero pivot.
template <class T>
bool gauss_solve(Mat<T> a, std::vector<T> b, std::vector<T>& x) {
  using std::abs;
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("gauss_solve: square system required");
  for (int step = 0; step < n; ++step) {
    int pi = step;
    AbsType<T> best = abs(a(step, step));
    for (int i = step + 1; i < n; ++i)
      if (abs(a(i, step)) > best) { best = abs(a(i, step)); pi = i; }
    if (best == AbsType<T>(0)) return false;
    if (pi != step) {
      for (int j = step; j < n; ++j) std::swap(a(step, j), a(pi, j));
      std::swap(b[step], b[pi]);
    }
    for (int i = step + 1; i < n; ++i) {
      T f = a(i, step) / a(step, step);
      if (f == T(0)) continue;
      for (int j = step; j < n; ++j) a(i, j) -= f * a(step, j);
      b[i] -= f * b[step];
    }
  }
  x.assign(n, T(0));
  for (int i = n - 1; i >= 0; --i) {
    T acc = b[i];
    for (int j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return true;
}

/// Determinant by Gaussian elimination. Pivot selection is by magnitude,
/// which with rational scalars only needs any nonzero entry.
template <class T>
T gauss_determinant(Mat<T> m) {
  using std::abs;
  if (m.rows() != m.cols()) throw std::invalid_argument("gauss_determinant: square matrix required");
  const int n = m.rows();
  T det(1);
  for (int step = 0; step < n; ++step) {
    int pi = step;
    AbsType<T> best = abs(m(step, step));
    for (int i = step + 1; i < n; ++i)
      if (abs(m(i, step)) > best) { best = abs(m(i, step)); pi = i; }
    if (best == AbsType<T>(0)) return T(0);
    if (pi != step) {
      for (int j = step; j < n; ++j) std::swap(m(step, j), m(pi, j));
      det = -det;
    }
    det *= m(step, step);
    for (int i = step + 1; i < n; ++i) {
      T f = m(i, step) / m(step, step);
      for (int j = step; j < n; ++j) m(i, j) -= f * m(step, j);
    }
  }
  return det;
}

}  // namespace qes
