#pragma once

// Exact integer linear algebra on Eigen dense matrices: fraction-free
// determinant, Smith normal form with unimodular transforms, and the
// functional presenting a cyclic cokernel Z^n / A Z^n -> Z/d.

#include <Eigen/Dense>
#include <cstdlib>
#include <limits>
#include <type_traits>
#include <utility>

#include "lenstight/error.hpp"

namespace lenstight {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using IntRowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

namespace checked {

template <typename Scalar>
Scalar add(Scalar a, Scalar b) {
  static_assert(std::is_integral_v<Scalar>);
  Scalar out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer addition");
  return out;
}

template <typename Scalar>
Scalar sub(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return out;
}

template <typename Scalar>
Scalar mul(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer product");
  return out;
}

// a*b - c*d without intermediate overflow going unnoticed
template <typename Scalar>
Scalar cross(Scalar a, Scalar b, Scalar c, Scalar d) {
  return sub(mul(a, b), mul(c, d));
}

}  // namespace checked

template <typename Scalar>
Scalar floor_mod(Scalar value, Scalar modulus) {
  Scalar r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// Inverse of a mod m (gcd(a, m) == 1, m >= 1); result in [0, m).
template <typename Scalar>
Scalar mod_inverse(Scalar a, Scalar m) {
  Scalar old_r = floor_mod(a, m), r = m;
  Scalar old_s = 1, s = 0;
  while (r != 0) {
    const Scalar quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r != 1) throw Error(ErrorCode::NonCoprime, "element is not a unit");
  return floor_mod(old_s, m);
}

// Bareiss elimination; every intermediate is a minor of the input, so the
// computation stays in the integers.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar>, "integer scalar required");
  eigen_assert(input.rows() == input.cols());
  IntMatrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar{1};
  Scalar sign = 1;
  Scalar previous = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Scalar{0};
      m.row(k).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = checked::cross(m(i, j), m(k, k), m(i, k), m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <typename Scalar>
struct SmithDecomposition {
  IntMatrix<Scalar> U;  // unimodular, rows x rows
  IntMatrix<Scalar> D;  // diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix<Scalar> V;  // unimodular, cols x cols

  IntVector<Scalar> invariant_factors() const {
    const Eigen::Index k = std::min(D.rows(), D.cols());
    return D.diagonal().head(k);
  }
};

namespace detail {

template <typename Scalar>
void add_row_multiple(IntMatrix<Scalar>& m, Eigen::Index target, Eigen::Index source,
                      Scalar factor) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    m(target, j) = checked::add(m(target, j), checked::mul(factor, m(source, j)));
  }
}

template <typename Scalar>
void add_col_multiple(IntMatrix<Scalar>& m, Eigen::Index target, Eigen::Index source,
                      Scalar factor) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    m(i, target) = checked::add(m(i, target), checked::mul(factor, m(i, source)));
  }
}

}  // namespace detail

// U * A * V == D, computed by pivoting on the smallest non-zero entry.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_integral_v<Scalar>, "integer scalar required");
  using detail::add_col_multiple;
  using detail::add_row_multiple;

  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();
  SmithDecomposition<Scalar> out{IntMatrix<Scalar>::Identity(rows, rows), input,
                                 IntMatrix<Scalar>::Identity(cols, cols)};
  IntMatrix<Scalar>& D = out.D;

  const Eigen::Index diag = std::min(rows, cols);
  for (Eigen::Index k = 0; k < diag; ++k) {
    while (true) {
      // smallest |entry| in the trailing block
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = k; i < rows; ++i) {
        for (Eigen::Index j = k; j < cols; ++j) {
          if (D(i, j) != 0 && (pr < 0 || std::abs(D(i, j)) < std::abs(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) return out;  // trailing block is zero

      D.row(k).swap(D.row(pr));
      out.U.row(k).swap(out.U.row(pr));
      D.col(k).swap(D.col(pc));
      out.V.col(k).swap(out.V.col(pc));

      bool clean = true;
      const Scalar pivot = D(k, k);
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        if (D(i, k) == 0) continue;
        const Scalar f = -(D(i, k) / pivot);
        add_row_multiple(D, i, k, f);
        add_row_multiple(out.U, i, k, f);
        if (D(i, k) != 0) clean = false;
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        if (D(k, j) == 0) continue;
        const Scalar f = -(D(k, j) / pivot);
        add_col_multiple(D, j, k, f);
        add_col_multiple(out.V, j, k, f);
        if (D(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the whole trailing block
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = k + 1; i < rows && bad_row < 0; ++i) {
        for (Eigen::Index j = k + 1; j < cols; ++j) {
          if (D(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      add_row_multiple(D, k, bad_row, Scalar{1});
      add_row_multiple(out.U, k, bad_row, Scalar{1});
    }
    if (D(k, k) < 0) {
      D.row(k) *= Scalar{-1};
      out.U.row(k) *= Scalar{-1};
    }
  }
  return out;
}

// Isomorphism Z^n / A Z^n -> Z/order, x |-> functional . x (mod order), for a
// square A whose cokernel is cyclic and finite.
template <typename Scalar>
struct CyclicCokernel {
  Scalar order;
  IntRowVector<Scalar> functional;

  template <typename Derived>
  Scalar operator()(const Eigen::MatrixBase<Derived>& x) const {
    Scalar acc = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      acc = floor_mod(checked::add(acc, checked::mul(floor_mod(functional(i), order),
                                                     floor_mod(x(i), order))),
                      order);
    }
    return acc;
  }

  // Rescale by a unit of Z/order so that basis vector `index` maps to 1.
  CyclicCokernel normalized_at(Eigen::Index index) const {
    CyclicCokernel out{order, functional};
    if (order == 1) {
      out.functional.setZero();
      return out;
    }
    const Scalar unit = mod_inverse(floor_mod(functional(index), order), order);
    for (Eigen::Index i = 0; i < functional.size(); ++i) {
      out.functional(i) = floor_mod(checked::mul(floor_mod(functional(i), order), unit), order);
    }
    return out;
  }
};

template <typename Derived>
CyclicCokernel<typename Derived::Scalar> cyclic_cokernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(a.rows() == a.cols());
  const auto snf = smith_normal_form(a);
  const Eigen::Index n = a.rows();
  if (n == 0) return {Scalar{1}, IntRowVector<Scalar>(0)};
  const auto factors = snf.invariant_factors();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (factors(i) != 1) {
      throw Error(ErrorCode::NonCyclicCokernel, "cokernel is not cyclic");
    }
  }
  const Scalar order = factors(n - 1);
  if (order == 0) throw Error(ErrorCode::NonCyclicCokernel, "cokernel is infinite");
  // coordinates of U x with invariant factor 1 vanish in the cokernel
  CyclicCokernel<Scalar> out{order, snf.U.row(n - 1)};
  for (Eigen::Index i = 0; i < n; ++i) out.functional(i) = floor_mod(out.functional(i), order);
  return out;
}

}  // namespace lenstight
