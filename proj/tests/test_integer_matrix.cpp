#include <doctest.h>

#include <random>

#include "lenstight/integer_matrix.hpp"
#include "oracles.hpp"

using namespace lenstight;
using Mat = IntMatrix<std::int64_t>;

namespace {
std::vector<std::vector<std::int64_t>> rows_of(const Mat& m) {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  return out;
}
}  // namespace

TEST_CASE("checked arithmetic") {
  CHECK(checked::add<std::int64_t>(2, 3) == 5);
  CHECK_THROWS_AS(checked::mul<std::int64_t>(INT64_MAX, 2), Error);
  CHECK_THROWS_AS(checked::add<std::int64_t>(INT64_MAX, 1), Error);
  CHECK(floor_mod<std::int64_t>(-7, 5) == 3);
  CHECK(mod_inverse<std::int64_t>(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse<std::int64_t>(2, 4), Error);
}

TEST_CASE("Bareiss determinant against cofactor expansion") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 5;
    Mat a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = entry(rng);
    }
    CHECK(bareiss_determinant(a) == oracle::det(rows_of(a)));
  }
  CHECK(bareiss_determinant(Mat(0, 0)) == 1);
  Mat z = Mat::Zero(3, 3);
  CHECK(bareiss_determinant(z) == 0);
}

TEST_CASE("Smith normal form") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index rows = 1 + trial % 4;
    const Eigen::Index cols = 1 + (trial / 4) % 4;
    Mat a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = entry(rng);
    }
    const auto snf = smith_normal_form(a);
    CHECK((snf.U * a * snf.V) == snf.D);
    CHECK(std::abs(bareiss_determinant(snf.U)) == 1);
    CHECK(std::abs(bareiss_determinant(snf.V)) == 1);
    const auto f = snf.invariant_factors();
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (i != j) CHECK(snf.D(i, j) == 0);
      }
    }
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      CHECK(f(i) >= 0);
      if (i + 1 < f.size() && f(i) != 0) CHECK(f(i + 1) % f(i) == 0);
      if (i + 1 < f.size() && f(i) == 0) CHECK(f(i + 1) == 0);
    }
    if (rows == cols) {
      CHECK(std::abs(oracle::det(rows_of(a))) == std::abs(f.prod()));
    }
  }
}

TEST_CASE("cyclic cokernel") {
  Mat a(2, 2);
  a << -2, 1, 1, -3;
  const auto coker = cyclic_cokernel(a).normalized_at(1);
  CHECK(coker.order == 5);
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> e(2);
  e << 0, 1;
  CHECK(coker(e) == 1);
  // columns of A vanish
  for (Eigen::Index j = 0; j < 2; ++j) CHECK(coker(a.col(j)) == 0);

  Mat b = Mat::Zero(2, 2);
  b(0, 0) = 2;
  b(1, 1) = 2;
  CHECK_THROWS_AS(cyclic_cokernel(b), Error);
}
