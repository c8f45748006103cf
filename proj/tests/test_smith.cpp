#include <gtest/gtest.h>

#include <random>

#include "gstrat/smith.hpp"
#include "oracles.hpp"

using gstrat::IntMatrix;
using gstrat::smith_normal_form;

namespace {

std::vector<oracle::Vec> rows_of(const IntMatrix& m) {
  std::vector<oracle::Vec> out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

void expect_decomposition(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.left * m * snf.right, snf.diagonal);
  EXPECT_EQ(std::abs(oracle::bareiss_det(rows_of(snf.left))), 1);
  EXPECT_EQ(std::abs(oracle::bareiss_det(rows_of(snf.right))), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c) EXPECT_EQ(snf.diagonal(r, c), 0);
  const auto inv = snf.invariants();
  for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
    EXPECT_GE(inv[i], 0);
    if (inv[i] != 0)
      EXPECT_EQ(inv[i + 1] % inv[i], 0);
    else
      EXPECT_EQ(inv[i + 1], 0);
  }
  EXPECT_EQ(inv, oracle::determinantal_invariants(rows_of(m)));
}

}  // namespace

TEST(Smith, Diag4And6) {
  const auto snf = smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
  EXPECT_EQ(snf.invariants(), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(oracle::determinantal_invariants({{4, 0}, {0, 6}}), (oracle::Vec{2, 12}));
  expect_decomposition(IntMatrix{{4, 0}, {0, 6}});
}

TEST(Smith, Identity) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(2)).diagonal, IntMatrix::identity(2));
}

TEST(Smith, Zero) {
  const auto snf = smith_normal_form(IntMatrix{{0}});
  EXPECT_EQ(snf.diagonal, IntMatrix{{0}});
}

TEST(Smith, RectangularAndSingular) {
  expect_decomposition(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  expect_decomposition(IntMatrix{{2, 0, 1, 3}, {0, 4, 2, 2}});
  expect_decomposition(IntMatrix{{1, 2}, {2, 4}, {3, 6}});
  expect_decomposition(IntMatrix{{0, 0}, {0, 0}});
}

TEST(Smith, RandomMatricesMatchDeterminantalDivisors) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(size(rng), size(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    SCOPED_TRACE(trial);
    expect_decomposition(m);
  }
}
