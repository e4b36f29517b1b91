// SPDX-License-Identifier: Apache-2.0
#include <bruhat/snf.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace bruhat;

namespace {

SnfResult inv(std::initializer_list<long> values) {
  SnfResult out;
  for (long v : values) out.invariants.emplace_back(v);
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = entry(rng);
  return a;
}

// Laplace expansion; only for the tiny matrices below.
long long laplace(const std::vector<std::vector<long long>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<long long> row;
      for (std::size_t q = 0; q < k; ++q)
        if (q != c) row.push_back(m[r][q]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * laplace(minor);
  }
  return total;
}

// Determinantal divisors d_k over machine integers, invariants d_k / d_{k-1}.
std::vector<long long> divisor_invariants(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t top = std::min(rows, cols);
  std::vector<long long> d(top + 1, 0);
  d[0] = 1;
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<bool> rmask(rows, false), cmask(cols, false);
    std::fill(rmask.begin(), rmask.begin() + static_cast<long>(k), true);
    long long g = 0;
    do {
      std::fill(cmask.begin(), cmask.end(), false);
      std::fill(cmask.begin(), cmask.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<long long>> m;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rmask[r]) continue;
          std::vector<long long> row;
          for (std::size_t c = 0; c < cols; ++c)
            if (cmask[c]) row.push_back(a(r, c).get_si());
          m.push_back(row);
        }
        g = std::gcd(g, laplace(m));
      } while (std::prev_permutation(cmask.begin(), cmask.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
    d[k] = g;
  }
  std::vector<long long> out;
  for (std::size_t k = 1; k <= top; ++k) out.push_back(d[k - 1] == 0 ? 0 : d[k] / d[k - 1]);
  return out;
}

}  // namespace

TEST(Snf, Examples) {
  EXPECT_EQ(snf(IntMatrix{{1, 1}, {1, 3}}), inv({1, 2}));
  EXPECT_EQ(snf(IntMatrix{{2, 0}, {0, 1}}), inv({1, 2}));
  EXPECT_EQ(snf(IntMatrix::identity(4)), inv({1, 1, 1, 1}));
  EXPECT_EQ(snf(IntMatrix(2, 3)), inv({0, 0}));
  EXPECT_EQ(snf(IntMatrix{{2, 4}, {4, 6}}), inv({2, 2}));
  EXPECT_EQ(snf(IntMatrix{{6, 0}, {0, 4}}), inv({2, 12}));
  EXPECT_EQ(snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), inv({2, 6, 12}));
}

TEST(Snf, MinorGcdExamples) {
  EXPECT_EQ(snf_via_minor_gcd(IntMatrix{{2, 4}, {4, 6}}), inv({2, 2}));
  EXPECT_EQ(snf_via_minor_gcd(IntMatrix{{1, 1}, {1, 3}}), inv({1, 2}));
  EXPECT_EQ(snf_via_minor_gcd(IntMatrix{{0}}), inv({0}));
  EXPECT_EQ(snf_via_minor_gcd(IntMatrix{{1, 2}, {2, 4}}), inv({1, 0}));
}

TEST(Snf, Formatting) {
  EXPECT_EQ(inv({1, 2}).to_string(), "(1,2)");
  EXPECT_EQ(inv({1, 2}).to_json(), R"({"invariants":["1","2"]})");
}

TEST(Snf, AgreesWithMinorGcdOnRandomMatrices) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng), 9);
    ASSERT_EQ(snf(a), snf_via_minor_gcd(a)) << a.to_json();
  }
}

TEST(Snf, MinorGcdMatchesMachineOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng), 5);
    const auto expected = divisor_invariants(a);
    const auto actual = snf_via_minor_gcd(a);
    ASSERT_EQ(actual.invariants.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) ASSERT_EQ(actual.invariants[k], static_cast<long>(expected[k])) << a.to_json();
  }
}

TEST(Snf, LowRankAndSparse) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const auto left = random_matrix(rng, rows, 2, 4);
    const auto right = random_matrix(rng, 2, cols, 4);
    const auto a = left * right;
    ASSERT_EQ(snf(a), snf_via_minor_gcd(a)) << a.to_json();
  }
}

TEST(Snf, DivisibilityChain) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto result = snf(random_matrix(rng, 5, 4, 20));
    for (std::size_t k = 1; k < result.invariants.size(); ++k) {
      const BigInt& a = result.invariants[k - 1];
      const BigInt& b = result.invariants[k];
      EXPECT_GE(a, 0);
      if (a == 0) {
        EXPECT_EQ(b, 0);
      } else {
        EXPECT_EQ(b % a, 0);
      }
    }
  }
}

TEST(Snf, ProductEqualsDeterminant) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, 5, 5, 9);
    const auto result = snf(a);
    BigInt product = 1;
    for (const auto& b : result.invariants) product *= b;
    EXPECT_EQ(product, abs(determinant(a)));
  }
}

TEST(Snf, InvariantUnderPermutation) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(rng, 4, 6, 9);
    std::vector<std::size_t> rows(4), cols(6);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    EXPECT_EQ(snf(a), snf(a.permuted(rows, cols)));
    EXPECT_EQ(snf(a), snf(a.transpose()));
  }
}

TEST(Snf, LargeEntries) {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = from_decimal("1307674368000");
  a(1, 1) = from_decimal("6402373705728000");
  EXPECT_EQ(snf(a).to_string(), "(1307674368000,6402373705728000)");
}

TEST(Determinant, Bareiss) {
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {0, 1}}), 2);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(PredictedSnf, Examples) {
  EXPECT_EQ(predicted_snf(3, 1, 2), inv({1, 2}));
  EXPECT_EQ(predicted_snf(4, 1, 2), inv({1, 1, 2}));
  EXPECT_EQ(predicted_snf(4, 0, 3), inv({6}));
  EXPECT_EQ(predicted_snf(5, 0, 10).to_string(), "(3628800)");
  EXPECT_THROW(predicted_snf(3, 2, 2), std::invalid_argument);
  EXPECT_THROW(predicted_snf(3, 2, 3), std::invalid_argument);
}

TEST(RankSize, Examples) {
  EXPECT_EQ(rank_size(3, 1), 2);
  EXPECT_EQ(rank_size(4, 2), 5);
  EXPECT_EQ(rank_size(5, 0), 1);
  EXPECT_THROW(rank_size(3, 4), std::out_of_range);
  const auto sizes = rank_sizes(5);
  EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), BigInt(0)), 120);
}

TEST(IntMatrix, JsonRoundTrip) {
  const IntMatrix a{{1, -2}, {3, 40}};
  EXPECT_EQ(a.to_json(), R"([["1","-2"],["3","40"]])");
  EXPECT_EQ(IntMatrix::from_json(a.to_json()), a);
}
