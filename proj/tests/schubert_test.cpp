// SPDX-License-Identifier: Apache-2.0
#include <bruhat/polynomial.hpp>
#include <bruhat/schubert.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace bruhat;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

IntPolynomial mono(int n, Exponent alpha, long c = 1) { return IntPolynomial::monomial(n, alpha, c); }

// Oracle: right-action recursion S_{w s_i} = N_i S_w from w0, walking every
// descent, memoized by permutation. Returns the standard Schubert family.
std::map<Permutation, IntPolynomial> standard_family(int n) {
  std::map<Permutation, IntPolynomial> out;
  std::vector<Permutation> frontier = {longest_element(n)};
  out.emplace(longest_element(n), mono(n, staircase(n)));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier) {
      for (int i = 1; i < n; ++i) {
        if (w.at(i) < w.at(i + 1)) continue;
        const auto v = right_multiply_transposition(w, i, i + 1);
        const auto p = divided_difference(i, out.at(w));
        const auto [it, inserted] = out.emplace(v, p);
        if (inserted) {
          next.push_back(v);
        } else {
          EXPECT_EQ(it->second, p) << v.to_string();
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Polynomial, StaircaseMonomials) {
  EXPECT_EQ(staircase(4), (Exponent{3, 2, 1}));
  EXPECT_EQ(staircase_monomials(3, 1), (std::vector<Exponent>{{1, 0}, {0, 1}}));
  EXPECT_TRUE(under_staircase({2, 1}, 3));
  EXPECT_FALSE(under_staircase({1, 2}, 3));
  EXPECT_THROW(mono(3, {0, 2}), std::invalid_argument);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(IntPolynomial(3).to_string(), "0");
  EXPECT_EQ(IntPolynomial::constant(3, 1).to_string(), "1");
  EXPECT_EQ((mono(3, {1, 0}) + mono(3, {0, 1}, 4)).to_string(), "x1 + 4*x2");
  EXPECT_EQ((mono(3, {1, 0}) - mono(3, {1, 0})).is_zero(), true);
}

TEST(DividedDifference, Examples) {
  EXPECT_EQ(divided_difference(1, mono(3, {1, 0})), IntPolynomial::constant(3, 1));
  EXPECT_EQ(divided_difference(1, mono(3, {2, 1})), mono(3, {1, 1}));
  EXPECT_TRUE(divided_difference(1, mono(3, {1, 1})).is_zero());
  EXPECT_TRUE(divided_difference(1, mono(4, {2, 2, 0}) + mono(4, {1, 1, 1})).is_zero());
  // i = n-1 reaches the implicit x_n.
  EXPECT_EQ(divided_difference(2, mono(3, {0, 1})), IntPolynomial::constant(3, 1));
  EXPECT_EQ(divided_difference(2, mono(3, {2, 1})), mono(3, {2, 0}));
}

TEST(Schubert, Examples) {
  EXPECT_EQ(schubert(P("321")).to_string(), "x1^2*x2");
  EXPECT_EQ(schubert(P("123")), IntPolynomial::constant(3, 1));
  EXPECT_EQ(schubert(P("231")), mono(3, {2, 0}));
  EXPECT_EQ(schubert(P("312")), mono(3, {1, 1}));
  EXPECT_EQ(schubert(P("132")), mono(3, {1, 0}) + mono(3, {0, 1}));
}

TEST(Schubert, StandardConvention) {
  EXPECT_EQ(schubert_standard(P("231")), mono(3, {1, 1}));
  EXPECT_EQ(schubert_standard(P("312")), mono(3, {2, 0}));
  EXPECT_EQ(schubert_standard(P("123")), IntPolynomial::constant(3, 1));
  EXPECT_EQ(schubert_standard(P("1432")).to_string(), "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
}

TEST(Schubert, MatchesRightActionRecursion) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [w, p] : standard_family(n)) {
      EXPECT_EQ(schubert_standard(w), p) << w.to_string();
      EXPECT_EQ(schubert(inverse(w)), p) << w.to_string();
    }
  }
}

TEST(Schubert, PathIndependentAndPositive) {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = schubert_table(n);
    EXPECT_TRUE(table.recursion_conflicts().empty()) << n;
    for (int k = 0; k <= table.top_rank(); ++k) {
      for (const auto& w : table.permutations(k)) {
        const auto& p = table.polynomial(w);
        EXPECT_EQ(p, schubert(w));
        EXPECT_EQ(p.homogeneous_degree(), std::optional<int>(k));
        for (const auto& [alpha, c] : p.terms()) EXPECT_GT(c, 0) << w.to_string();
      }
    }
  }
}

TEST(Schubert, CodeIsLexSmallestExponent) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& rank : permutations_by_rank(n)) {
      for (const auto& w : rank) {
        const auto p = schubert_standard(w);
        ASSERT_FALSE(p.is_zero());
        // TermMap sorts ascending, so begin() holds the lex-smallest exponent.
        EXPECT_EQ(p.terms().begin()->first, lehmer_code(w)) << w.to_string();
        EXPECT_EQ(p.terms().begin()->second, 1);
      }
    }
  }
}

TEST(Schubert, CodeIsNotAlwaysLexLargestExponent) {
  const auto p = schubert_standard(P("132"));
  EXPECT_NE(p.terms().rbegin()->first, lehmer_code(P("132")));
}

TEST(Padding, Examples) {
  EXPECT_EQ(pad(IntPolynomial::constant(3, 1)).to_string(), "y1^2*y2");
  EXPECT_EQ(pad(mono(3, {2, 1})).to_string(), "x1^2*x2");
  EXPECT_EQ(pad(mono(3, {1, 0}) + mono(3, {0, 1})).to_string(), "x1*y1*y2 + x2*y1^2");
  const auto p = schubert(P("1432"));
  EXPECT_EQ(unpad(pad(p)), p);
}

TEST(Specialization, Examples) {
  EXPECT_EQ(principal_specialization(schubert(P("132"))), 2);
  EXPECT_EQ(principal_specialization(schubert(P("321"))), 1);
  EXPECT_EQ(principal_specialization(IntPolynomial::constant(4, 1)), 1);
}

TEST(Specialization, InverseBridge) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& rank : permutations_by_rank(n)) {
      for (const auto& w : rank) {
        EXPECT_EQ(principal_specialization(schubert(w)), principal_specialization(schubert(inverse(w))));
      }
    }
  }
}

TEST(Differential, Examples) {
  EXPECT_TRUE(apply_nabla(pad(IntPolynomial::constant(3, 1))).is_zero());
  EXPECT_TRUE(apply_delta(pad(mono(3, {2, 1}))).is_zero());
  const auto delta = apply_delta(pad(schubert(P("132"))));
  EXPECT_EQ(delta, pad(schubert(P("231"))) + pad(schubert(P("312"))) * BigInt(3));
  EXPECT_EQ(apply_delta(PaddedPolynomial::monomial(3, {1, 0})).to_string(), "x1^2*y2 + x1*x2*y1");
  EXPECT_EQ(apply_nabla(PaddedPolynomial::monomial(3, {2, 1})).to_string(), "x1^2*y2 + 2*x1*x2*y1");
  EXPECT_EQ(apply_delta(PaddedPolynomial::monomial(3, {0, 0})).to_string(), "2*x1*y1*y2 + x2*y1^2");
}

TEST(Expansion, Examples) {
  const auto& table = schubert_table(3);
  for (int k = 0; k <= 3; ++k) {
    for (const auto& w : table.permutations(k)) {
      EXPECT_EQ(expand_in_padded_schubert_basis(table.padded(w)), (BasisExpansion{{w, BigInt(1)}}));
    }
  }
  const auto nabla = apply_nabla(table.padded(P("321")));
  EXPECT_EQ(expand_in_padded_schubert_basis(nabla), (BasisExpansion{{P("231"), BigInt(1)}, {P("312"), BigInt(2)}}));
  EXPECT_TRUE(expand_in_padded_schubert_basis(PaddedPolynomial(3)).empty());
  EXPECT_THROW(expand_in_padded_schubert_basis(PaddedPolynomial::monomial(3, {1, 0}) +
                                               PaddedPolynomial::monomial(3, {0, 0})),
               std::invalid_argument);
}

TEST(Expansion, BasisChangeUnimodular) {
  for (int n = 1; n <= 5; ++n) {
    const auto& table = schubert_table(n);
    for (int k = 0; k <= table.top_rank(); ++k) {
      const auto d = determinant(table.change_of_basis(k));
      EXPECT_TRUE(d == 1 || d == -1) << n << " " << k;
      EXPECT_EQ(table.change_of_basis(k) * table.inverse_change_of_basis(k),
                IntMatrix::identity(table.monomials(k).size()));
    }
  }
}

TEST(Polynomial, JsonIsDeterministic) {
  const auto p = schubert(P("132"));
  EXPECT_EQ(p.to_json(), schubert(P("132")).to_json());
  EXPECT_NE(p.to_json().find("\"coeff\""), std::string::npos);
}
