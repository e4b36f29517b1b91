// SPDX-License-Identifier: Apache-2.0
//
// Sparse integer polynomials in x_1..x_{n-1} whose exponent vectors stay
// under the staircase rho = (n-1, ..., 1), and their padded counterparts
// x^a y^(rho - a).
#pragma once

#include "bruhat/bigint.hpp"
#include "bruhat/permutation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bruhat {

using Exponent = Composition;

/// (n-1, n-2, ..., 1).
Exponent staircase(int n);

/// True iff alpha has length n-1 and 0 <= alpha_i <= n - i.
bool under_staircase(const Exponent& alpha, int n);

/// All alpha under the staircase with |alpha| = k, in decreasing lex order
/// (x_1 before x_2). There are exactly rank_size(n, k) of them.
std::vector<Exponent> staircase_monomials(int n, int k);

/// Terms keyed by exponent vector in lex order; zero coefficients are never
/// stored.
using TermMap = std::map<Exponent, BigInt>;

class IntPolynomial {
 public:
  explicit IntPolynomial(int n = 1) : n_(n) {}

  static IntPolynomial constant(int n, const BigInt& c);
  static IntPolynomial monomial(int n, const Exponent& alpha, const BigInt& c = 1);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c x^alpha. Throws std::invalid_argument if alpha leaves the
  /// staircase.
  void add_term(const Exponent& alpha, const BigInt& c);

  /// Common degree of all terms; nullopt for zero or non-homogeneous input.
  std::optional<int> homogeneous_degree() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "x1^2*x2 + 3*x1", terms in decreasing lex order; "0" for zero.
  std::string to_string() const;

  /// {"terms": [{"alpha": [..], "coeff": ".."}, ...]}
  std::string to_json() const;

 private:
  int n_;
  TermMap terms_;
};

/// An element of span{x^a y^(rho - a)}. Only alpha is stored; the
/// y-exponent is always rho - alpha.
class PaddedPolynomial {
 public:
  explicit PaddedPolynomial(int n = 1) : n_(n) {}

  static PaddedPolynomial monomial(int n, const Exponent& alpha, const BigInt& c = 1);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& alpha, const BigInt& c);

  /// Common x-degree |alpha| of all terms.
  std::optional<int> homogeneous_degree() const;

  PaddedPolynomial& operator+=(const PaddedPolynomial& other);
  PaddedPolynomial& operator*=(const BigInt& scalar);
  friend PaddedPolynomial operator+(PaddedPolynomial a, const PaddedPolynomial& b) { return a += b; }
  friend PaddedPolynomial operator*(PaddedPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const PaddedPolynomial&, const PaddedPolynomial&) = default;

  /// "x1*y1*y2 + x2*y1^2"
  std::string to_string() const;
  std::string to_json() const;

 private:
  int n_;
  TermMap terms_;
};

PaddedPolynomial pad(const IntPolynomial& p);
IntPolynomial unpad(const PaddedPolynomial& p);

/// Evaluation at x_1 = ... = x_{n-1} = 1.
BigInt principal_specialization(const IntPolynomial& p);

/// sum_i y_i d/dx_i: moves alpha to alpha - e_i with factor alpha_i.
PaddedPolynomial apply_nabla(const PaddedPolynomial& p);

/// sum_i x_i d/dy_i: moves alpha to alpha + e_i with factor rho_i - alpha_i.
PaddedPolynomial apply_delta(const PaddedPolynomial& p);

/// (p - s_i p) / (x_i - x_{i+1}) for 1 <= i <= n-1, computed by synthetic
/// division with a mandatory zero remainder. x_n is present only
/// transiently. Throws std::out_of_range for a bad index and
/// std::logic_error if the division is not exact or x_n survives.
IntPolynomial divided_difference(int i, const IntPolynomial& p);

}  // namespace bruhat
