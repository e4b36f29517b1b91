// SPDX-License-Identifier: Apache-2.0
#include "bruhat/schubert.hpp"

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <stdexcept>

namespace bruhat {

namespace {

IntPolynomial top_schubert(int n) { return IntPolynomial::monomial(n, staircase(n)); }

// Position of each value in w, 1-based values mapped to 0-based positions.
std::vector<int> positions(const Permutation& w) {
  std::vector<int> pos(static_cast<std::size_t>(w.size()) + 1, 0);
  for (int p = 1; p <= w.size(); ++p) pos[static_cast<std::size_t>(w.at(p))] = p;
  return pos;
}

// s_i w < w exactly when the value i + 1 sits to the left of i.
bool left_descent(const std::vector<int>& pos, int i) {
  return pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)];
}

IntMatrix integer_inverse(const IntMatrix& m) {
  const std::size_t size = m.rows();
  std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(2 * size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) a[r][c] = mpq_class(m(r, c));
    a[r][size + r] = 1;
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) throw std::logic_error("Schubert change of basis is singular");
    std::swap(a[pivot], a[col]);
    const mpq_class inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class factor = a[r][col];
      for (std::size_t c = 0; c < 2 * size; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  IntMatrix out(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const mpq_class& v = a[r][size + c];
      if (v.get_den() != 1) throw std::logic_error("Schubert change of basis is not unimodular");
      out(r, c) = v.get_num();
    }
  }
  return out;
}

}  // namespace

IntPolynomial schubert(const Permutation& w) {
  const int n = w.size();
  std::vector<int> climb;
  Permutation v = w;
  const Permutation top = longest_element(n);
  while (v != top) {
    const auto pos = positions(v);
    int i = 1;
    while (left_descent(pos, i)) ++i;
    climb.push_back(i);
    v = left_multiply_simple(v, i);
  }
  IntPolynomial p = top_schubert(n);
  for (auto it = climb.rbegin(); it != climb.rend(); ++it) p = divided_difference(*it, p);
  return p;
}

IntPolynomial schubert_standard(const Permutation& w) { return schubert(inverse(w)); }

SchubertTable::SchubertTable(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  ranks_ = permutations_by_rank(n);
  for (const auto& level : ranks_) {
    for (std::size_t k = 0; k < level.size(); ++k) rank_index_.emplace(level[k], k);
  }

  polys_.emplace(longest_element(n), top_schubert(n));
  for (int k = top_rank(); k >= 1; --k) {
    for (const auto& w : ranks_[static_cast<std::size_t>(k)]) {
      const IntPolynomial& current = polys_.at(w);
      const auto pos = positions(w);
      for (int i = 1; i < n; ++i) {
        if (!left_descent(pos, i)) continue;
        ++steps_;
        const Permutation lower = left_multiply_simple(w, i);
        IntPolynomial candidate = divided_difference(i, current);
        auto [it, inserted] = polys_.try_emplace(lower, candidate);
        if (!inserted && it->second != candidate) {
          conflicts_.push_back("S_" + lower.to_string() + " via N_" + std::to_string(i) +
                               " from " + w.to_string() + " gives " + candidate.to_string() +
                               ", earlier path gave " + it->second.to_string());
        }
      }
    }
  }

  monomials_.resize(ranks_.size());
  basis_.resize(ranks_.size());
  inverse_.resize(ranks_.size());
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    monomials_[k] = staircase_monomials(n, static_cast<int>(k));
    for (std::size_t m = 0; m < monomials_[k].size(); ++m) monomial_index_.emplace(monomials_[k][m], m);
    if (monomials_[k].size() != ranks_[k].size()) {
      throw std::logic_error("staircase monomial count differs from rank size");
    }
    IntMatrix basis(ranks_[k].size(), monomials_[k].size());
    for (std::size_t r = 0; r < ranks_[k].size(); ++r) {
      for (const auto& [alpha, c] : polys_.at(ranks_[k][r]).terms()) {
        basis(r, monomial_index_.at(alpha)) = c;
      }
    }
    inverse_[k] = integer_inverse(basis);
    basis_[k] = std::move(basis);
  }
}

const IntPolynomial& SchubertTable::polynomial(const Permutation& w) const {
  const auto it = polys_.find(w);
  if (it == polys_.end()) throw std::invalid_argument(w.to_string() + " is not in this table");
  return it->second;
}

const std::vector<Permutation>& SchubertTable::permutations(int k) const {
  if (k < 0 || k > top_rank()) throw std::out_of_range("rank out of range");
  return ranks_[static_cast<std::size_t>(k)];
}

std::size_t SchubertTable::index_in_rank(const Permutation& w) const { return rank_index_.at(w); }

const std::vector<Exponent>& SchubertTable::monomials(int k) const {
  if (k < 0 || k > top_rank()) throw std::out_of_range("rank out of range");
  return monomials_[static_cast<std::size_t>(k)];
}

std::size_t SchubertTable::monomial_index(const Exponent& alpha) const { return monomial_index_.at(alpha); }

const IntMatrix& SchubertTable::change_of_basis(int k) const {
  if (k < 0 || k > top_rank()) throw std::out_of_range("rank out of range");
  return basis_[static_cast<std::size_t>(k)];
}

const IntMatrix& SchubertTable::inverse_change_of_basis(int k) const {
  if (k < 0 || k > top_rank()) throw std::out_of_range("rank out of range");
  return inverse_[static_cast<std::size_t>(k)];
}

std::vector<BigInt> SchubertTable::monomial_coordinates(const PaddedPolynomial& p, int k) const {
  const auto& basis = monomials(k);
  std::vector<BigInt> coords(basis.size(), BigInt(0));
  for (const auto& [alpha, c] : p.terms()) {
    int degree = 0;
    for (int a : alpha) degree += a;
    if (degree != k) throw std::invalid_argument("polynomial is not homogeneous of rank " + std::to_string(k));
    coords[monomial_index_.at(alpha)] = c;
  }
  return coords;
}

std::vector<BigInt> SchubertTable::schubert_coordinates(const PaddedPolynomial& p, int k) const {
  const auto coords = monomial_coordinates(p, k);
  const IntMatrix& inv = inverse_change_of_basis(k);
  std::vector<BigInt> out(coords.size(), BigInt(0));
  for (std::size_t m = 0; m < coords.size(); ++m) {
    if (coords[m] == 0) continue;
    for (std::size_t w = 0; w < out.size(); ++w) out[w] += coords[m] * inv(m, w);
  }
  return out;
}

BasisExpansion SchubertTable::expand(const PaddedPolynomial& p) const {
  if (p.n() != n_) throw std::invalid_argument("polynomial lives over a different n");
  BasisExpansion out;
  if (p.is_zero()) return out;
  const auto degree = p.homogeneous_degree();
  if (!degree) throw std::invalid_argument("expansion needs a homogeneous polynomial");
  const auto coords = schubert_coordinates(p, *degree);
  const auto& perms = permutations(*degree);
  for (std::size_t w = 0; w < coords.size(); ++w) {
    if (coords[w] != 0) out.emplace(perms[w], coords[w]);
  }
  return out;
}

const SchubertTable& schubert_table(int n) {
  static std::mutex guard;
  static std::map<int, std::unique_ptr<SchubertTable>> tables;
  std::lock_guard lock(guard);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<SchubertTable>(n);
  return *slot;
}

BasisExpansion expand_in_padded_schubert_basis(const PaddedPolynomial& p) {
  return schubert_table(p.n()).expand(p);
}

}  // namespace bruhat
