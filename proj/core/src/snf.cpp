// SPDX-License-Identifier: Apache-2.0
#include "bruhat/snf.hpp"

#include "bruhat/permutation.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bruhat {

std::string SnfResult::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < invariants.size(); ++k) {
    if (k > 0) out += ',';
    out += to_decimal(invariants[k]);
  }
  return out + ")";
}

std::string SnfResult::to_json() const {
  nlohmann::json doc;
  doc["invariants"] = nlohmann::json::array();
  for (const auto& b : invariants) doc["invariants"].push_back(to_decimal(b));
  return doc.dump();
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

// Smallest nonzero |a(i, j)| with i, j >= t; false if that block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      BigInt mag = abs(a(r, c));
      if (!found || mag < best) {
        best = std::move(mag);
        pr = r;
        pc = c;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

void enforce_divisibility_chain(std::vector<BigInt>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] != 0 && d[j] % d[i] == 0) continue;
      BigInt g = gcd(d[i], d[j]);
      BigInt l = lcm(d[i], d[j]);
      d[i] = std::move(g);
      d[j] = std::move(l);
    }
  }
}

}  // namespace

SnfResult snf(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t size = std::min(a.rows(), a.cols());
  std::vector<BigInt> diag(size, BigInt(0));
  BigInt q;
  for (std::size_t t = 0; t < size; ++t) {
    std::size_t pr = t;
    std::size_t pc = t;
    // Remaining block is zero, so the remaining invariants are too.
    if (!find_pivot(a, t, pr, pc)) break;
    bool cleared = false;
    while (!cleared) {
      if (!find_pivot(a, t, pr, pc)) throw std::logic_error("pivot vanished during elimination");
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);
      cleared = true;
      const BigInt pivot = a(t, t);
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t c = t; c < a.cols(); ++c) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) cleared = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t r = t; r < a.rows(); ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) cleared = false;
      }
    }
    diag[t] = abs(a(t, t));
  }
  enforce_divisibility_chain(diag);
  return {std::move(diag)};
}

namespace {

// Calls fn(subset) for every k-subset of {0..n-1} in lex order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SnfResult snf_via_minor_gcd(const IntMatrix& a) {
  const std::size_t size = std::min(a.rows(), a.cols());
  if (size > kMinorGcdMaxSize) {
    throw std::invalid_argument("minor-gcd SNF limited to min dimension " +
                                std::to_string(kMinorGcdMaxSize));
  }
  std::vector<BigInt> out;
  out.reserve(size);
  BigInt prev = 1;
  for (std::size_t k = 1; k <= size; ++k) {
    BigInt divisor = 0;
    IntMatrix minor(k, k);
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (divisor == 1) return;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) minor(r, c) = a(rows[r], cols[c]);
        divisor = gcd(divisor, determinant(minor));
      });
    });
    if (divisor == 0) {
      out.resize(size, BigInt(0));
      break;
    }
    out.push_back(divisor / prev);
    prev = divisor;
  }
  return {std::move(out)};
}

std::vector<BigInt> rank_sizes(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<BigInt> coeffs{BigInt(1)};
  for (int m = 2; m <= n; ++m) {
    // multiply by 1 + q + ... + q^(m-1)
    std::vector<BigInt> next(coeffs.size() + static_cast<std::size_t>(m - 1), BigInt(0));
    for (std::size_t d = 0; d < coeffs.size(); ++d)
      for (int e = 0; e < m; ++e) next[d + static_cast<std::size_t>(e)] += coeffs[d];
    coeffs = std::move(next);
  }
  return coeffs;
}

BigInt rank_size(int n, int k) {
  if (k < 0 || k > max_length(n)) throw std::out_of_range("rank out of range");
  return rank_sizes(n)[static_cast<std::size_t>(k)];
}

SnfResult predicted_snf_from_rank_sizes(const std::vector<BigInt>& sizes, int lo, int hi) {
  const int top = static_cast<int>(sizes.size()) - 1;
  if (lo < 0 || lo >= hi || hi > top || lo + hi > top) {
    throw std::invalid_argument("predicted SNF requires 0 <= lo < hi <= top and lo + hi <= top");
  }
  std::vector<BigInt> entries;
  for (int i = 0; i <= lo; ++i) {
    const BigInt below = i == 0 ? BigInt(0) : sizes[static_cast<std::size_t>(i - 1)];
    const BigInt copies = sizes[static_cast<std::size_t>(i)] - below;
    if (copies < 0) throw std::logic_error("rank sizes are not unimodal below lo");
    const BigInt value = binomial(hi - i, lo - i);
    for (BigInt c = 0; c < copies; ++c) entries.push_back(value);
  }
  SnfResult out = snf(IntMatrix::diagonal(entries));
  const BigInt scale = factorial(static_cast<unsigned long>(hi - lo));
  for (auto& b : out.invariants) b *= scale;
  return out;
}

SnfResult predicted_snf(int n, int lo, int hi) {
  return predicted_snf_from_rank_sizes(rank_sizes(n), lo, hi);
}

}  // namespace bruhat
