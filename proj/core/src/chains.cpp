// SPDX-License-Identifier: Apache-2.0
#include "bruhat/chains.hpp"

#include "bruhat/parallel.hpp"
#include "bruhat/snf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bruhat {

ChainProfile::ChainProfile(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int m : lengths_) {
    if (m < 0) throw std::invalid_argument("chain lengths must be nonnegative");
  }
}

ChainProfile ChainProfile::parse(std::string_view text) {
  std::vector<int> lengths;
  while (true) {
    const auto comma = text.find(',');
    const auto piece = text.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("malformed chain profile entry: '" + std::string(piece) + "'");
    }
    lengths.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ChainProfile(std::move(lengths));
}

int ChainProfile::total() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

std::vector<std::size_t> ChainProfile::normalization_order() const {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < lengths_.size(); ++k)
    if (lengths_[k] > 0) order.push_back(k);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lengths_[a] > lengths_[b]; });
  return order;
}

ChainProfile ChainProfile::normalized() const {
  std::vector<int> sorted;
  for (std::size_t k : normalization_order()) sorted.push_back(lengths_[k]);
  return ChainProfile(std::move(sorted));
}

std::string ChainProfile::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < lengths_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(lengths_[k]);
  }
  return out;
}

namespace {

void collect(const std::vector<int>& bound, std::size_t pos, int remaining, Exponent& current,
             std::vector<Exponent>& out) {
  if (pos == bound.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  int tail = 0;
  for (std::size_t k = pos + 1; k < bound.size(); ++k) tail += bound[k];
  for (int a = std::min(bound[pos], remaining); a >= 0 && remaining - a <= tail; --a) {
    current[pos] = a;
    collect(bound, pos + 1, remaining - a, current, out);
  }
  current[pos] = 0;
}

std::map<Exponent, std::size_t> index_of(const std::vector<Exponent>& monomials) {
  std::map<Exponent, std::size_t> index;
  for (std::size_t k = 0; k < monomials.size(); ++k) index.emplace(monomials[k], k);
  return index;
}

void check_layer(const ChainProfile& m, int lo, int hi) {
  if (lo < 0 || lo > hi || hi > m.total()) throw std::out_of_range("chain ranks out of range");
}

// Single step rank k -> k + 1 of U (raising = true) or D, in layer layout.
IntMatrix chain_step(const ChainProfile& m, int k, bool raising) {
  const auto rows = chain_rank_monomials(m, k);
  const auto cols = chain_rank_monomials(m, k + 1);
  const auto col_index = index_of(cols);
  const auto& bound = m.lengths();
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < bound.size(); ++i) {
      if (rows[r][i] + 1 > bound[i]) continue;
      Exponent beta = rows[r];
      ++beta[i];
      // U: x^a -> (a_i + 1) x^(a + e_i); D: x^b -> (M_i - b_i + 1) x^(b - e_i).
      out(r, col_index.at(beta)) = raising ? rows[r][i] + 1 : bound[i] - beta[i] + 1;
    }
  }
  return out;
}

IntMatrix chain_layer(const ChainProfile& m, int lo, int hi, bool raising) {
  check_layer(m, lo, hi);
  IntMatrix out = IntMatrix::identity(chain_rank_monomials(m, lo).size());
  for (int k = lo; k < hi; ++k) out = out * chain_step(m, k, raising);
  return out;
}

// A-sets on a weakly decreasing profile that may carry trailing zeros (the
// exponent length stays fixed through the recursion).
class ABuilder {
 public:
  const std::vector<Exponent>& get(const std::vector<int>& bound, int n) {
    const auto key = std::make_pair(bound, n);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Exponent> result = compute(bound, n);
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  std::vector<Exponent> compute(const std::vector<int>& bound, int n) {
    const int total = std::accumulate(bound.begin(), bound.end(), 0);
    if (n == 0) return {Exponent(bound.size(), 0)};
    std::size_t k = 0;
    while (k < bound.size() && bound[k] > 0) ++k;
    if (k <= 1) return {};  // a single chain contributes only 1 at rank 0

    const std::size_t last = k - 1;
    const int last_len = bound[last];
    if (n < last_len) {
      // Below rank n the box is indistinguishable from one whose last chain
      // has length n.
      std::vector<int> shorter = bound;
      shorter[last] = n;
      return get(shorter, n);
    }

    std::vector<Exponent> out;
    if (2 * n < total) {
      std::vector<int> trimmed = bound;  // (M_1, ..., M_k - 1)
      --trimmed[last];
      const auto& part = get(trimmed, n);
      out.insert(out.end(), part.begin(), part.end());
    }
    std::vector<int> dropped = bound;  // (M_1, ..., M_{k-1})
    dropped[last] = 0;
    for (Exponent e : get(dropped, n - last_len)) {
      e[last] = last_len;
      out.push_back(std::move(e));
    }
    return out;
  }

  std::map<std::pair<std::vector<int>, int>, std::vector<Exponent>> memo_;
};

}  // namespace

std::vector<Exponent> chain_rank_monomials(const ChainProfile& m, int n) {
  std::vector<Exponent> out;
  if (n < 0 || n > m.total()) return out;
  Exponent current(m.size(), 0);
  collect(m.lengths(), 0, n, current, out);
  return out;
}

std::vector<BigInt> chain_rank_sizes(const ChainProfile& m) {
  // Coefficients of prod_i (1 + q + ... + q^{M_i}).
  std::vector<BigInt> coeffs{BigInt(1)};
  for (int len : m.lengths()) {
    std::vector<BigInt> next(coeffs.size() + static_cast<std::size_t>(len), BigInt(0));
    for (std::size_t d = 0; d < coeffs.size(); ++d)
      for (int e = 0; e <= len; ++e) next[d + static_cast<std::size_t>(e)] += coeffs[d];
    coeffs = std::move(next);
  }
  return coeffs;
}

IntMatrix um_layer_matrix(const ChainProfile& m, int lo, int hi) { return chain_layer(m, lo, hi, true); }
IntMatrix dm_layer_matrix(const ChainProfile& m, int lo, int hi) { return chain_layer(m, lo, hi, false); }

std::vector<Exponent> construct_A(const ChainProfile& m, int n) {
  if (n < 0 || 2 * n > m.total()) throw std::invalid_argument("A-sets need 0 <= 2n <= |M|");
  const auto order = m.normalization_order();
  std::vector<int> bound;
  for (std::size_t k : order) bound.push_back(m.lengths()[k]);
  ABuilder builder;
  std::vector<Exponent> out;
  for (const auto& e : builder.get(bound, n)) {
    Exponent relabeled(m.size(), 0);
    for (std::size_t t = 0; t < order.size(); ++t) relabeled[order[t]] = e[t];
    out.push_back(std::move(relabeled));
  }
  const auto sizes = chain_rank_sizes(m);
  const BigInt expected = sizes[static_cast<std::size_t>(n)] - (n > 0 ? sizes[static_cast<std::size_t>(n - 1)] : BigInt(0));
  if (BigInt(static_cast<unsigned long>(out.size())) != expected) {
    throw std::logic_error("A-set for M=" + m.to_string() + " at rank " + std::to_string(n) +
                           " has the wrong cardinality");
  }
  return out;
}

std::vector<std::vector<BigInt>> construct_B(const ChainProfile& m, int n) {
  const int total = m.total();
  if (n < 0 || n > total) throw std::invalid_argument("B-sets need 0 <= n <= |M|");
  const int deepest = 2 * n <= total ? n : total - n;
  std::vector<std::vector<BigInt>> out;
  for (int src = 0; src <= deepest; ++src) {
    const auto sources = chain_rank_monomials(m, src);
    const auto source_index = index_of(sources);
    const IntMatrix power = um_layer_matrix(m, src, n);
    const BigInt scale = factorial(static_cast<unsigned long>(n - src));
    for (const auto& f : construct_A(m, src)) {
      const std::size_t row = source_index.at(f);
      std::vector<BigInt> vec(power.cols());
      for (std::size_t c = 0; c < power.cols(); ++c) {
        if (power(row, c) % scale != 0) throw std::logic_error("U^k f / k! is not integral");
        vec[c] = power(row, c) / scale;
      }
      out.push_back(std::move(vec));
    }
  }
  return out;
}

bool base_change_unimodular_check(const ChainProfile& m, int n) {
  const auto vectors = construct_B(m, n);
  const std::size_t dim = chain_rank_monomials(m, n).size();
  if (vectors.size() != dim) return false;
  IntMatrix basis(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) basis(r, c) = vectors[r][c];
  const BigInt det = determinant(basis);
  return det == 1 || det == -1;
}

Report um_snf_check(const ChainProfile& m, int lo, int hi) {
  const int total = m.total();
  if (lo < 0 || lo >= hi || hi > total || lo + hi > total) {
    throw std::invalid_argument("U_M SNF check needs 0 <= lo < hi <= |M| and lo + hi <= |M|");
  }
  Report report("chains-snf", m.lengths());
  const SnfResult expected = predicted_snf_from_rank_sizes(chain_rank_sizes(m), lo, hi);
  const auto check = [&](const std::string& label, const IntMatrix& matrix) {
    const SnfResult actual = snf(matrix);
    ++report.checked;
    if (actual != expected) report.fail(label, expected.to_string(), actual.to_string());
  };
  check("U^[" + std::to_string(lo) + "," + std::to_string(hi) + "]", um_layer_matrix(m, lo, hi));
  check("D^[" + std::to_string(total - hi) + "," + std::to_string(total - lo) + "]",
        dm_layer_matrix(m, total - hi, total - lo));
  return report;
}

BigInt um_determinant_formula(const ChainProfile& m, int n, int n_prime) {
  const auto sizes = chain_rank_sizes(m);
  BigInt product = 1;
  for (int t = 0; t <= n; ++t) {
    const BigInt copies = sizes[static_cast<std::size_t>(t)] - (t > 0 ? sizes[static_cast<std::size_t>(t - 1)] : BigInt(0));
    const BigInt ratio = factorial(static_cast<unsigned long>(n_prime - t)) / factorial(static_cast<unsigned long>(n - t));
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), ratio.get_mpz_t(), copies.get_ui());
    product *= power;
  }
  return product;
}

bool um_determinant_check(const ChainProfile& m, int n, int n_prime) {
  if (n < 0 || 2 * n > m.total() || n_prime != m.total() - n) {
    throw std::invalid_argument("determinant check needs n' = |M| - n and 2n <= |M|");
  }
  const BigInt det = determinant(um_layer_matrix(m, n, n_prime));
  return abs(det) == um_determinant_formula(m, n, n_prime);
}

bool chain_transpose_check(const ChainProfile& m, int lo, int hi) {
  const int total = m.total();
  check_layer(m, lo, hi);
  const IntMatrix up = um_layer_matrix(m, lo, hi);
  const IntMatrix down = dm_layer_matrix(m, total - hi, total - lo);
  const auto lo_index = index_of(chain_rank_monomials(m, lo));
  const auto hi_index = index_of(chain_rank_monomials(m, hi));
  const auto rows = chain_rank_monomials(m, total - hi);
  const auto cols = chain_rank_monomials(m, total - lo);
  auto complement = [&](const Exponent& a) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = m.lengths()[i] - a[i];
    return out;
  };
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (down(r, c) != up(lo_index.at(complement(cols[c])), hi_index.at(complement(rows[r])))) return false;
  return true;
}

Report chains_basis_suite(const ChainProfile& m) {
  Report report("chains-basis", m.lengths());
  for (int n = 0; n <= m.total(); ++n) {
    ++report.checked;
    try {
      if (!base_change_unimodular_check(m, n)) {
        report.fail("rank " + std::to_string(n), "det = +-1", "not unimodular");
      }
    } catch (const std::logic_error& e) {
      report.fail("rank " + std::to_string(n), "integral basis", e.what());
    }
  }
  return report;
}

Report chains_snf_suite(const ChainProfile& m, int jobs) {
  const int total = m.total();
  std::vector<std::pair<int, int>> pairs;
  for (int lo = 0; lo <= total; ++lo)
    for (int hi = lo + 1; hi <= total && lo + hi <= total; ++hi) pairs.emplace_back(lo, hi);
  std::vector<Report> shards(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) { shards[k] = um_snf_check(m, pairs[k].first, pairs[k].second); });
  Report report("chains-snf", m.lengths());
  for (const auto& shard : shards) report.merge(shard);
  return report;
}

Report chains_det_suite(const ChainProfile& m) {
  Report report("chains-det", m.lengths());
  for (int n = 0; 2 * n <= m.total(); ++n) {
    const int n_prime = m.total() - n;
    ++report.checked;
    if (!um_determinant_check(m, n, n_prime)) {
      report.fail("U^[" + std::to_string(n) + "," + std::to_string(n_prime) + "]",
                  to_decimal(um_determinant_formula(m, n, n_prime)),
                  to_decimal(abs(determinant(um_layer_matrix(m, n, n_prime)))));
    }
  }
  return report;
}

Report chains_sl2_suite(const ChainProfile& m) {
  Report report("chains-sl2", m.lengths());
  const int total = m.total();
  for (int n = 0; n <= total; ++n) {
    const std::size_t size = chain_rank_monomials(m, n).size();
    // Row-vector convention: U acts as v -> v L_up, D as v -> v L_down^T.
    IntMatrix h(size, size);
    if (n >= 1) h = dm_layer_matrix(m, n - 1, n).transpose() * um_layer_matrix(m, n - 1, n);
    if (n < total) h = h - um_layer_matrix(m, n, n + 1) * dm_layer_matrix(m, n, n + 1).transpose();
    IntMatrix expected = IntMatrix::identity(size);
    for (std::size_t d = 0; d < size; ++d) expected(d, d) = 2 * n - total;
    ++report.checked;
    if (h != expected) report.fail("rank " + std::to_string(n), expected.to_json(), h.to_json());
  }
  return report;
}

}  // namespace bruhat
