// SPDX-License-Identifier: Apache-2.0
#include "bruhat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace bruhat {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    while (true) {
      const auto comma = text.find(',');
      const auto piece = text.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
      if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
        throw std::invalid_argument("malformed permutation entry: '" + std::string(piece) + "'");
      }
      word.push_back(v);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    if (text.empty()) throw std::invalid_argument("empty permutation");
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("malformed permutation digit: '" + std::string(1, c) + "'");
      }
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += std::to_string(word_[k]);
  }
  return out;
}

int max_length(int n) { return n * (n - 1) / 2; }

int length(const Permutation& w) {
  const auto& a = w.word();
  int inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return inv;
}

Composition lehmer_code(const Permutation& w) {
  const auto& a = w.word();
  const int n = w.size();
  Composition code(n > 0 ? static_cast<std::size_t>(n - 1) : 0, 0);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(i)]) ++code[static_cast<std::size_t>(i)];
  return code;
}

Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.word().size());
  for (int pos = 1; pos <= w.size(); ++pos) inv[static_cast<std::size_t>(w.at(pos) - 1)] = pos;
  return Permutation(std::move(inv));
}

Permutation right_multiply_transposition(const Permutation& w, int i, int j) {
  if (i < 1 || j > w.size() || i >= j) {
    throw std::out_of_range("transposition positions must satisfy 1 <= i < j <= n");
  }
  auto word = w.word();
  std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(word));
}

Permutation left_multiply_simple(const Permutation& w, int i) {
  if (i < 1 || i >= w.size()) throw std::out_of_range("simple index out of range");
  auto word = w.word();
  for (int& v : word) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return Permutation(std::move(word));
}

Permutation left_multiply_longest(const Permutation& w) {
  auto word = w.word();
  for (int& v : word) v = w.size() + 1 - v;
  return Permutation(std::move(word));
}

bool is_weak_cover(const Permutation& w, int i) {
  return i >= 1 && i < w.size() && w.at(i) < w.at(i + 1);
}

bool is_strong_cover(const Permutation& w, int i, int j) {
  if (i < 1 || j > w.size() || i >= j) return false;
  const int lo = w.at(i);
  const int hi = w.at(j);
  if (lo > hi) return false;
  for (int k = i + 1; k < j; ++k) {
    if (w.at(k) > lo && w.at(k) < hi) return false;
  }
  return true;
}

std::vector<WeakCover> weak_covers_up(const Permutation& w) {
  std::vector<WeakCover> out;
  for (int i = 1; i < w.size(); ++i) {
    if (is_weak_cover(w, i)) out.push_back({right_multiply_transposition(w, i, i + 1), i});
  }
  return out;
}

std::vector<StrongCover> strong_covers_up(const Permutation& w) {
  std::vector<StrongCover> out;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (is_strong_cover(w, i, j)) out.push_back({right_multiply_transposition(w, i, j), i, j});
    }
  }
  return out;
}

Permutation longest_element(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) word[static_cast<std::size_t>(k)] = n - k;
  return Permutation(std::move(word));
}

std::vector<std::vector<Permutation>> permutations_by_rank(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<std::vector<Permutation>> ranks(static_cast<std::size_t>(max_length(n)) + 1);
  auto word = Permutation::identity(n).word();
  // next_permutation walks S_n in lex order, so each bucket comes out sorted.
  do {
    Permutation w(word);
    ranks[static_cast<std::size_t>(length(w))].push_back(std::move(w));
  } while (std::next_permutation(word.begin(), word.end()));
  return ranks;
}

std::vector<Permutation> permutations_of_rank(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k < 0 || k > max_length(n)) throw std::out_of_range("rank out of range");
  return permutations_by_rank(n)[static_cast<std::size_t>(k)];
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.word()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace bruhat
