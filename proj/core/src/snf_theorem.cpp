// SPDX-License-Identifier: Apache-2.0
#include "bruhat/operators.hpp"
#include "bruhat/parallel.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/schubert.hpp"
#include "bruhat/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat {

namespace {

bool valid_pair(int top, int lo, int hi) { return 0 <= lo && lo < hi && hi <= top && lo + hi <= top; }

std::string bracket(int lo, int hi) { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

}  // namespace

Report verify_snf_theorem(int n, int lo, int hi) {
  const int top = max_length(n);
  if (!valid_pair(top, lo, hi)) {
    throw std::invalid_argument("SNF comparison needs 0 <= lo < hi <= N and lo + hi <= N");
  }
  Report report("snf", n);
  const SnfResult expected = predicted_snf(n, lo, hi);
  struct Case {
    Operator op;
    int from;
    int to;
  };
  const Case cases[] = {{Operator::Delta, lo, hi},
                        {Operator::Delta, top - hi, top - lo},
                        {Operator::Nabla, lo, hi},
                        {Operator::Nabla, top - hi, top - lo}};
  for (const auto& c : cases) {
    const auto m = differential_layer_matrix({c.op, Basis::PaddedSchubert, n}, c.from, c.to);
    const SnfResult actual = snf(m);
    ++report.checked;
    if (actual != expected) {
      report.fail(std::string(to_string(c.op)) + bracket(c.from, c.to), expected.to_string(),
                  actual.to_string());
    }
  }
  report.notes.push_back(bracket(lo, hi) + " predicted " + expected.to_string());
  return report;
}

Report verify_snf_theorem_all(int n, int jobs) {
  const int top = max_length(n);
  std::vector<std::pair<int, int>> pairs;
  for (int lo = 0; lo <= top; ++lo)
    for (int hi = lo + 1; hi <= top; ++hi)
      if (valid_pair(top, lo, hi)) pairs.emplace_back(lo, hi);

  schubert_table(n);
  std::vector<Report> shards(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    shards[k] = verify_snf_theorem(n, pairs[k].first, pairs[k].second);
  });
  Report report("snf", n);
  for (const auto& shard : shards) report.merge(shard);
  return report;
}

std::vector<std::pair<int, int>> snf_sample_pairs(int n) {
  const int top = max_length(n);
  const int half = top / 2;
  const std::pair<int, int> candidates[] = {{0, 1},        {0, top},      {1, 2},
                                            {1, top - 1},  {2, top - 2},  {half - 1, half},
                                            {half - 1, half + 1}};
  std::vector<std::pair<int, int>> out;
  for (const auto& p : candidates) {
    if (valid_pair(top, p.first, p.second) && std::find(out.begin(), out.end(), p) == out.end()) {
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bruhat
