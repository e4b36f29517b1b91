// SPDX-License-Identifier: Apache-2.0
#include "bruhat/operators.hpp"

#include "bruhat/hasse.hpp"
#include "bruhat/parallel.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/polynomial.hpp"
#include "bruhat/schubert.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace bruhat {

std::string_view to_string(Operator op) { return op == Operator::Nabla ? "nabla" : "delta"; }
std::string_view to_string(Basis basis) {
  return basis == Basis::Monomial ? "monomial" : "padded-schubert";
}

namespace {

// Basis elements and coordinates for one rank of one basis.
class RankBasis {
 public:
  RankBasis(Basis basis, int n) : basis_(basis), n_(n) {
    if (basis_ == Basis::PaddedSchubert) table_ = &schubert_table(n);
  }

  std::size_t size(int k) const {
    return table_ ? table_->permutations(k).size() : monomials(k).size();
  }

  PaddedPolynomial element(int k, std::size_t index) const {
    if (table_) return table_->padded(table_->permutations(k)[index]);
    return PaddedPolynomial::monomial(n_, monomials(k)[index]);
  }

  std::vector<BigInt> coordinates(const PaddedPolynomial& p, int k) const {
    if (table_) return table_->schubert_coordinates(p, k);
    const auto& basis = monomials(k);
    std::vector<BigInt> out(basis.size(), BigInt(0));
    for (const auto& [alpha, c] : p.terms()) {
      const auto it = index_.at(k).find(alpha);
      if (it == index_.at(k).end()) throw std::invalid_argument("term outside rank " + std::to_string(k));
      out[it->second] = c;
    }
    return out;
  }

 private:
  const std::vector<Exponent>& monomials(int k) const {
    auto it = monomials_.find(k);
    if (it == monomials_.end()) {
      it = monomials_.emplace(k, staircase_monomials(n_, k)).first;
      auto& index = index_[k];
      for (std::size_t m = 0; m < it->second.size(); ++m) index.emplace(it->second[m], m);
    }
    return it->second;
  }

  Basis basis_;
  int n_;
  const SchubertTable* table_ = nullptr;
  mutable std::map<int, std::vector<Exponent>> monomials_;
  mutable std::map<int, std::map<Exponent, std::size_t>> index_;
};

void check_ranks(int n, int lo, int hi) {
  if (n < 1 || lo < 0 || hi > max_length(n) || lo > hi) {
    throw std::out_of_range("operator ranks out of range");
  }
}

PaddedPolynomial apply_power(Operator op, PaddedPolynomial p, int times) {
  for (int t = 0; t < times; ++t) p = op == Operator::Delta ? apply_delta(p) : apply_nabla(p);
  return p;
}

std::string render_expansion(const std::map<Permutation, BigInt>& terms) {
  std::string out = "{";
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) out += ", ";
    first = false;
    out += w.to_string() + ":" + to_decimal(c);
  }
  return out + "}";
}

}  // namespace

IntMatrix differential_layer_matrix(const OperatorSpec& spec, int lo, int hi) {
  check_ranks(spec.n, lo, hi);
  const RankBasis basis(spec.basis, spec.n);
  IntMatrix out(basis.size(lo), basis.size(hi));
  if (spec.op == Operator::Delta) {
    for (std::size_t r = 0; r < out.rows(); ++r) {
      const auto image = apply_power(Operator::Delta, basis.element(lo, r), hi - lo);
      const auto coords = basis.coordinates(image, hi);
      for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = coords[c];
    }
  } else {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      const auto image = apply_power(Operator::Nabla, basis.element(hi, c), hi - lo);
      const auto coords = basis.coordinates(image, lo);
      for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = coords[r];
    }
  }
  return out;
}

IntMatrix stepwise_layer_matrix(const OperatorSpec& spec, int lo, int hi) {
  check_ranks(spec.n, lo, hi);
  IntMatrix out = IntMatrix::identity(RankBasis(spec.basis, spec.n).size(lo));
  for (int k = lo; k < hi; ++k) out = out * differential_layer_matrix(spec, k, k + 1);
  return out;
}

Report verify_delta_theorem(int n, int jobs) {
  Report report("delta-action", n);
  const auto& table = schubert_table(n);
  const auto g = HasseDiagram::build(n, Order::Strong, WeightSystem::Code);
  std::vector<Report> shards(g.vertex_count());
  parallel_for(g.vertex_count(), jobs, [&](std::size_t v) {
    const Permutation& w = g.vertex(static_cast<int>(v));
    std::map<Permutation, BigInt> expected;
    for (int e : g.out_edges(static_cast<int>(v))) {
      const auto& edge = g.edges()[static_cast<std::size_t>(e)];
      expected.emplace(g.vertex(edge.target), edge.weight);
    }
    const auto actual = table.expand(apply_delta(table.padded(w)));
    Report& shard = shards[v];
    shard.checked = expected.size();
    if (actual != expected) {
      shard.fail("Delta S~_" + w.to_string(), render_expansion(expected), render_expansion(actual));
    }
    for (const auto& [target, c] : actual) {
      if (c < 0 || c % 2 == 0) {
        shard.fail("Delta S~_" + w.to_string() + " coefficient at " + target.to_string(),
                   "odd positive", to_decimal(c));
      }
    }
  });
  for (const auto& shard : shards) report.merge(shard);
  return report;
}

Report verify_nabla_theorem(int n, int jobs) {
  Report report("nabla-action", n);
  const auto& table = schubert_table(n);
  const auto g = HasseDiagram::build(n, Order::Weak, WeightSystem::NablaIndex);
  std::vector<Report> shards(g.vertex_count());
  std::vector<std::size_t> non_unit(g.vertex_count(), 0);
  parallel_for(g.vertex_count(), jobs, [&](std::size_t v) {
    const Permutation& w = g.vertex(static_cast<int>(v));
    std::map<Permutation, BigInt> expected;
    for (int e : g.in_edges(static_cast<int>(v))) {
      const auto& edge = g.edges()[static_cast<std::size_t>(e)];
      expected.emplace(g.vertex(edge.source), edge.weight);
      if (edge.weight != 1) ++non_unit[v];
    }
    const auto actual = table.expand(apply_nabla(table.padded(w)));
    shards[v].checked = expected.size();
    if (actual != expected) {
      shards[v].fail("Nabla S~_" + w.to_string(), render_expansion(expected), render_expansion(actual));
    }
  });
  std::size_t disagreements = 0;
  for (std::size_t v = 0; v < shards.size(); ++v) {
    report.merge(shards[v]);
    disagreements += non_unit[v];
  }
  report.notes.push_back("weight convention: coefficient i on the cover w s_i < w");
  report.notes.push_back("coefficient-free reading contradicted on " + std::to_string(disagreements) +
                         " of " + std::to_string(report.checked) + " covers");
  return report;
}

namespace {

// Rank-k block of [Delta, Nabla] from single-step layer matrices in the
// row-vector convention: Delta acts as v -> v L_up, Nabla as v -> v L_down^T.
IntMatrix commutator_block(const std::vector<IntMatrix>& delta, const std::vector<IntMatrix>& nabla,
                           std::size_t size, int k, int top) {
  IntMatrix h(size, size);
  if (k >= 1) h = nabla[static_cast<std::size_t>(k - 1)].transpose() * delta[static_cast<std::size_t>(k - 1)];
  if (k < top) h = h - delta[static_cast<std::size_t>(k)] * nabla[static_cast<std::size_t>(k)].transpose();
  return h;
}

void check_commutator(Report& report, const std::string& route, int n,
                      const std::vector<IntMatrix>& delta, const std::vector<IntMatrix>& nabla,
                      const std::vector<std::size_t>& sizes) {
  const int top = max_length(n);
  for (int k = 0; k <= top; ++k) {
    const std::size_t size = sizes[static_cast<std::size_t>(k)];
    const IntMatrix h = commutator_block(delta, nabla, size, k, top);
    IntMatrix expected = IntMatrix::identity(size);
    for (std::size_t d = 0; d < size; ++d) expected(d, d) = 2 * k - top;
    ++report.checked;
    if (h != expected) {
      report.fail(route + " rank " + std::to_string(k), expected.to_json(), h.to_json());
    }
  }
}

}  // namespace

Report commutator_report(int n) {
  Report report("sl2", n);
  const int top = max_length(n);
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= top; ++k) sizes.push_back(staircase_monomials(n, k).size());

  for (Basis basis : {Basis::PaddedSchubert, Basis::Monomial}) {
    std::vector<IntMatrix> delta;
    std::vector<IntMatrix> nabla;
    for (int k = 0; k < top; ++k) {
      delta.push_back(differential_layer_matrix({Operator::Delta, basis, n}, k, k + 1));
      nabla.push_back(differential_layer_matrix({Operator::Nabla, basis, n}, k, k + 1));
    }
    check_commutator(report, std::string(to_string(basis)), n, delta, nabla, sizes);
  }

  const auto strong = HasseDiagram::build(n, Order::Strong, WeightSystem::Code);
  const auto weak = HasseDiagram::build(n, Order::Weak, WeightSystem::NablaIndex);
  std::vector<IntMatrix> delta;
  std::vector<IntMatrix> nabla;
  for (int k = 0; k < top; ++k) {
    delta.push_back(layer_matrix(strong, k, k + 1));
    nabla.push_back(layer_matrix(weak, k, k + 1));
  }
  check_commutator(report, "graph", n, delta, nabla, sizes);
  return report;
}

bool commutator_check(int n) { return commutator_report(n).ok(); }

namespace {

// value / divisor, recording a failure when the division is inexact.
BigInt exact_quotient(Report& shard, const std::string& witness, const BigInt& value,
                      const BigInt& divisor) {
  if (value % divisor != 0) {
    shard.fail(witness, "divisible by " + to_decimal(divisor), to_decimal(value));
  }
  return value / divisor;
}

}  // namespace

Report verify_path_identities(int n, int jobs) {
  Report report("path-identities", n);
  const auto& table = schubert_table(n);
  const auto strong = HasseDiagram::build(n, Order::Strong, WeightSystem::Code);
  const auto weak = HasseDiagram::build(n, Order::Weak, WeightSystem::NablaIndex);
  const Permutation e = Permutation::identity(n);
  const Permutation w0 = longest_element(n);
  const auto delta_from_e = path_counts_from(strong, e);
  const auto delta_to_top = path_counts_to(strong, w0);
  const auto nabla_from_e = path_counts_from(weak, e);
  const auto nabla_to_top = path_counts_to(weak, w0);
  const int top = max_length(n);

  std::vector<Report> shards(strong.vertex_count());
  parallel_for(strong.vertex_count(), jobs, [&](std::size_t v) {
    const Permutation& u = strong.vertex(static_cast<int>(v));
    const int l = length(u);
    const BigInt up = factorial(static_cast<unsigned long>(top - l));
    const BigInt down = factorial(static_cast<unsigned long>(l));
    const auto mirror = static_cast<std::size_t>(strong.id(left_multiply_longest(u)));
    const auto weak_u = static_cast<std::size_t>(weak.id(u));
    const auto weak_mirror = static_cast<std::size_t>(weak.id(left_multiply_longest(u)));
    Report& shard = shards[v];
    const std::string tag = "u=" + u.to_string() + " ";
    const BigInt target = principal_specialization(table.polynomial(u));
    const BigInt values[] = {
        exact_quotient(shard, tag + "m_Delta(u,w0)", delta_to_top[v], up),
        exact_quotient(shard, tag + "m_Nabla(e,u)", nabla_from_e[weak_u], down),
        target,
        exact_quotient(shard, tag + "m_Delta(e,w0u)", delta_from_e[mirror], up),
        exact_quotient(shard, tag + "m_Nabla(w0u,w0)", nabla_to_top[weak_mirror], down),
    };
    const char* names[] = {"m_Delta(u,w0)/(N-l)!", "m_Nabla(e,u)/l!", "S_u(1,...,1)",
                           "m_Delta(e,w0u)/(N-l)!", "m_Nabla(w0u,w0)/l!"};
    for (std::size_t k = 0; k < 5; ++k) {
      ++shard.checked;
      if (values[k] != target) shard.fail(tag + names[k], to_decimal(target), to_decimal(values[k]));
    }
  });
  for (const auto& shard : shards) report.merge(shard);
  report.notes.push_back(std::to_string(strong.vertex_count()) + " permutations x 5 expressions");
  return report;
}

Report verify_macdonald(int n, int jobs) {
  Report report("macdonald", n);
  const auto& table = schubert_table(n);
  const auto weak = HasseDiagram::build(n, Order::Weak, WeightSystem::NablaIndex);
  const auto counts = path_counts_from(weak, Permutation::identity(n));
  std::vector<Report> shards(weak.vertex_count());
  parallel_for(weak.vertex_count(), jobs, [&](std::size_t v) {
    const Permutation& u = weak.vertex(static_cast<int>(v));
    const BigInt expected = factorial(static_cast<unsigned long>(length(u))) *
                            principal_specialization(table.polynomial(u));
    shards[v].checked = 1;
    if (counts[v] != expected) {
      shards[v].fail("u=" + u.to_string(), to_decimal(expected), to_decimal(counts[v]));
    }
  });
  for (const auto& shard : shards) report.merge(shard);
  return report;
}

Report verify_top_path_counts(int n) {
  Report report("top-path-counts", n);
  const BigInt expected = factorial(static_cast<unsigned long>(max_length(n)));
  const std::pair<Order, WeightSystem> systems[] = {{Order::Weak, WeightSystem::NablaIndex},
                                                    {Order::Strong, WeightSystem::Code},
                                                    {Order::Strong, WeightSystem::Chevalley}};
  for (const auto& [order, weights] : systems) {
    const auto g = HasseDiagram::build(n, order, weights);
    const BigInt m = weighted_path_count(g, Permutation::identity(n), longest_element(n));
    ++report.checked;
    if (m != expected) {
      report.fail(std::string("m_") + std::string(to_string(weights)) + "(e,w0)", to_decimal(expected),
                  to_decimal(m));
    }
  }
  return report;
}

Report verify_w0_symmetry(int n) {
  Report report("w0-symmetry", n);
  const std::pair<Order, WeightSystem> systems[] = {{Order::Weak, WeightSystem::NablaIndex},
                                                    {Order::Strong, WeightSystem::Code},
                                                    {Order::Strong, WeightSystem::Chevalley}};
  for (const auto& [order, weights] : systems) {
    const auto g = HasseDiagram::build(n, order, weights);
    const auto result = w0_symmetry_check(g);
    report.checked += result.edges_checked;
    if (!result.holds) {
      report.fail(std::string(to_string(weights)) + " weights", "mirror edge with equal weight",
                  *result.counterexample);
    }
  }
  return report;
}

Report verify_graph_agreement(int n) {
  Report report("graph-agreement", n);
  const auto strong = HasseDiagram::build(n, Order::Strong, WeightSystem::Code);
  const auto weak = HasseDiagram::build(n, Order::Weak, WeightSystem::NablaIndex);
  const int top = max_length(n);
  for (int lo = 0; lo <= top; ++lo) {
    for (int hi = lo; hi <= top; ++hi) {
      const std::string range = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
      const auto delta = differential_layer_matrix({Operator::Delta, Basis::PaddedSchubert, n}, lo, hi);
      const auto nabla = differential_layer_matrix({Operator::Nabla, Basis::PaddedSchubert, n}, lo, hi);
      const auto strong_layer = layer_matrix(strong, lo, hi);
      const auto weak_layer = layer_matrix(weak, lo, hi);
      report.checked += 2;
      if (delta != strong_layer) report.fail("Delta" + range, strong_layer.to_json(), delta.to_json());
      if (nabla != weak_layer) report.fail("Nabla" + range, weak_layer.to_json(), nabla.to_json());
    }
  }
  return report;
}

Report verify_extremal_powers(int n) {
  Report report("extremal-powers", n);
  const int top = max_length(n);
  const Exponent rho = staircase(n);
  const Exponent zero(rho.size(), 0);
  for (int k = 0; k <= top; ++k) {
    for (const auto& alpha : staircase_monomials(n, k)) {
      const auto start = PaddedPolynomial::monomial(n, alpha);
      const auto down = apply_power(Operator::Nabla, start, k);
      const auto up = apply_power(Operator::Delta, start, top - k);
      const auto down_expected = PaddedPolynomial::monomial(n, zero, factorial(static_cast<unsigned long>(k)));
      const auto up_expected = PaddedPolynomial::monomial(n, rho, factorial(static_cast<unsigned long>(top - k)));
      report.checked += 2;
      if (down != down_expected) report.fail("Nabla^|a| " + start.to_string(), down_expected.to_string(), down.to_string());
      if (up != up_expected) report.fail("Delta^(N-|a|) " + start.to_string(), up_expected.to_string(), up.to_string());
    }
  }
  return report;
}

bool transpose_duality_check(int n, int lo, int hi) {
  check_ranks(n, lo, hi);
  const int top = max_length(n);
  const Exponent rho = staircase(n);

  const auto delta_mono = differential_layer_matrix({Operator::Delta, Basis::Monomial, n}, top - hi, top - lo);
  const auto nabla_mono = differential_layer_matrix({Operator::Nabla, Basis::Monomial, n}, lo, hi);
  const auto rows = staircase_monomials(n, top - hi);
  const auto cols = staircase_monomials(n, top - lo);
  std::map<Exponent, std::size_t> lo_index;
  std::map<Exponent, std::size_t> hi_index;
  for (const auto& a : staircase_monomials(n, lo)) lo_index.emplace(a, lo_index.size());
  for (const auto& a : staircase_monomials(n, hi)) hi_index.emplace(a, hi_index.size());
  auto complement = [&](const Exponent& a) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = rho[i] - a[i];
    return out;
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (delta_mono(r, c) != nabla_mono(lo_index.at(complement(cols[c])), hi_index.at(complement(rows[r])))) {
        return false;
      }
    }
  }

  const auto& table = schubert_table(n);
  const auto delta_low = differential_layer_matrix({Operator::Delta, Basis::PaddedSchubert, n}, lo, hi);
  const auto delta_high = differential_layer_matrix({Operator::Delta, Basis::PaddedSchubert, n}, top - hi, top - lo);
  const auto& xs = table.permutations(lo);
  const auto& ys = table.permutations(hi);
  for (std::size_t r = 0; r < xs.size(); ++r) {
    for (std::size_t c = 0; c < ys.size(); ++c) {
      const auto mr = table.index_in_rank(left_multiply_longest(ys[c]));
      const auto mc = table.index_in_rank(left_multiply_longest(xs[r]));
      if (delta_low(r, c) != delta_high(mr, mc)) return false;
    }
  }
  return true;
}

}  // namespace bruhat
