// SPDX-License-Identifier: Apache-2.0
//
// Weak and strong Bruhat orders on S_n as rank-stratified, edge-weighted
// Hasse diagrams, with weighted saturated-chain counting.
#pragma once

#include "bruhat/bigint.hpp"
#include "bruhat/int_matrix.hpp"
#include "bruhat/permutation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bruhat {

enum class Order { Weak, Strong };

/// NablaIndex is a weak-order weighting, Code and Chevalley are strong-order
/// weightings, Unit fits either order.
enum class WeightSystem { NablaIndex, Code, Chevalley, Unit };

std::string_view to_string(Order order);
std::string_view to_string(WeightSystem weights);
Order parse_order(std::string_view text);                // "weak" | "strong"
WeightSystem parse_weight_system(std::string_view text); // "nabla" | "code" | "chevalley" | "unit"
bool compatible(Order order, WeightSystem weights);

/// Weight i on the weak cover w < w s_i. Throws std::invalid_argument if that
/// is not a cover.
BigInt nabla_weight(const Permutation& w, int i);

/// Manhattan distance between code(w) and code(w t_ij) on a strong cover.
/// Always odd and positive. Throws std::invalid_argument if not a cover.
BigInt code_weight(const Permutation& w, int i, int j);

/// j - i.
BigInt chevalley_weight(int i, int j);

class HasseDiagram {
 public:
  struct Edge {
    int source;  // vertex ids
    int target;
    BigInt weight;
  };

  /// Throws std::invalid_argument for an incompatible order/weight pair.
  static HasseDiagram build(int n, Order order, WeightSystem weights);

  int n() const { return n_; }
  Order order() const { return order_; }
  WeightSystem weights() const { return weights_; }
  int top_rank() const { return static_cast<int>(ranks_.size()) - 1; }

  const std::vector<std::vector<Permutation>>& ranks() const { return ranks_; }
  const std::vector<Permutation>& rank(int k) const;

  /// Vertex ids run through the ranks in canonical order: rank 0 first.
  std::size_t vertex_count() const { return vertices_.size(); }
  const Permutation& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  int rank_of(int id) const { return rank_of_[static_cast<std::size_t>(id)]; }
  int index_in_rank(int id) const { return id - rank_offset_[static_cast<std::size_t>(rank_of(id))]; }
  int id_of(int rank, int index) const { return rank_offset_[static_cast<std::size_t>(rank)] + index; }

  /// Throws std::invalid_argument if the permutation is not a vertex.
  int id(const Permutation& w) const;
  std::optional<int> find(const Permutation& w) const;

  /// Sorted by (source, target).
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> out_edges(int id) const;
  std::span<const int> in_edges(int id) const;
  std::optional<BigInt> edge_weight(const Permutation& u, const Permutation& w) const;

 private:
  int n_ = 0;
  Order order_ = Order::Weak;
  WeightSystem weights_ = WeightSystem::Unit;
  std::vector<std::vector<Permutation>> ranks_;
  std::vector<Permutation> vertices_;
  std::vector<int> rank_of_;
  std::vector<int> rank_offset_;
  std::unordered_map<Permutation, int, PermutationHash> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Sum over saturated chains u -> v of the product of edge weights; 1 when
/// u == v and 0 when no chain exists.
BigInt weighted_path_count(const HasseDiagram& g, const Permutation& u, const Permutation& v);

/// m(u, x) for every vertex x, indexed by vertex id.
std::vector<BigInt> path_counts_from(const HasseDiagram& g, const Permutation& u);

/// m(x, v) for every vertex x, indexed by vertex id.
std::vector<BigInt> path_counts_to(const HasseDiagram& g, const Permutation& v);

/// Rows are the rank-lo permutations and columns the rank-hi permutations,
/// both canonical; entry (x, y) = m(x, y). Throws std::out_of_range unless
/// 0 <= lo <= hi <= N.
IntMatrix layer_matrix(const HasseDiagram& g, int lo, int hi);

struct SymmetryResult {
  bool holds = true;
  std::size_t edges_checked = 0;
  std::optional<std::string> counterexample;
};

/// Checks that every edge (u, w, c) has a partner (w0 w, w0 u) of weight c.
SymmetryResult w0_symmetry_check(const HasseDiagram& g);

std::string to_dot(const HasseDiagram& g);

/// {n, order, weights, ranks: [[perm, ...], ...], edges: [[src, dst, weight], ...]}
std::string to_json(const HasseDiagram& g);

}  // namespace bruhat
