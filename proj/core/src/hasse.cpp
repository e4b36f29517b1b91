// SPDX-License-Identifier: Apache-2.0
#include "bruhat/hasse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bruhat {

std::string_view to_string(Order order) { return order == Order::Weak ? "weak" : "strong"; }

std::string_view to_string(WeightSystem weights) {
  switch (weights) {
    case WeightSystem::NablaIndex: return "nabla";
    case WeightSystem::Code: return "code";
    case WeightSystem::Chevalley: return "chevalley";
    case WeightSystem::Unit: return "unit";
  }
  return "unit";
}

Order parse_order(std::string_view text) {
  if (text == "weak") return Order::Weak;
  if (text == "strong") return Order::Strong;
  throw std::invalid_argument("unknown order: " + std::string(text));
}

WeightSystem parse_weight_system(std::string_view text) {
  if (text == "nabla") return WeightSystem::NablaIndex;
  if (text == "code") return WeightSystem::Code;
  if (text == "chevalley") return WeightSystem::Chevalley;
  if (text == "unit") return WeightSystem::Unit;
  throw std::invalid_argument("unknown weight system: " + std::string(text));
}

bool compatible(Order order, WeightSystem weights) {
  switch (weights) {
    case WeightSystem::NablaIndex: return order == Order::Weak;
    case WeightSystem::Code:
    case WeightSystem::Chevalley: return order == Order::Strong;
    case WeightSystem::Unit: return true;
  }
  return false;
}

BigInt nabla_weight(const Permutation& w, int i) {
  if (!is_weak_cover(w, i)) {
    throw std::invalid_argument(w.to_string() + " s_" + std::to_string(i) + " is not a weak cover");
  }
  return i;
}

BigInt code_weight(const Permutation& w, int i, int j) {
  if (!is_strong_cover(w, i, j)) {
    throw std::invalid_argument(w.to_string() + " t_" + std::to_string(i) + std::to_string(j) +
                                " is not a strong cover");
  }
  const auto before = lehmer_code(w);
  const auto after = lehmer_code(right_multiply_transposition(w, i, j));
  long distance = 0;
  for (std::size_t k = 0; k < before.size(); ++k) distance += std::labs(before[k] - after[k]);
  return distance;
}

BigInt chevalley_weight(int i, int j) {
  if (i >= j) throw std::invalid_argument("chevalley weight needs i < j");
  return j - i;
}

HasseDiagram HasseDiagram::build(int n, Order order, WeightSystem weights) {
  if (!compatible(order, weights)) {
    throw std::invalid_argument("weight system '" + std::string(to_string(weights)) +
                                "' does not apply to the " + std::string(to_string(order)) +
                                " order");
  }
  HasseDiagram g;
  g.n_ = n;
  g.order_ = order;
  g.weights_ = weights;
  g.ranks_ = permutations_by_rank(n);
  for (std::size_t k = 0; k < g.ranks_.size(); ++k) {
    g.rank_offset_.push_back(static_cast<int>(g.vertices_.size()));
    for (const auto& w : g.ranks_[k]) {
      g.ids_.emplace(w, static_cast<int>(g.vertices_.size()));
      g.vertices_.push_back(w);
      g.rank_of_.push_back(static_cast<int>(k));
    }
  }
  g.out_.resize(g.vertices_.size());
  g.in_.resize(g.vertices_.size());

  for (std::size_t src = 0; src < g.vertices_.size(); ++src) {
    const Permutation& w = g.vertices_[src];
    std::vector<Edge> local;
    if (order == Order::Weak) {
      for (const auto& cover : weak_covers_up(w)) {
        BigInt weight = weights == WeightSystem::Unit ? BigInt(1) : nabla_weight(w, cover.index);
        local.push_back({static_cast<int>(src), g.id(cover.target), std::move(weight)});
      }
    } else {
      for (const auto& cover : strong_covers_up(w)) {
        BigInt weight = 1;
        if (weights == WeightSystem::Code) weight = code_weight(w, cover.i, cover.j);
        else if (weights == WeightSystem::Chevalley) weight = chevalley_weight(cover.i, cover.j);
        local.push_back({static_cast<int>(src), g.id(cover.target), std::move(weight)});
      }
    }
    std::sort(local.begin(), local.end(),
              [](const Edge& a, const Edge& b) { return a.target < b.target; });
    for (auto& e : local) g.edges_.push_back(std::move(e));
  }
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    g.out_[static_cast<std::size_t>(g.edges_[e].source)].push_back(static_cast<int>(e));
    g.in_[static_cast<std::size_t>(g.edges_[e].target)].push_back(static_cast<int>(e));
  }
  return g;
}

const std::vector<Permutation>& HasseDiagram::rank(int k) const {
  if (k < 0 || k > top_rank()) throw std::out_of_range("rank out of range");
  return ranks_[static_cast<std::size_t>(k)];
}

std::optional<int> HasseDiagram::find(const Permutation& w) const {
  const auto it = ids_.find(w);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int HasseDiagram::id(const Permutation& w) const {
  const auto found = find(w);
  if (!found) throw std::invalid_argument(w.to_string() + " is not a vertex of this diagram");
  return *found;
}

std::span<const int> HasseDiagram::out_edges(int id) const { return out_[static_cast<std::size_t>(id)]; }
std::span<const int> HasseDiagram::in_edges(int id) const { return in_[static_cast<std::size_t>(id)]; }

std::optional<BigInt> HasseDiagram::edge_weight(const Permutation& u, const Permutation& w) const {
  const auto src = find(u);
  const auto dst = find(w);
  if (!src || !dst) return std::nullopt;
  for (int e : out_edges(*src)) {
    if (edges_[static_cast<std::size_t>(e)].target == *dst) return edges_[static_cast<std::size_t>(e)].weight;
  }
  return std::nullopt;
}

std::vector<BigInt> path_counts_from(const HasseDiagram& g, const Permutation& u) {
  std::vector<BigInt> count(g.vertex_count(), BigInt(0));
  const int start = g.id(u);
  count[static_cast<std::size_t>(start)] = 1;
  // Ids increase with rank, so a forward sweep visits every vertex after all
  // of its predecessors.
  for (std::size_t v = static_cast<std::size_t>(start); v < g.vertex_count(); ++v) {
    if (count[v] == 0) continue;
    for (int e : g.out_edges(static_cast<int>(v))) {
      const auto& edge = g.edges()[static_cast<std::size_t>(e)];
      count[static_cast<std::size_t>(edge.target)] += count[v] * edge.weight;
    }
  }
  return count;
}

std::vector<BigInt> path_counts_to(const HasseDiagram& g, const Permutation& v) {
  std::vector<BigInt> count(g.vertex_count(), BigInt(0));
  const int end = g.id(v);
  count[static_cast<std::size_t>(end)] = 1;
  for (int x = end; x >= 0; --x) {
    if (count[static_cast<std::size_t>(x)] == 0) continue;
    for (int e : g.in_edges(x)) {
      const auto& edge = g.edges()[static_cast<std::size_t>(e)];
      count[static_cast<std::size_t>(edge.source)] += count[static_cast<std::size_t>(x)] * edge.weight;
    }
  }
  return count;
}

BigInt weighted_path_count(const HasseDiagram& g, const Permutation& u, const Permutation& v) {
  const int target = g.id(v);
  if (g.rank_of(target) < g.rank_of(g.id(u))) return 0;
  return path_counts_from(g, u)[static_cast<std::size_t>(target)];
}

IntMatrix layer_matrix(const HasseDiagram& g, int lo, int hi) {
  if (lo < 0 || hi > g.top_rank() || lo > hi) throw std::out_of_range("layer ranks out of range");
  const auto& rows = g.rank(lo);
  const auto& cols = g.rank(hi);
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto counts = path_counts_from(g, rows[r]);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, c) = counts[static_cast<std::size_t>(g.id_of(hi, static_cast<int>(c)))];
    }
  }
  return out;
}

SymmetryResult w0_symmetry_check(const HasseDiagram& g) {
  SymmetryResult result;
  for (const auto& e : g.edges()) {
    ++result.edges_checked;
    const Permutation& u = g.vertex(e.source);
    const Permutation& w = g.vertex(e.target);
    const Permutation mirror_src = left_multiply_longest(w);
    const Permutation mirror_dst = left_multiply_longest(u);
    const auto partner = g.edge_weight(mirror_src, mirror_dst);
    if (!partner || *partner != e.weight) {
      result.holds = false;
      std::ostringstream os;
      os << u.to_string() << "->" << w.to_string() << " weight " << to_decimal(e.weight)
         << " but " << mirror_src.to_string() << "->" << mirror_dst.to_string() << " has "
         << (partner ? "weight " + to_decimal(*partner) : std::string("no edge"));
      result.counterexample = os.str();
      return result;
    }
  }
  return result;
}

std::string to_dot(const HasseDiagram& g) {
  std::ostringstream os;
  os << "digraph \"" << to_string(g.order()) << "_" << to_string(g.weights()) << "_S" << g.n()
     << "\" {\n  rankdir=BT;\n";
  for (int k = 0; k <= g.top_rank(); ++k) {
    os << "  subgraph rank_" << k << " {\n    rank=same;\n";
    for (const auto& w : g.rank(k)) os << "    \"" << w.to_string() << "\";\n";
    os << "  }\n";
  }
  for (const auto& e : g.edges()) {
    os << "  \"" << g.vertex(e.source).to_string() << "\" -> \"" << g.vertex(e.target).to_string()
       << "\" [label=\"" << to_decimal(e.weight) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const HasseDiagram& g) {
  nlohmann::ordered_json doc;
  doc["n"] = std::to_string(g.n());
  doc["order"] = std::string(to_string(g.order()));
  doc["weights"] = std::string(to_string(g.weights()));
  auto ranks = nlohmann::ordered_json::array();
  for (const auto& level : g.ranks()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& w : level) row.push_back(w.to_string());
    ranks.push_back(std::move(row));
  }
  doc["ranks"] = std::move(ranks);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({g.vertex(e.source).to_string(), g.vertex(e.target).to_string(),
                     to_decimal(e.weight)});
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

}  // namespace bruhat
