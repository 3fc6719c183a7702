#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twinlab/free_group.hpp"

namespace twinlab {

/// Stallings core graph of a finitely generated subgroup of a free group.
/// Vertex 0 is the base vertex; vertices are numbered in breadth-first order
/// from the base, so two graphs of the same subgroup compare equal.
class FoldedGraph {
 public:
  struct Edge {
    int from = 0;
    int symbol = 0;
    int to = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  FoldedGraph(AlphabetPtr alphabet, int vertex_count, std::vector<Edge> edges);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// E - V + 1.
  int rank() const;

  /// True iff w reads a closed path at the base vertex.
  bool accepts(const FreeWord& w) const;

  /// "V;from-symbol->to,..." over the canonical numbering.
  std::string canonical_form() const;
  std::uint64_t canonical_hash() const;

 private:
  std::optional<int> step(int vertex, const FreeLetter& letter) const;

  AlphabetPtr alphabet_;
  int vertex_count_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;  // out_[v][symbol] = target or -1
  std::vector<std::vector<int>> in_;
};

/// Folds the bouquet of `generators` down to its core graph. Trivial
/// generators are ignored; an empty list gives the trivial subgroup.
FoldedGraph fold(AlphabetPtr alphabet, std::span<const FreeWord> generators);

int rank(const FoldedGraph& graph);
bool member(const FreeWord& w, const FoldedGraph& graph);

}  // namespace twinlab
