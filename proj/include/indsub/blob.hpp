// Blob graphs: intersection-or-touch graphs over connected vertex subsets of
// a host graph. Exhaustive for the structural property tests, terminal- and
// pair-restricted for the solvers.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/instance.hpp"

namespace indsub {

struct BlobVertex {
  VertexSet set;                             // a connected subset of the host
  std::optional<std::size_t> terminal_index; // i when the set contains Z_i
};

class BlobGraph {
 public:
  BlobGraph(Graph host, std::vector<BlobVertex> nodes);

  const Graph& host() const { return host_; }
  const std::vector<BlobVertex>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return view_.has_edge((int)a, (int)b); }
  // Nodes renumbered 0..N-1 with the intersect-or-touch adjacency.
  const Graph& as_graph() const { return view_; }

 private:
  Graph host_;
  std::vector<BlobVertex> nodes_;
  Graph view_;
};

// One node per connected subset of the host; host size capped (default 8).
BlobGraph full_blob(const Graph& g, int limit = 8);

// Nodes: connected X with |X| <= max_size, Z_i a subset of X for exactly one
// i, and X disjoint from every other terminal set. Requires a normalized
// instance (independent terminal union).
BlobGraph terminal_blob(const Instance& inst, int max_size);

// Nodes: connected sets of the form Z_i + one vertex from `allowed`.
BlobGraph p5_blob(const Instance& inst, const VertexSet& allowed);

}  // namespace indsub
