// Exact maximum independent set via branch and bound. Class-agnostic: this
// stands in for the polynomial/quasipolynomial subroutines cited for P6-free
// and Pr-free graphs, so asymptotic guarantees are out of scope here.
#pragma once

#include <optional>

#include "indsub/graph.hpp"

namespace indsub {

struct MisResult {
  int size = 0;
  VertexSet witness;
};

inline constexpr long long kDefaultMisBudget = 20'000'000;

// Branches on a maximum-degree vertex (ties toward the smallest id):
// exclude it, or include it and delete its closed neighborhood. Upper bound
// by greedy clique cover. Throws ResourceLimitError when the node budget is
// exhausted. The witness is re-validated before returning.
MisResult max_independent_set(const Graph& g, long long node_budget = kDefaultMisBudget);

// Early-exit variant: a witness of size `target`, or nullopt.
std::optional<VertexSet> has_independent_set(const Graph& g, int target,
                                             long long node_budget = kDefaultMisBudget);

}  // namespace indsub
