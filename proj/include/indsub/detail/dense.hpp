// Dense bitset adjacency view used by the containment and MIS searches.
#pragma once

#include <cstdint>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub::detail {

struct DenseGraph {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> rows;  // n * words, row i = neighbors of i
  std::vector<int> ids;             // dense index -> original vertex id

  static DenseGraph from(const Graph& g);

  const std::uint64_t* row(int i) const { return rows.data() + static_cast<std::size_t>(i) * words; }
  bool adj(int a, int b) const { return (row(a)[b >> 6] >> (b & 63)) & 1; }
};

inline bool test_bit(const std::uint64_t* bits, int i) { return (bits[i >> 6] >> (i & 63)) & 1; }
inline void set_bit(std::uint64_t* bits, int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(std::uint64_t* bits, int i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

}  // namespace indsub::detail
