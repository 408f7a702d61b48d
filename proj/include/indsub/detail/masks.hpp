// Compressed <=64-vertex view with uint64 set masks; used by the blob
// builders and the solvers' connected-set enumerations.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub::detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest(Mask m) { return __builtin_ctzll(m); }

// (size, lexicographic-by-ascending-index) order on set masks.
inline bool mask_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  return (a >> lowest(a ^ b)) & 1;  // the smaller set owns the lowest differing index
}

struct Compressed {
  std::vector<int> ids;        // index -> vertex id (ascending)
  std::vector<Mask> rows;      // open neighborhoods
  Mask all = 0;

  static Compressed from(const Graph& g);

  int n() const { return static_cast<int>(ids.size()); }
  int index_of(int id) const;           // throws on unknown id
  Mask mask_of(const VertexSet& s) const;
  VertexSet set_of(Mask m) const;
  Mask open_nbrs(Mask m) const;
  Mask closed_nbrs(Mask m) const { return open_nbrs(m) | m; }
  bool connected(Mask m) const;
  std::vector<Mask> components(Mask m) const;
};

// All connected supersets X of `seed` with X within `allowed` and
// |X| <= max_size, in (size, lex) order. `seed` need not be connected.
// `budget` is decremented per enumeration step; returns false when spent.
bool enumerate_connected_supersets(const Compressed& c, Mask seed, Mask allowed, int max_size,
                                   long long& budget, std::vector<Mask>& out);

// Keeps only the sets with no single removable vertex outside `seed`.
std::vector<Mask> inclusion_minimal(const Compressed& c, Mask seed, const std::vector<Mask>& sets);

}  // namespace indsub::detail
