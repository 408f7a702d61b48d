#include "indsub/mis.hpp"

#include <algorithm>
#include <cstdint>

#include "indsub/detail/dense.hpp"

namespace indsub {

namespace {

using detail::DenseGraph;

struct MisSearch {
  const DenseGraph& g;
  int words;
  long long nodes_left;
  int target;  // stop as soon as a set of this size is found; -1 = maximum
  std::vector<int> best, current;
  std::vector<std::uint64_t> scratch;

  MisSearch(const DenseGraph& dg, long long budget, int tgt)
      : g(dg), words(dg.words), nodes_left(budget), target(tgt) {
    scratch.assign(static_cast<std::size_t>(g.n + 1) * words, 0);
  }

  bool done() const { return target >= 0 && static_cast<int>(best.size()) >= target; }

  int count(const std::uint64_t* m) const {
    int c = 0;
    for (int w = 0; w < words; ++w) c += __builtin_popcountll(m[w]);
    return c;
  }

  // Greedy clique cover of the remaining vertices; its size bounds the
  // independence number from above.
  int clique_cover_bound(const std::uint64_t* rem) const {
    std::vector<std::vector<std::uint64_t>> common;  // per clique: common neighbors
    int cliques = 0;
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = rem[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int v = (w << 6) | b;
        bool placed = false;
        for (auto& cl : common) {
          if (detail::test_bit(cl.data(), v)) {
            for (int k = 0; k < words; ++k) cl[k] &= g.row(v)[k];
            placed = true;
            break;
          }
        }
        if (!placed) {
          ++cliques;
          common.emplace_back(g.row(v), g.row(v) + words);
        }
      }
    }
    return cliques;
  }

  void search(int depth) {
    if (done()) return;
    if (target >= 0 && static_cast<int>(current.size()) >= target) {
      best = current;
      return;
    }
    if (--nodes_left < 0) throw ResourceLimitError("independent-set node budget exhausted");
    std::uint64_t* rem = scratch.data() + static_cast<std::size_t>(depth) * words;
    int remaining = count(rem);
    if (remaining == 0) {
      if (current.size() > best.size()) best = current;
      return;
    }
    int bound = std::min(remaining, clique_cover_bound(rem));
    if (static_cast<int>(current.size()) + bound <= static_cast<int>(best.size())) return;

    // Maximum degree within the remainder, ties toward the smallest index.
    int pick = -1, pick_deg = -1;
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = rem[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int v = (w << 6) | b;
        int deg = 0;
        for (int k = 0; k < words; ++k) deg += __builtin_popcountll(g.row(v)[k] & rem[k]);
        if (deg > pick_deg) {
          pick_deg = deg;
          pick = v;
        }
      }
    }

    std::uint64_t* child = scratch.data() + static_cast<std::size_t>(depth + 1) * words;
    // Include pick.
    for (int k = 0; k < words; ++k) child[k] = rem[k] & ~g.row(pick)[k];
    detail::clear_bit(child, pick);
    current.push_back(pick);
    search(depth + 1);
    current.pop_back();
    if (done()) return;
    // Exclude pick.
    for (int k = 0; k < words; ++k) child[k] = rem[k];
    detail::clear_bit(child, pick);
    search(depth + 1);
  }
};

void validate(const Graph& g, const VertexSet& witness) {
  for (std::size_t i = 0; i < witness.size(); ++i)
    for (std::size_t j = i + 1; j < witness.size(); ++j)
      if (g.has_edge(witness[i], witness[j]))
        throw std::logic_error("independent-set witness failed validation");
}

MisResult run(const Graph& g, long long budget, int target) {
  DenseGraph d = DenseGraph::from(g);
  MisSearch s(d, budget, target);
  std::uint64_t* root = s.scratch.data();
  for (int v = 0; v < d.n; ++v) detail::set_bit(root, v);
  s.search(0);
  MisResult res;
  res.size = static_cast<int>(s.best.size());
  for (int v : s.best) res.witness.push_back(d.ids[v]);
  res.witness = make_vertex_set(std::move(res.witness));
  validate(g, res.witness);
  return res;
}

}  // namespace

MisResult max_independent_set(const Graph& g, long long node_budget) {
  return run(g, node_budget, -1);
}

std::optional<VertexSet> has_independent_set(const Graph& g, int target, long long node_budget) {
  if (target <= 0) return VertexSet{};
  if (target > g.n()) return std::nullopt;
  MisResult res = run(g, node_budget, target);
  if (res.size < target) return std::nullopt;
  VertexSet w(res.witness.begin(), res.witness.begin() + target);
  return w;
}

}  // namespace indsub
