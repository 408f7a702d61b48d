#include "indsub/blob.hpp"

#include <algorithm>

#include "indsub/detail/masks.hpp"

namespace indsub {

using detail::Compressed;
using detail::Mask;

BlobGraph::BlobGraph(Graph host, std::vector<BlobVertex> nodes)
    : host_(std::move(host)), nodes_(std::move(nodes)) {
  Compressed c = Compressed::from(host_);
  std::vector<Mask> masks;
  std::vector<Mask> touch;
  masks.reserve(nodes_.size());
  for (const auto& node : nodes_) {
    Mask m = c.mask_of(node.set);
    masks.push_back(m);
    touch.push_back(c.closed_nbrs(m));
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) view_.add_vertex(static_cast<int>(i));
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (touch[i] & masks[j]) view_.add_edge(static_cast<int>(i), static_cast<int>(j));
}

BlobGraph full_blob(const Graph& g, int limit) {
  if (g.n() > limit)
    throw ResourceLimitError("full_blob limited to " + std::to_string(limit) + " vertices");
  Compressed c = Compressed::from(g);
  std::vector<Mask> all;
  Mask top = c.n() == 64 ? ~Mask{0} : (Mask{1} << c.n()) - 1;
  for (Mask m = 1; m <= top; ++m) {
    if (c.connected(m)) all.push_back(m);
    if (m == top) break;
  }
  std::sort(all.begin(), all.end(), detail::mask_less);
  std::vector<BlobVertex> nodes;
  nodes.reserve(all.size());
  for (Mask m : all) nodes.push_back({c.set_of(m), std::nullopt});
  return BlobGraph(g, std::move(nodes));
}

BlobGraph terminal_blob(const Instance& inst, int max_size) {
  Compressed c = Compressed::from(inst.graph());
  Mask terminals = 0;
  std::vector<Mask> zs;
  for (const auto& z : inst.terminal_sets()) {
    zs.push_back(c.mask_of(z));
    terminals |= zs.back();
  }
  std::vector<BlobVertex> nodes;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    Mask allowed = (c.all & ~terminals) | zs[i];
    std::vector<Mask> found;
    long long budget = 1LL << 40;
    enumerate_connected_supersets(c, zs[i], allowed, max_size, budget, found);
    for (Mask m : found) nodes.push_back({c.set_of(m), i});
  }
  return BlobGraph(inst.graph(), std::move(nodes));
}

BlobGraph p5_blob(const Instance& inst, const VertexSet& allowed) {
  Compressed c = Compressed::from(inst.graph());
  Mask terminals = 0;
  for (const auto& z : inst.terminal_sets()) terminals |= c.mask_of(z);
  std::vector<BlobVertex> nodes;
  for (std::size_t i = 0; i < inst.terminal_sets().size(); ++i) {
    Mask z = c.mask_of(inst.terminal_set(i));
    for (int s : allowed) {
      Mask sm = Mask{1} << c.index_of(s);
      if (sm & terminals) continue;
      Mask x = z | sm;
      if (c.connected(x)) nodes.push_back({c.set_of(x), i});
    }
  }
  return BlobGraph(inst.graph(), std::move(nodes));
}

}  // namespace indsub
