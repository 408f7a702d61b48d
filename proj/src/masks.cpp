#include "indsub/detail/masks.hpp"

#include <algorithm>
#include <unordered_set>

namespace indsub::detail {

Compressed Compressed::from(const Graph& g) {
  if (g.n() > 64) throw ResourceLimitError("mask view limited to 64 vertices");
  Compressed c;
  c.ids = g.vertices();
  c.rows.assign(c.ids.size(), 0);
  for (int i = 0; i < c.n(); ++i) {
    c.all |= Mask{1} << i;
    for (int u : g.neighbors(c.ids[i])) {
      auto it = std::lower_bound(c.ids.begin(), c.ids.end(), u);
      c.rows[i] |= Mask{1} << (it - c.ids.begin());
    }
  }
  return c;
}

int Compressed::index_of(int id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id)
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
  return static_cast<int>(it - ids.begin());
}

Mask Compressed::mask_of(const VertexSet& s) const {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << index_of(v);
  return m;
}

VertexSet Compressed::set_of(Mask m) const {
  VertexSet s;
  while (m) {
    int i = lowest(m);
    m &= m - 1;
    s.push_back(ids[i]);
  }
  return s;
}

Mask Compressed::open_nbrs(Mask m) const {
  Mask out = 0;
  Mask rest = m;
  while (rest) {
    int i = lowest(rest);
    rest &= rest - 1;
    out |= rows[i];
  }
  return out & ~m;
}

bool Compressed::connected(Mask m) const {
  if (!m) return false;
  Mask reached = Mask{1} << lowest(m);
  while (true) {
    Mask next = reached;
    Mask rest = reached;
    while (rest) {
      int i = lowest(rest);
      rest &= rest - 1;
      next |= rows[i] & m;
    }
    if (next == reached) break;
    reached = next;
  }
  return reached == m;
}

std::vector<Mask> Compressed::components(Mask m) const {
  std::vector<Mask> comps;
  while (m) {
    Mask comp = Mask{1} << lowest(m);
    while (true) {
      Mask next = comp;
      Mask rest = comp;
      while (rest) {
        int i = lowest(rest);
        rest &= rest - 1;
        next |= rows[i] & m;
      }
      if (next == comp) break;
      comp = next;
    }
    comps.push_back(comp);
    m &= ~comp;
  }
  return comps;
}

bool enumerate_connected_supersets(const Compressed& c, Mask seed, Mask allowed, int max_size,
                                   long long& budget, std::vector<Mask>& out) {
  out.clear();
  if ((seed & allowed) != seed) return true;  // a mandatory vertex is unavailable
  if (popcount(seed) > max_size || seed == 0) return true;
  std::unordered_set<Mask> seen;
  std::vector<Mask> queue{seed};
  seen.insert(seed);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Mask x = queue[qi];
    if (--budget < 0) return false;
    if (c.connected(x)) out.push_back(x);
    if (popcount(x) >= max_size) continue;
    Mask ext = c.open_nbrs(x) & allowed;
    while (ext) {
      int i = lowest(ext);
      ext &= ext - 1;
      Mask y = x | (Mask{1} << i);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::sort(out.begin(), out.end(), mask_less);
  return true;
}

std::vector<Mask> inclusion_minimal(const Compressed& c, Mask seed, const std::vector<Mask>& sets) {
  std::vector<Mask> out;
  for (Mask x : sets) {
    bool minimal = true;
    Mask rest = x & ~seed;
    while (rest && minimal) {
      int i = lowest(rest);
      rest &= rest - 1;
      if (c.connected(x & ~(Mask{1} << i))) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

}  // namespace indsub::detail
