#include "indsub/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace indsub {

VertexSet make_vertex_set(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

Graph Graph::path(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g;
  for (int i = 0; i < a + b; ++i) g.add_vertex(i);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::edgeless(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = edgeless(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_vertex(int v) {
  if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
  adj_.try_emplace(v);
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  add_vertex(u);
  add_vertex(v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  require_vertex(u);
  require_vertex(v);
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return;
  nu.erase(it);
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --m_;
}

void Graph::remove_vertex(int v) {
  require_vertex(v);
  for (int u : std::vector<int>(adj_[v])) remove_edge(u, v);
  adj_.erase(v);
  labels_.erase(v);
}

void Graph::remove_vertices(const VertexSet& vs) {
  for (int v : vs) remove_vertex(v);
}

bool Graph::has_edge(int u, int v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  return it->second;
}

VertexSet Graph::vertices() const {
  VertexSet vs;
  vs.reserve(adj_.size());
  for (const auto& [v, _] : adj_) vs.push_back(v);
  return vs;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(m_);
  for (const auto& [v, nbrs] : adj_)
    for (int u : nbrs)
      if (v < u) es.emplace_back(v, u);
  return es;
}

int Graph::max_vertex_id() const { return adj_.empty() ? -1 : adj_.rbegin()->first; }

void Graph::set_label(int v, const std::string& text) {
  require_vertex(v);
  labels_[v] = text;
}

std::optional<std::string> Graph::label(int v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

void Graph::require_vertex(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  Graph out;
  for (int v : s) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    out.add_vertex(v);
  }
  for (int v : s)
    for (int u : g.neighbors(v))
      if (u > v && std::binary_search(s.begin(), s.end(), u)) out.add_edge(v, u);
  return out;
}

std::pair<Graph, int> contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: uv is not an edge");
  int w = g.max_vertex_id() + 1;
  Graph out;
  for (int x : g.vertices())
    if (x != u && x != v) out.add_vertex(x);
  out.add_vertex(w);
  for (auto [a, b] : g.edges()) {
    bool au = (a == u || a == v), bu = (b == u || b == v);
    if (au && bu) continue;
    out.add_edge(au ? w : a, bu ? w : b);
  }
  for (const auto& [x, text] : g.labels())
    if (x != u && x != v) out.set_label(x, text);
  return {std::move(out), w};
}

Graph subdivide_edges(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("subdivision count must be non-negative");
  if (t == 0) return g;
  Graph out;
  for (int v : g.vertices()) out.add_vertex(v);
  for (const auto& [v, text] : g.labels()) out.set_label(v, text);
  int next = g.max_vertex_id() + 1;
  for (auto [u, v] : g.edges()) {
    int prev = u;
    for (int i = 0; i < t; ++i) {
      out.add_edge(prev, next);
      prev = next++;
    }
    out.add_edge(prev, v);
  }
  return out;
}

LineGraphResult line_graph(const Graph& g) {
  LineGraphResult res;
  auto es = g.edges();
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    res.edge_vertex[es[i]] = i;
    res.graph.add_vertex(i);
  }
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d)
        res.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return res;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::map<int, bool> seen;
  for (int v : g.vertices()) {
    if (seen[v]) continue;
    VertexSet comp;
    std::deque<int> queue{v};
    seen[v] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (int u : g.neighbors(x))
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
    }
    comps.push_back(make_vertex_set(std::move(comp)));
  }
  return comps;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  for (int v : s)
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  std::map<int, bool> seen;
  std::deque<int> queue{s.front()};
  seen[s.front()] = true;
  std::size_t reached = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    ++reached;
    for (int u : g.neighbors(x))
      if (!seen[u] && std::binary_search(s.begin(), s.end(), u)) {
        seen[u] = true;
        queue.push_back(u);
      }
  }
  return reached == s.size();
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (int v : s) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    for (int u : g.neighbors(v)) out.push_back(u);
  }
  return make_vertex_set(std::move(out));
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet closed = closed_neighborhood(g, s);
  VertexSet out;
  std::set_difference(closed.begin(), closed.end(), s.begin(), s.end(), std::back_inserter(out));
  return out;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge seen at depths d1, d2 closes a
  // cycle of length d1 + d2 + 1. The minimum over all roots is exact.
  int best = -1;
  auto vs = g.vertices();
  std::map<int, int> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
  for (int root : vs) {
    std::vector<int> dist(vs.size(), -1), parent(vs.size(), -1);
    std::deque<int> queue{root};
    dist[index[root]] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      int xi = index[x];
      for (int u : g.neighbors(x)) {
        int ui = index[u];
        if (dist[ui] == -1) {
          dist[ui] = dist[xi] + 1;
          parent[ui] = xi;
          queue.push_back(u);
        } else if (ui != parent[xi] && xi < ui) {
          int len = dist[xi] + dist[ui] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

namespace {

// Visits k-subsets of 0..n-1 in lexicographic order.
template <typename F>
bool for_each_combination(int n, int k, F&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexSet min_connected_dominating_set(const Graph& g, int exhaustive_limit) {
  if (g.n() == 0) throw std::invalid_argument("empty graph has no dominating set");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("min_connected_dominating_set requires a connected graph");
  if (g.n() > exhaustive_limit)
    throw ResourceLimitError("min_connected_dominating_set limited to " +
                             std::to_string(exhaustive_limit) + " vertices");
  auto vs = g.vertices();
  int n = g.n();
  VertexSet best;
  for (int size = 1; size <= n && best.empty(); ++size) {
    for_each_combination(n, size, [&](const std::vector<int>& idx) {
      VertexSet cand;
      cand.reserve(size);
      for (int i : idx) cand.push_back(vs[i]);
      if (!is_connected_set(g, cand)) return false;
      if (closed_neighborhood(g, cand).size() != static_cast<std::size_t>(n)) return false;
      best = cand;
      return true;
    });
  }
  return best;
}

Graph read_graph_text(std::istream& in) {
  std::string line;
  long long lineno = 0;
  auto next_data_line = [&](bool required) -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return line.substr(pos);
    }
    if (required) throw ParseError("unexpected end of graph file", lineno);
    return std::nullopt;
  };

  auto header = next_data_line(true);
  std::istringstream hs(*header);
  long long n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0)
    throw ParseError("expected header 'n m'", lineno);

  Graph g;
  std::optional<std::string> data = next_data_line(false);
  bool explicit_ids = false;
  if (data && data->rfind("ids explicit", 0) == 0) {
    explicit_ids = true;
    auto idline = next_data_line(true);
    std::istringstream is(*idline);
    for (long long i = 0; i < n; ++i) {
      int v;
      if (!(is >> v)) throw ParseError("expected " + std::to_string(n) + " vertex ids", lineno);
      if (g.has_vertex(v)) throw ParseError("duplicate vertex id", lineno);
      g.add_vertex(v);
    }
    data = next_data_line(false);
  } else {
    for (long long i = 0; i < n; ++i) g.add_vertex(static_cast<int>(i));
  }

  for (long long e = 0; e < m; ++e) {
    if (!data) throw ParseError("expected " + std::to_string(m) + " edges", lineno);
    std::istringstream es(*data);
    int u, v;
    if (!(es >> u >> v)) throw ParseError("expected edge 'u v'", lineno);
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw ParseError("edge endpoint is not a declared vertex", lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    if (g.has_edge(u, v)) throw ParseError("duplicate edge", lineno);
    g.add_edge(u, v);
    data = next_data_line(false);
  }
  (void)explicit_ids;
  return g;
}

void write_graph_text(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  auto vs = g.vertices();
  bool contiguous = g.n() == 0 || (vs.front() == 0 && vs.back() == g.n() - 1);
  if (!contiguous) {
    out << "ids explicit\n";
    for (std::size_t i = 0; i < vs.size(); ++i) out << vs[i] << " \n"[i + 1 == vs.size()];
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph_text(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_graph_text(g, out);
}

}  // namespace indsub
