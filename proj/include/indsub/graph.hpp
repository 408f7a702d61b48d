// Simple undirected graph with stable vertex ids, plus the primitive
// transformations (induced subgraph, contraction, subdivision, line graph)
// and small exact computations (girth, minimum connected dominating set).
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indsub {

// A vertex set is kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Thrown when an exact routine is asked to exceed its configured limit.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by the text/DIMACS/JSON readers; carries a 1-based line or position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, long long where)
      : std::runtime_error(msg + " (at " + std::to_string(where) + ")"), where_(where) {}
  long long where() const { return where_; }

 private:
  long long where_;
};

VertexSet make_vertex_set(std::vector<int> ids);  // sorts, deduplicates

// Ids are opaque non-negative integers and need not be contiguous; deletion
// and contraction leave gaps. Neighbor lists are sorted, so iteration order
// is deterministic. Values are cheap to copy and treated as immutable
// snapshots once built.
class Graph {
 public:
  Graph() = default;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph edgeless(int n);
  // Vertices 0..n-1 plus the given edges.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  void add_vertex(int v);
  // Inserts missing endpoints; rejects self-loops. Duplicate edges are no-ops.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void remove_vertex(int v);
  void remove_vertices(const VertexSet& vs);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }
  bool has_vertex(int v) const { return adj_.count(v) != 0; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<int>& neighbors(int v) const;
  VertexSet vertices() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  int max_vertex_id() const;  // -1 when empty

  void set_label(int v, const std::string& text);
  std::optional<std::string> label(int v) const;
  const std::map<int, std::string>& labels() const { return labels_; }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  void require_vertex(int v) const;
  std::map<int, std::vector<int>> adj_;
  std::map<int, std::string> labels_;
  int m_ = 0;
};

// G[S]: vertex set s, exactly the edges of g inside s; ids preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Contracts edge uv into a fresh vertex (max id + 1); the result is simple.
// Returns the new vertex id.
std::pair<Graph, int> contract_edge(const Graph& g, int u, int v);

// Replaces every edge by a path with t new internal vertices.
Graph subdivide_edges(const Graph& g, int t);

struct LineGraphResult {
  Graph graph;  // one vertex per edge of the input, ids 0..m-1
  std::map<std::pair<int, int>, int> edge_vertex;  // (u<v) -> line-graph id
};
LineGraphResult line_graph(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
// Empty sets are not connected; singletons are.
bool is_connected_set(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Exact, by subset enumeration in (size, lexicographic) order, so ties break
// toward the lexicographically smallest id set. Input must be connected and
// have at most `exhaustive_limit` vertices.
VertexSet min_connected_dominating_set(const Graph& g, int exhaustive_limit = 16);

// Text format: '#' comments; "n m" header; optional "ids explicit" line
// followed by one line listing the n ids; then m lines "u v".
Graph read_graph_text(std::istream& in);
void write_graph_text(const Graph& g, std::ostream& out);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace indsub
