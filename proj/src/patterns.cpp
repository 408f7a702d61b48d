#include "indsub/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "indsub/detail/dense.hpp"

namespace indsub {

namespace detail {

DenseGraph DenseGraph::from(const Graph& g) {
  DenseGraph d;
  d.ids = g.vertices();
  d.n = static_cast<int>(d.ids.size());
  d.words = (d.n + 63) / 64;
  d.rows.assign(static_cast<std::size_t>(d.n) * d.words, 0);
  std::map<int, int> index;
  for (int i = 0; i < d.n; ++i) index[d.ids[i]] = i;
  for (int i = 0; i < d.n; ++i)
    for (int u : g.neighbors(d.ids[i]))
      set_bit(d.rows.data() + static_cast<std::size_t>(i) * d.words, index[u]);
  return d;
}

}  // namespace detail

namespace {

struct PatternParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit PatternParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("pattern '" + text + "': " + msg, static_cast<long long>(pos + 1));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  int parse_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  // Appends `count` copies of the base graph described at the cursor.
  void parse_term(Graph& acc, int& next_id) {
    skip_ws();
    int count = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) count = parse_int();
    skip_ws();
    if (pos >= text.size()) fail("expected P/C/K/claw after count");
    Graph base;
    if (text.compare(pos, 4, "claw") == 0) {
      pos += 4;
      base = Graph::complete_bipartite(1, 3);
    } else {
      char kind = text[pos];
      if (kind != 'P' && kind != 'C' && kind != 'K') fail("expected P/C/K/claw");
      ++pos;
      int a = parse_int();
      if (kind == 'P') {
        if (a < 1) fail("path order must be at least 1");
        base = Graph::path(a);
      } else if (kind == 'C') {
        if (a < 3) fail("cycle order must be at least 3");
        base = Graph::cycle(a);
      } else {
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          int b = parse_int();
          if (a < 1 || b < 1) fail("biclique sides must be at least 1");
          base = Graph::complete_bipartite(a, b);
        } else {
          if (a < 1) fail("clique order must be at least 1");
          base = Graph::complete(a);
        }
      }
    }
    for (int c = 0; c < count; ++c) {
      int offset = next_id;
      for (int v : base.vertices()) acc.add_vertex(offset + v);
      for (auto [u, v] : base.edges()) acc.add_edge(offset + u, offset + v);
      next_id += base.n();
    }
  }
};

std::optional<std::vector<int>> linear_forest_of(const Graph& g) {
  std::vector<int> orders;
  for (const auto& comp : connected_components(g)) {
    Graph sub = induced_subgraph(g, comp);
    // A path: acyclic connected with max degree <= 2.
    if (sub.m() != sub.n() - 1) return std::nullopt;
    for (int v : comp)
      if (sub.degree(v) > 2) return std::nullopt;
    orders.push_back(sub.n());
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

Pattern parse_pattern(const std::string& spec) {
  PatternParser p(spec);
  Graph g;
  int next_id = 0;
  p.parse_term(g, next_id);
  while (!p.eof()) {
    if (p.text[p.pos] != '+') p.fail("expected '+'");
    ++p.pos;
    p.parse_term(g, next_id);
  }
  if (g.n() == 0) p.fail("pattern is empty");
  Pattern out;
  out.graph = std::move(g);
  out.linear_forest = linear_forest_of(out.graph);
  out.spec = spec;
  return out;
}

Pattern pattern_from_graph(const Graph& g, const std::string& name) {
  if (g.n() == 0) throw std::invalid_argument("pattern graph must be nonempty");
  Pattern out;
  out.graph = g;
  out.linear_forest = linear_forest_of(g);
  out.spec = name;
  return out;
}

namespace {

// Backtracking injective embedding with forward checking. Pattern vertices
// are ordered component by component (largest first), inside a component in
// BFS order, so every vertex after the first of its component has an already
// matched neighbor.
struct EmbedSearch {
  const detail::DenseGraph& host;
  const detail::DenseGraph& pat;
  std::vector<int> order;
  std::vector<int> assign;                  // order position -> host index
  std::vector<std::uint64_t> cand;          // (depth+1) layers of candidate masks
  int words;

  EmbedSearch(const detail::DenseGraph& h, const detail::DenseGraph& p)
      : host(h), pat(p), words(h.words) {
    order = pattern_order();
    assign.assign(order.size(), -1);
    cand.assign((order.size() + 1) * order.size() * words, 0);
  }

  std::vector<int> pattern_order() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(pat.n, 0);
    for (int v = 0; v < pat.n; ++v) {
      if (seen[v]) continue;
      std::vector<int> comp, queue{v};
      seen[v] = 1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        comp.push_back(x);
        for (int u = 0; u < pat.n; ++u)
          if (!seen[u] && pat.adj(x, u)) {
            seen[u] = 1;
            queue.push_back(u);
          }
      }
      comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<int> out;
    for (const auto& c : comps) out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  std::uint64_t* layer(int depth, int slot) {
    return cand.data() + (static_cast<std::size_t>(depth) * order.size() + slot) * words;
  }

  bool run(std::optional<VertexSet>& witness) {
    if (host.n == 0) return false;
    int p = static_cast<int>(order.size());
    for (int slot = 0; slot < p; ++slot) {
      std::uint64_t* c = layer(0, slot);
      for (int w = 0; w < words; ++w) c[w] = ~std::uint64_t{0};
      int spare = host.n & 63;
      if (spare) c[words - 1] = (std::uint64_t{1} << spare) - 1;
    }
    if (dfs(0)) {
      VertexSet ids;
      for (int i = 0; i < p; ++i) ids.push_back(host.ids[assign[i]]);
      witness = make_vertex_set(std::move(ids));
      return true;
    }
    return false;
  }

  bool dfs(int depth) {
    int p = static_cast<int>(order.size());
    if (depth == p) return true;
    const std::uint64_t* mine = layer(depth, depth);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = mine[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int v = (w << 6) | b;
        assign[depth] = v;
        bool ok = true;
        for (int later = depth + 1; later < p; ++later) {
          const std::uint64_t* prev = layer(depth, later);
          std::uint64_t* next = layer(depth + 1, later);
          bool need = pat.adj(order[depth], order[later]);
          const std::uint64_t* hrow = host.row(v);
          for (int k = 0; k < words; ++k) next[k] = prev[k] & (need ? hrow[k] : ~hrow[k]);
          detail::clear_bit(next, v);
          std::uint64_t any = 0;
          for (int k = 0; k < words; ++k) any |= next[k];
          if (!any) {
            ok = false;
            break;
          }
        }
        if (ok && dfs(depth + 1)) return true;
      }
    }
    assign[depth] = -1;
    return false;
  }
};

}  // namespace

std::optional<VertexSet> contains_induced(const Graph& g, const Pattern& h) {
  if (h.order() == 0) throw std::invalid_argument("empty pattern");
  if (h.order() > g.n()) return std::nullopt;
  detail::DenseGraph host = detail::DenseGraph::from(g);
  detail::DenseGraph pat = detail::DenseGraph::from(h.graph);
  EmbedSearch search(host, pat);
  std::optional<VertexSet> witness;
  search.run(witness);
  return witness;
}

bool is_h_free(const Graph& g, const Pattern& h) { return !contains_induced(g, h).has_value(); }

std::string to_string(Complexity c) {
  switch (c) {
    case Complexity::PolynomialTime: return "polynomial";
    case Complexity::Quasipolynomial: return "quasipolynomial";
    case Complexity::NPComplete: return "np-complete";
    case Complexity::Open: return "open";
  }
  return "?";
}

namespace {

Graph family_graph(int s, const std::string& unit, const std::string& tail) {
  std::string spec;
  if (s > 0) spec = std::to_string(s) + unit;
  if (!tail.empty()) spec += (spec.empty() ? "" : "+") + tail;
  if (spec.empty()) throw std::invalid_argument("empty family");
  return parse_pattern(spec).graph;
}

bool within_family(const Pattern& h, const std::string& unit, const std::string& tail) {
  Graph fam = family_graph(h.order(), unit, tail);
  return contains_induced(fam, h).has_value();
}

bool exactly_sp1_plus_p6(const Pattern& h) {
  if (!h.linear_forest) return false;
  const auto& lf = *h.linear_forest;
  if (lf.empty() || lf.back() != 6) return false;
  return std::all_of(lf.begin(), lf.end() - 1, [](int o) { return o == 1; });
}

}  // namespace

bool within_p1_family(const Pattern& h, const std::string& tail) { return within_family(h, "P1", tail); }
bool within_p3_family(const Pattern& h, const std::string& tail) { return within_family(h, "P3", tail); }

std::optional<int> min_family_s(const Pattern& h, const std::string& unit, const std::string& tail) {
  for (int s = 0; s <= h.order(); ++s)
    if (contains_induced(family_graph(s, unit, tail), h).has_value()) return s;
  return std::nullopt;
}

DichotomyVerdict classify(const Pattern& h, const Mode& mode) {
  const bool forest = h.is_linear_forest();
  switch (mode.kind) {
    case Mode::Kind::EllFixed:
      if (within_p3_family(h, "P6"))
        return {Complexity::PolynomialTime, "fixed-ell dichotomy: H embeds in sP3+P6"};
      if (!forest)
        return {Complexity::NPComplete, "fixed-ell dichotomy: H is not a linear forest"};
      return {Complexity::Quasipolynomial, "fixed-ell dichotomy: linear forest beyond sP3+P6"};
    case Mode::Kind::General: {
      if (within_p1_family(h, "P5"))
        return {Complexity::PolynomialTime, "general dichotomy: H embeds in sP1+P5"};
      if (within_p1_family(h, "P3+P4"))
        return {Complexity::PolynomialTime, "general dichotomy: H embeds in sP1+P3+P4"};
      if (exactly_sp1_plus_p6(h))
        return {Complexity::Open, "general dichotomy: H = sP1+P6 (open)"};
      if (!forest)
        return {Complexity::NPComplete, "general dichotomy: H is not a linear forest"};
      Pattern p7 = parse_pattern("P7"), tp2 = parse_pattern("3P2");
      if (contains_induced(h.graph, tp2) || contains_induced(h.graph, p7))
        return {Complexity::NPComplete, "general dichotomy: H contains 3P2 or P7"};
      return {Complexity::NPComplete, "general dichotomy: H contains 2P4"};
    }
    case Mode::Kind::KFixed: {
      if (within_p1_family(h, "P6"))
        return {Complexity::PolynomialTime, "fixed-k dichotomy: H embeds in sP1+P6"};
      if (within_p1_family(h, "2P4"))
        return {Complexity::PolynomialTime, "fixed-k dichotomy: H embeds in sP1+2P4"};
      if (!forest)
        return {Complexity::NPComplete, "fixed-k dichotomy: H is not a linear forest"};
      return {Complexity::NPComplete, "fixed-k dichotomy: H contains 3P2 or P7"};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace indsub
